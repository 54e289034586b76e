// Copyright 2026 The holochannel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLO_ISOTNS_W_TENSOR_H
#define HOLO_ISOTNS_W_TENSOR_H

#include <array>

#include <Eigen/Dense>

#include "holo/dense/linalg.h"
#include "json.hpp"

namespace holo {

/// The one-parameter W tensor, rows grouped as (i j) -> 2i+j and columns as (m n) -> 2m+n:
///
///     [ 1  f  f  |g| ]
///     [ f  a  a  f   ]    a = sqrt((1+g^2)/2),  f = 0 for g >= 0, |g| for g < 0
///     [ f  a  a  f   ]
///     [ |g| f f  1   ]
///
/// with every row scaled to unit norm.
struct WTensor {
    double g = 1;
    Eigen::Matrix4d entries;
    /// Row scale factor: (1+g^2)^{-1/2} for g >= 0, (1+3g^2)^{-1/2} for g < 0.
    double normalization = 1;

    double entry(int i, int j, int m, int n) const { return entries(2 * i + j, 2 * m + n); }
    nlohmann::json to_json() const;
};

/// Closed-form row normalization constant.
double w_normalization(double g);
WTensor w_tensor(double g);

/// T^{σγ}_{ijmn} = δ_{γ i} δ_{σ j} W_{ijmn}. Each (σ, γ) gives a Kraus operator on two
/// virtual qubits, stored with local index (first site bit) + 2 (second site bit):
///   kraus[2σ+γ](m + 2n, i + 2j) = T^{σγ}_{ijmn}.
struct PlumbedTensor {
    WTensor w;
    std::array<Mat, 4> kraus;

    double entry(int sigma, int gamma, int i, int j, int m, int n) const;
    /// max |sum_{σγmn} conj(T_{ijmn}) T_{i'j'mn} - δδ|.
    double isometry_defect() const;
};

/// Throws std::domain_error when the isometry defect exceeds `tol`.
PlumbedTensor plumb(const WTensor &w, double tol = 1e-12);

}  // namespace holo

#endif
