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

#ifndef HOLO_ISOTNS_TRANSFER_H
#define HOLO_ISOTNS_TRANSFER_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holo/dense/fixed_point.h"
#include "holo/dense/kraus_channel.h"
#include "holo/dense/sector.h"
#include "holo/isotns/w_tensor.h"
#include "json.hpp"

namespace holo {

/// Row transfer map on an L-site virtual ring, built as a staircase of two-site
/// maps on bonds (0,1), (1,2), ..., (L-1,0).
struct TransferOperator {
    size_t L = 0;
    double g = 1;
    bool cptp = true;
    std::string ordering = "staircase";
    /// -log g for the deformed map, 0 otherwise.
    double beta = 0;
    /// Amplitude weight per physical index value.
    std::array<double, 2> weights{1.0, 1.0};
    std::vector<std::pair<size_t, size_t>> bonds;
    KrausChannel channel;
    /// Every Kraus operator commutes with prod Z.
    bool z2_symmetric = false;
    /// Every Kraus operator conserves the number of 1s.
    bool u1_symmetric = false;
    /// The map commutes with conjugation by prod X.
    bool flip_symmetric = false;

    nlohmann::json metadata() const;
    /// Strong charges (and the weak flip when present) for sector-resolved spectra.
    SectorSpec sectors() const;
};

TransferOperator ring_transfer_channel(const WTensor &w, size_t L);

/// The g = 1 plumbed tensor with every physical index σ carrying amplitude weight
/// (1, g)[σ] in both layers. Not trace preserving for g < 1.
TransferOperator deformed_tc_transfer(double g, size_t L);

struct BoundaryRdmOptions {
    double tol = 1e-12;
    size_t max_iter = 200000;
};

/// Boundary state of the network: fixed point of the CPTP map from the sector-projected
/// maximally mixed input, or the normalized leading eigen-operator of a non-CPTP map
/// followed by the physical weights of the top row. `sector` is the prod Z eigenvalue.
Mat boundary_rdm(const TransferOperator &t, std::optional<int> sector, const BoundaryRdmOptions &opt = {});

}  // namespace holo

#endif
