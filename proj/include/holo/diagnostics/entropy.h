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

#ifndef HOLO_DIAGNOSTICS_ENTROPY_H
#define HOLO_DIAGNOSTICS_ENTROPY_H

#include <vector>

#include "holo/dense/linalg.h"
#include "holo/pauli/partition.h"

namespace holo {

/// Clip threshold below which eigenvalues contribute nothing.
constexpr double kEntropyClip = 1e-14;

/// -sum λ log2 λ of a density matrix. Eigenvalues in [-1e-8, 0) are clipped to zero;
/// anything more negative throws std::domain_error.
double von_neumann_entropy(const Mat &rho);
/// Entropy of the reduced state on `region` (qubit indices of an n-qubit register).
double von_neumann_entropy(const Mat &rho, size_t n, const std::vector<size_t> &region);

/// S(AB) + S(BC) - S(B) - S(ABC) in bits. Throws if the result is below -1e-8.
double cmi(const Mat &rho, const Partition &p);

}  // namespace holo

#endif
