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

#ifndef HOLO_DIAGNOSTICS_FIDELITY_H
#define HOLO_DIAGNOSTICS_FIDELITY_H

#include "holo/dense/linalg.h"
#include "holo/pauli/pauli_string.h"

namespace holo {

/// Tr sqrt(sqrt(ρ) σ sqrt(ρ)), evaluated as the trace norm ||sqrt(ρ) sqrt(σ)||_1
/// (sum of singular values). Square roots via Hermitian eigendecomposition,
/// eigenvalues clipped at 1e-12.
double uhlmann_fidelity(const Mat &rho, const Mat &sigma);

/// F(ρ, W ρ W†) with W = O_i O_j. Throws unless both operators are unitary.
double fidelity_correlator(const Mat &rho, const Mat &oi, const Mat &oj);
double fidelity_correlator(const Mat &rho, const PauliString &oi, const PauliString &oj);

/// Tr(ρ O_i O_j).
cd two_point(const Mat &rho, const Mat &oi, const Mat &oj);
cd two_point(const Mat &rho, const PauliString &oi, const PauliString &oj);

}  // namespace holo

#endif
