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

#ifndef HOLO_DIAGNOSTICS_SYMMETRY_H
#define HOLO_DIAGNOSTICS_SYMMETRY_H

#include <string>

#include "holo/dense/linalg.h"
#include "holo/pauli/pauli_string.h"

namespace holo {

enum class SymmetryClass : unsigned char { Strong, WeakOnly, None };

struct SymmetryVerdict {
    SymmetryClass classification = SymmetryClass::None;
    /// min_θ ||Uρ - e^{iθ}ρ||_2 / ||ρ||_2
    double strong_residual = 0;
    /// ||UρU† - ρ||_2 / ||ρ||_2
    double weak_residual = 0;
    /// Optimal θ.
    double phase = 0;
};

std::string to_string(SymmetryClass c);

/// Strong/weak classification of ρ under a unitary U.
SymmetryVerdict symmetry_check(const Mat &rho, const Mat &u, double tol = 1e-10);
SymmetryVerdict symmetry_check(const Mat &rho, const PauliString &u, double tol = 1e-10);

}  // namespace holo

#endif
