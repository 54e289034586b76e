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

#include "holo/diagnostics/symmetry.h"

#include <cmath>
#include <stdexcept>

#include "holo/dense/dense_operator.h"

namespace holo {

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Strong:
            return "strong";
        case SymmetryClass::WeakOnly:
            return "weak_only";
        default:
            return "none";
    }
}

namespace {

SymmetryVerdict classify(const Mat &rho, const Mat &u_rho, const Mat &u_rho_udag, double tol) {
    SymmetryVerdict v;
    double nr = rho.norm();
    if (nr == 0) {
        throw std::invalid_argument("symmetry_check on a zero operator");
    }
    // The minimizing phase is arg <ρ, Uρ> = arg Tr(ρ U ρ).
    cd overlap = (rho.adjoint().cwiseProduct(u_rho.transpose())).sum();
    v.phase = std::arg(overlap);
    v.strong_residual = (u_rho - std::polar(1.0, v.phase) * rho).norm() / nr;
    v.weak_residual = (u_rho_udag - rho).norm() / nr;
    if (v.strong_residual < tol && v.weak_residual < tol) {
        v.classification = SymmetryClass::Strong;
    } else if (v.weak_residual < tol) {
        v.classification = SymmetryClass::WeakOnly;
    }
    return v;
}

}  // namespace

SymmetryVerdict symmetry_check(const Mat &rho, const Mat &u, double tol) {
    size_t d = (size_t)u.rows();
    if ((u * u.adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("symmetry_check needs a unitary");
    }
    Mat ur = u * rho;
    return classify(rho, ur, ur * u.adjoint(), tol);
}

SymmetryVerdict symmetry_check(const Mat &rho, const PauliString &u, double tol) {
    return classify(rho, pauli_left(u, rho), pauli_conjugate(u, rho), tol);
}

}  // namespace holo
