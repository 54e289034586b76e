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

#include "holo/diagnostics/fidelity.h"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "holo/dense/dense_operator.h"

namespace holo {

namespace {

void check_unitary(const Mat &u) {
    size_t d = (size_t)u.rows();
    if ((u * u.adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("fidelity correlator needs unitary operators");
    }
}

}  // namespace

double uhlmann_fidelity(const Mat &rho, const Mat &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
    }
    Mat hr = (rho + rho.adjoint()) * 0.5;
    Mat hs = (sigma + sigma.adjoint()) * 0.5;
    Mat a = psd_sqrt(hr) * psd_sqrt(hs);
    return Eigen::BDCSVD<Mat>(a).singularValues().sum();
}

double fidelity_correlator(const Mat &rho, const Mat &oi, const Mat &oj) {
    check_unitary(oi);
    check_unitary(oj);
    Mat w = oi * oj;
    return uhlmann_fidelity(rho, w * rho * w.adjoint());
}

double fidelity_correlator(const Mat &rho, const PauliString &oi, const PauliString &oj) {
    return uhlmann_fidelity(rho, pauli_conjugate(oi * oj, rho));
}

cd two_point(const Mat &rho, const Mat &oi, const Mat &oj) { return (rho * oi * oj).trace(); }

cd two_point(const Mat &rho, const PauliString &oi, const PauliString &oj) {
    // Tr(ρ P) = Tr(P ρ).
    return pauli_left(oi * oj, rho).trace();
}

}  // namespace holo
