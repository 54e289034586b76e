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

#include "holo/dense/spectrum.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "holo/dense/linalg.h"
#include "holo/holography/channels.h"
#include "holo/isotns/transfer.h"

using namespace holo;

namespace {

std::vector<double> sorted_magnitudes(const Eigen::VectorXcd &v) {
    std::vector<double> m;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        m.push_back(std::abs(v(i)));
    }
    std::sort(m.rbegin(), m.rend());
    return m;
}

Vec vec_of(const Mat &m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

}  // namespace

TEST(spectrum, dephasing_channel_by_hand) {
    // rho -> (1-p) rho + p Z rho Z keeps the diagonal and scales coherences by 1-2p.
    KrausChannel c(1, "dephase");
    c.add_pauli_noise(PauliString::from_str("Z"), 0.2);
    SpectrumOptions opt;
    opt.k = 4;
    SpectrumReport r = leading_spectrum(c, opt);
    ASSERT_EQ(r.magnitudes.size(), 4u);
    EXPECT_NEAR(r.magnitudes[0], 1, 1e-14);
    EXPECT_NEAR(r.magnitudes[1], 1, 1e-14);
    EXPECT_NEAR(r.magnitudes[2], 0.6, 1e-14);
    EXPECT_NEAR(r.magnitudes[3], 0.6, 1e-14);
    EXPECT_EQ(r.degeneracy, 2u);
    EXPECT_NEAR(r.gap, 0.4, 1e-14);
}

TEST(spectrum, superoperator_matches_channel_action) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    KrausChannel c = ising_channel(3, 0.2, 0.35);
    Mat x(8, 8);
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            x(i, j) = cd(nd(rng), nd(rng));
        }
    }
    Vec want = vec_of(apply_channel(c, x));
    EXPECT_LT((build_superoperator(c) * vec_of(x) - want).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((SuperOperator(c).apply(vec_of(x)) - want).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_THROW(build_superoperator(c, 1024), std::length_error);
}

TEST(spectrum, krylov_matches_dense_eigensolver) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    size_t n = 200;
    Mat a(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            a(i, j) = cd(nd(rng), nd(rng)) / std::sqrt((double)n);
        }
    }
    // Plant three well separated eigenvalues on top of a random bulk of radius ~1.
    Mat q = a.householderQr().householderQ();
    Mat d = Mat::Zero(n, n);
    for (size_t i = 0; i < n; i++) {
        d(i, i) = 0.5 * cd(nd(rng), nd(rng)) / 2.0;
    }
    d(0, 0) = 3;
    d(1, 1) = cd(0, -2.5);
    d(2, 2) = -2;
    Mat m = q * d * q.adjoint();
    auto op = [&](const cd *in, cd *out) {
        Eigen::Map<Vec>(out, n) = m * Eigen::Map<const Vec>(in, n);
    };
    KrylovResult kr = block_krylov(op, n, 3, 1e-10, 500, 1);
    ASSERT_TRUE(kr.converged);
    std::vector<double> got;
    for (cd v : kr.values) {
        got.push_back(std::abs(v));
    }
    std::sort(got.rbegin(), got.rend());
    auto want = sorted_magnitudes(complex_general_eigen(m, false).values);
    for (int i = 0; i < 3; i++) {
        EXPECT_NEAR(got[i], want[i], 1e-9);
    }
}

TEST(spectrum, sector_resolution_preserves_eigenvalues) {
    TransferOperator t = ring_transfer_channel(w_tensor(0.5), 4);
    Mat s = build_superoperator(t.channel);
    auto want = sorted_magnitudes(complex_general_eigen(s, false).values);
    SpectrumOptions opt;
    opt.k = 12;
    opt.sectors = t.sectors();
    SpectrumReport r = leading_spectrum(t.channel, opt);
    ASSERT_GE(r.magnitudes.size(), 12u);
    for (size_t i = 0; i < 12; i++) {
        EXPECT_NEAR(r.magnitudes[i], want[i], 1e-10) << i;
    }
}

TEST(spectrum, krylov_and_explicit_methods_agree) {
    KrausChannel c = ising_channel(5, 0.3, 0.3);
    SpectrumOptions a;
    a.k = 4;
    a.method = SpectrumOptions::Method::Explicit;
    SpectrumOptions b = a;
    b.method = SpectrumOptions::Method::Krylov;
    SpectrumReport ra = leading_spectrum(c, a), rb = leading_spectrum(c, b);
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(ra.magnitudes[i], rb.magnitudes[i], 1e-9);
    }
    EXPECT_EQ(ra.degeneracy, rb.degeneracy);
}

TEST(spectrum, hermitian_helpers) {
    Mat h(2, 2);
    h << 2, cd(0, 1), cd(0, -1), 2;
    Eigen::VectorXd ev = hermitian_eigenvalues(h);
    EXPECT_NEAR(ev(0), 1, 1e-14);
    EXPECT_NEAR(ev(1), 3, 1e-14);
    Mat r = psd_sqrt(h);
    EXPECT_LT((r * r - h).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_NEAR(hermitian_trace_norm(h), 4, 1e-14);
}
