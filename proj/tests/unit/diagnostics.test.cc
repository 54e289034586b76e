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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "holo/dense/dense_operator.h"
#include "holo/diagnostics/csv.h"
#include "holo/diagnostics/entropy.h"
#include "holo/diagnostics/fidelity.h"
#include "holo/diagnostics/symmetry.h"

using namespace holo;

namespace {

// CZX on a ring of n qubits: prod X times prod CZ on neighbouring pairs.
Mat czx(size_t n) {
    size_t d = (size_t)1 << n;
    Mat u = Mat::Zero(d, d);
    uint64_t all = d - 1;
    for (size_t b = 0; b < d; b++) {
        size_t c = b ^ all;
        int s = 0;
        for (size_t q = 0; q < n; q++) {
            s += ((c >> q) & 1) & ((c >> ((q + 1) % n)) & 1);
        }
        u(c, b) = (s % 2) ? -1.0 : 1.0;
    }
    return u;
}

}  // namespace

TEST(diagnostics, entropy_of_simple_states) {
    EXPECT_NEAR(von_neumann_entropy(Mat::Identity(8, 8) / 8.0), 3, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(pure_density(product_state("+0-"))), 0, 1e-12);
    Mat r = Mat::Zero(2, 2);
    r(0, 0) = 0.25;
    r(1, 1) = 0.75;
    EXPECT_NEAR(von_neumann_entropy(r), -0.25 * std::log2(0.25) - 0.75 * std::log2(0.75), 1e-14);
    Mat neg = r;
    neg(0, 0) = -0.1;
    neg(1, 1) = 1.1;
    EXPECT_THROW(von_neumann_entropy(neg), std::domain_error);
}

TEST(diagnostics, cmi_of_classical_ghz) {
    // (|000><000| + |111><111|)/2 on a ring A B C: I(A:C|B) = 0.
    Mat rho = Mat::Zero(8, 8);
    rho(0, 0) = rho(7, 7) = 0.5;
    EXPECT_NEAR(cmi(rho, Partition::from_sets(3, {0}, {1}, {2})), 0, 1e-12);
    // (1 + XXXX)/16: I(A:C|B) = 1 bit for A=0, B={1,3}, C=2.
    Mat x4 = pauli_matrix(PauliString::from_str("XXXX"));
    Mat s = (Mat::Identity(16, 16) + x4) / 16.0;
    EXPECT_NEAR(cmi(s, Partition::ring(4, 1, 1, 1, 1)), 1, 1e-12);
}

TEST(diagnostics, fidelity_closed_forms) {
    Vec a = product_state("0"), b = product_state("+");
    EXPECT_NEAR(uhlmann_fidelity(pure_density(a), pure_density(b)), std::sqrt(0.5), 1e-10);
    Mat p = Mat::Zero(2, 2), q = Mat::Zero(2, 2);
    p(0, 0) = 0.3;
    p(1, 1) = 0.7;
    q(0, 0) = 0.6;
    q(1, 1) = 0.4;
    EXPECT_NEAR(uhlmann_fidelity(p, q), std::sqrt(0.18) + std::sqrt(0.28), 1e-12);
    EXPECT_NEAR(uhlmann_fidelity(p, p), 1, 1e-12);
}

TEST(diagnostics, fidelity_correlator_on_cat_mixture) {
    size_t L = 4;
    Mat all_x = pauli_matrix(PauliString::from_str("XXXX"));
    Mat rho = (Mat::Identity(16, 16) + all_x) / 16.0;
    PauliString z0 = PauliString::from_str("ZIII"), z2 = PauliString::from_str("IIZI");
    EXPECT_NEAR(fidelity_correlator(rho, z0, z2), 1, 1e-10);
    EXPECT_NEAR(two_point(rho, z0, z2).real(), 0, 1e-14);
    Mat plus = pure_density(product_state(std::string(L, '+')));
    EXPECT_NEAR(fidelity_correlator(plus, z0, z2), 0, 1e-6);
    Mat notunitary = Mat::Identity(16, 16) * 2.0;
    EXPECT_THROW(fidelity_correlator(rho, notunitary, notunitary), std::invalid_argument);
}

TEST(diagnostics, czx_strong_symmetry) {
    size_t n = 4, d = 16;
    Mat u = czx(n);
    ASSERT_LT((u * u - Mat::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-15);
    Mat rho = (Mat::Identity(d, d) + u) / (double)d;
    SymmetryVerdict v = symmetry_check(rho, u);
    EXPECT_EQ(v.classification, SymmetryClass::Strong);
    EXPECT_LT(v.strong_residual, 1e-12);
    EXPECT_NEAR(v.phase, 0, 1e-12);
    // Charge -1 sector: U rho = -rho.
    Mat odd = (Mat::Identity(d, d) - u) / (double)d;
    SymmetryVerdict w = symmetry_check(odd, u);
    EXPECT_EQ(w.classification, SymmetryClass::Strong);
    EXPECT_NEAR(std::abs(w.phase), M_PI, 1e-12);
}

TEST(diagnostics, weak_and_broken_symmetry) {
    Mat plus = pure_density(product_state("+")), minus = pure_density(product_state("-"));
    Mat mix = 0.3 * plus + 0.7 * minus;
    PauliString x = PauliString::from_str("X");
    EXPECT_EQ(symmetry_check(mix, x).classification, SymmetryClass::WeakOnly);
    EXPECT_EQ(symmetry_check(pure_density(product_state("0")), x).classification, SymmetryClass::None);
    EXPECT_EQ(to_string(SymmetryClass::WeakOnly), "weak_only");
}

TEST(diagnostics, csv_format) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(2), "2");
    EXPECT_EQ(format_double(NAN), "nan");
    CsvTable t;
    t.add(CsvRow{"exp", 4, 0.5, 0, "cmi", 1, "a=1,b=2"});
    EXPECT_EQ(t.str(), std::string(CsvTable::header()) + "\nexp,4,0.5,0,cmi,1,\"a=1,b=2\"\n");
}
