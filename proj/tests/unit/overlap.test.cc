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

#include "holo/holography/overlap.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace holo;

namespace {

// The X strings on x-links with unit toric-code expectation are products of whole
// star columns. Choosing a set of columns c in {0,1}^Lx flips Ly x-links at every
// domain wall of c, and c and its complement give the same string, so the sum is a
// two-state transfer-matrix trace with a = t^Ly, t = tanh(2 g_z).
double closed_form(double g_z, size_t lx, size_t ly) {
    double t = std::tanh(2 * g_z);
    double a = std::pow(t, (double)ly);
    return (std::pow(1 + a, (double)lx) + std::pow(1 - a, (double)lx)) / 2;
}

}  // namespace

TEST(overlap, matches_closed_form) {
    for (size_t ly : {2, 3}) {
        for (double gz : {0.0, 0.1, 0.3, 0.4}) {
            for (double gx : {0.0, 0.3}) {
                OverlapResult r = overlap_check(gx, gz, 3, ly);
                EXPECT_NEAR(r.overlap, closed_form(gz, 3, ly), 1e-12) << ly << " " << gz << " " << gx;
                EXPECT_NEAR(r.deviation, std::abs(r.overlap - 1), 1e-15);
                EXPECT_EQ(r.num_qubits, 3 * ly + 3 * (ly - 1));
            }
        }
    }
}

TEST(overlap, undeformed_state_is_normalized) {
    EXPECT_NEAR(overlap_check(0, 0, 2, 2).deviation, 0, 1e-13);
}

TEST(overlap, deviation_shrinks_with_height_and_grows_with_g) {
    double prev = INFINITY;
    for (size_t ly : {2, 3, 4}) {
        double d = overlap_check(0, 0.3, 3, ly).deviation;
        EXPECT_LT(d, prev / 2);
        prev = d;
    }
    double last = -1;
    for (double gz : {0.0, 0.1, 0.2, 0.3, 0.4}) {
        double d = overlap_check(0.3, gz, 3, 3).deviation;
        EXPECT_GE(d, last);
        last = d;
    }
}

TEST(overlap, register_limit) { EXPECT_THROW(overlap_check(0, 0.1, 3, 5), std::length_error); }
