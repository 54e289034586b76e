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

#ifndef HOLO_DENSE_FIXED_POINT_H
#define HOLO_DENSE_FIXED_POINT_H

#include "holo/dense/kraus_channel.h"

namespace holo {

struct FixedPointOptions {
    double tol = 1e-10;
    size_t max_iter = 1000000;
    /// Divide by the trace after every step (needed for non trace-preserving maps).
    bool renormalize = false;
    /// Replace the iterate by its Hermitian part after every step.
    bool hermitize = false;
};

struct FixedPointResult {
    Mat rho;
    size_t iterations = 0;
    bool converged = false;
    /// ||c(rho) - rho||_1 at the last checkpoint (an upper bound when only the cheap test was needed).
    double residual = 0;
};

/// Iterates rho <- c(rho) until ||c(rho) - rho||_1 < tol. Residuals are checked at
/// geometrically spaced checkpoints. Non-convergence is reported, not thrown.
FixedPointResult iterate_to_fixed_point(const KrausChannel &c, const Mat &rho0, const FixedPointOptions &opt = {});

}  // namespace holo

#endif
