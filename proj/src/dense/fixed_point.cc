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

#include "holo/dense/fixed_point.h"

#include <cmath>

namespace holo {

namespace {

/// Trace norm of a difference, skipping the eigensolve when the Frobenius bound decides.
double trace_norm_bounded(const Mat &diff, double tol, bool *exact) {
    double fro = diff.norm();
    double bound = std::sqrt((double)diff.rows()) * fro;
    *exact = false;
    if (bound < tol || fro >= tol) {
        return bound < tol ? bound : fro;
    }
    *exact = true;
    Mat h = (diff + diff.adjoint()) * 0.5;
    Mat a = (diff - diff.adjoint()) * 0.5;
    double out = hermitian_trace_norm(h);
    if (a.norm() > 0) {
        out += hermitian_trace_norm(a * cd(0, -1));
    }
    return out;
}

}  // namespace

FixedPointResult iterate_to_fixed_point(const KrausChannel &c, const Mat &rho0, const FixedPointOptions &opt) {
    FixedPointResult res;
    Mat rho = rho0;
    size_t next_check = 1;
    for (size_t it = 1; it <= opt.max_iter; it++) {
        Mat nxt = apply_channel(c, rho);
        if (opt.renormalize) {
            cd tr = nxt.trace();
            if (std::abs(tr) == 0) {
                res.rho = nxt;
                res.iterations = it;
                res.residual = INFINITY;
                return res;
            }
            nxt /= tr;
        }
        if (opt.hermitize) {
            nxt = ((nxt + nxt.adjoint()) * 0.5).eval();
        }
        if (it == next_check || it == opt.max_iter) {
            bool exact = false;
            double r = trace_norm_bounded(nxt - rho, opt.tol, &exact);
            res.residual = r;
            if (r < opt.tol) {
                // Certify the returned state itself.
                Mat again = apply_channel(c, nxt);
                if (opt.renormalize) {
                    again /= again.trace();
                }
                double r2 = trace_norm_bounded(again - nxt, opt.tol, &exact);
                if (r2 < opt.tol) {
                    res.rho = std::move(nxt);
                    res.iterations = it;
                    res.converged = true;
                    res.residual = r2;
                    return res;
                }
            }
            next_check = it < 16 ? it + 1 : it + std::max<size_t>(1, it / 8);
        }
        rho = std::move(nxt);
    }
    res.rho = std::move(rho);
    res.iterations = opt.max_iter;
    return res;
}

}  // namespace holo
