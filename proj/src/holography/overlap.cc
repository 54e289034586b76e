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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace holo {

OverlapResult overlap_check(double g_x, double g_z, size_t Lx, size_t Ly) {
    if (Lx < 2 || Ly < 1) {
        throw std::invalid_argument("cylinder needs Lx >= 2 and Ly >= 1");
    }
    size_t nx = Lx * Ly, ny = Lx * (Ly - 1), n = nx + ny;
    if (n > kMaxOverlapQubits) {
        throw std::length_error("cylinder too large for the dense overlap");
    }
    auto xlink = [&](size_t x, size_t y) { return (x % Lx) + Lx * y; };
    auto ylink = [&](size_t x, size_t y) { return nx + (x % Lx) + Lx * y; };

    size_t dim = (size_t)1 << n;
    std::vector<double> psi(dim, 0.0), tmp(dim);
    psi[0] = 1;
    for (size_t y = 0; y < Ly; y++) {
        for (size_t x = 0; x < Lx; x++) {
            uint64_t m = (uint64_t{1} << xlink(x, y)) | (uint64_t{1} << xlink(x + Lx - 1, y));
            if (y + 1 < Ly) {
                m |= uint64_t{1} << ylink(x, y);
            }
            if (y > 0) {
                m |= uint64_t{1} << ylink(x, y - 1);
            }
            for (size_t b = 0; b < dim; b++) {
                tmp[b] = 0.5 * (psi[b] + psi[b ^ m]);
            }
            psi.swap(tmp);
        }
    }
    double norm = 0;
    for (double v : psi) {
        norm += v * v;
    }
    for (double &v : psi) {
        v /= std::sqrt(norm);
    }

    double tx = std::tanh(2 * g_x), tz = std::tanh(2 * g_z);
    std::vector<double> phi = psi;
    for (size_t e = nx; e < n; e++) {
        for (size_t b = 0; b < dim; b++) {
            phi[b] *= 1 + tx * (((b >> e) & 1) ? -1.0 : 1.0);
        }
    }
    for (size_t e = 0; e < nx; e++) {
        uint64_t m = uint64_t{1} << e;
        for (size_t b = 0; b < dim; b++) {
            tmp[b] = phi[b] + tz * phi[b ^ m];
        }
        phi.swap(tmp);
    }
    double ov = 0;
    for (size_t b = 0; b < dim; b++) {
        ov += psi[b] * phi[b];
    }
    return OverlapResult{ov, std::abs(ov - 1), n};
}

}  // namespace holo
