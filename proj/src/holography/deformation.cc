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

#include "holo/holography/deformation.h"

#include <cmath>
#include <stdexcept>

namespace holo {

DeformationParams noise_to_deformation(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::domain_error("noise probability outside [0, 1]");
    }
    DeformationParams d;
    d.p = p;
    if (p == 0) {
        d.g = INFINITY;
        d.zero_noise = true;
    } else if (p == 1) {
        d.g = -INFINITY;
        d.full_noise = true;
    } else {
        d.g = 0.5 * std::log((1 - p) / p);
    }
    return d;
}

double loop_weight(const DeformationParams &d) {
    if (d.zero_noise) {
        return 1;
    }
    if (d.full_noise) {
        return -1;
    }
    return std::tanh(2 * d.g);
}

}  // namespace holo
