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

#ifndef HOLO_HOLOGRAPHY_DEFORMATION_H
#define HOLO_HOLOGRAPHY_DEFORMATION_H

namespace holo {

/// Noise probability p and the matching imaginary-time strength g with e^{2g} p = 1 - p.
/// g is +infinity at p = 0 (zero_noise set) and negative for p > 1/2.
struct DeformationParams {
    double p = 0.5;
    double g = 0;
    bool zero_noise = false;
    bool full_noise = false;
};

/// g = (1/2) ln((1-p)/p). Throws std::domain_error for p outside [0, 1].
DeformationParams noise_to_deformation(double p);

/// tanh(2g), the loop weight of the overlap expansion; 1 at p = 0.
double loop_weight(const DeformationParams &d);

}  // namespace holo

#endif
