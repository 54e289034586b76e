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

#ifndef HOLO_HOLOGRAPHY_APPENDIX_H
#define HOLO_HOLOGRAPHY_APPENDIX_H

#include <string>
#include <vector>

namespace holo {

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Transcript of stabilizer-flow checks for one construction.
struct VerificationReport {
    std::string construction;
    std::vector<VerificationCheck> checks;
    bool all_passed() const;
    std::string transcript() const;
};

/// 1d ring -> 2d bulk: star and plaquette images, ZZZ top boundary, string
/// operators, top-row X symmetry, and which layer order gives the ZZZ boundary.
VerificationReport verify_ring_bulk(size_t L = 4, size_t depth = 3);
/// 2d 0-form -> 3d toric code: X^6 vertices, Z^4 plaquettes in all three planes.
VerificationReport verify_zero_form_bulk(size_t Lx = 3, size_t Ly = 3, size_t depth = 2);
/// 2d 1-form -> 3d toric code with a smooth top surface, including the
/// dependence of the in-plane X^4 image on the input's B_p = +1.
VerificationReport verify_one_form_bulk(size_t Lx = 3, size_t Ly = 3, size_t depth = 2);
/// Fermionic 1-form -> 3d fermionic toric code.
VerificationReport verify_fermionic_bulk(size_t Lx = 3, size_t Ly = 3, size_t depth = 2);
/// Subsystem symmetry -> fracton slab with truncated cubes on top.
VerificationReport verify_subsystem_bulk(size_t Lx = 3, size_t Ly = 3, size_t depth = 2);

/// Names: "ring", "zero_form", "one_form", "fermionic", "subsystem", or "all".
std::vector<VerificationReport> verify_constructions(const std::string &which);

}  // namespace holo

#endif
