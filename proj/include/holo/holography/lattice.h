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

#ifndef HOLO_HOLOGRAPHY_LATTICE_H
#define HOLO_HOLOGRAPHY_LATTICE_H

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace holo {

/// Qubit registry for a geometry. Every qubit carries a unique label such as
/// "r(2)" or "b(1,0|3)"; the label -> id map is a bijection onto 0..n-1.
class Lattice {
   public:
    enum class Kind { Ring1d, SquareCylinder, CubicSlab };

    Lattice() = default;
    Lattice(Kind kind, size_t lx, size_t ly, size_t lz);

    Kind kind() const { return kind_; }
    std::string kind_name() const;
    static Kind kind_from_name(const std::string &name);
    size_t lx() const { return lx_; }
    size_t ly() const { return ly_; }
    size_t lz() const { return lz_; }

    size_t add(const std::string &label);
    bool has(const std::string &label) const { return index_.count(label) > 0; }
    size_t id(const std::string &label) const;
    const std::string &label(size_t q) const { return labels_.at(q); }
    size_t num_qubits() const { return labels_.size(); }
    /// Qubits whose label starts with `prefix`, in id order.
    std::vector<size_t> select(const std::string &prefix) const;

    /// Boundary selectors filled in by the constructions.
    std::vector<size_t> top;
    std::vector<size_t> bottom;

    /// Throws unless the label map is a bijection.
    void validate() const;

   private:
    Kind kind_ = Kind::Ring1d;
    size_t lx_ = 0, ly_ = 0, lz_ = 0;
    std::vector<std::string> labels_;
    std::map<std::string, size_t> index_;
};

/// Periodic wrap of an integer coordinate into [0, n).
size_t wrap(long v, size_t n);

/// "name(a,b|c)" style label: coordinates joined by ',' and an optional time after '|'.
std::string site_label(const std::string &name, std::initializer_list<long> coords, long time = -1);

}  // namespace holo

#endif
