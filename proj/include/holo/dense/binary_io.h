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

#ifndef HOLO_DENSE_BINARY_IO_H
#define HOLO_DENSE_BINARY_IO_H

#include <iosfwd>
#include <string>

#include "holo/dense/dense_operator.h"

namespace holo {

/// Binary container:
///   8 bytes magic "HOLODOP1"
///   uint32 n_qubits, uint32 dtype tag (1 = complex128), uint32 order tag (0 = row major)
///   4^n complex doubles (re, im), little endian, row major.
void write_dense_operator(std::ostream &out, const DenseOperator &op);
DenseOperator read_dense_operator(std::istream &in);
void save_dense_operator(const std::string &path, const DenseOperator &op);
DenseOperator load_dense_operator(const std::string &path);

}  // namespace holo

#endif
