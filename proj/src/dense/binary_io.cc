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

#include "holo/dense/binary_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace holo {

static_assert(std::endian::native == std::endian::little, "binary container assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'H', 'O', 'L', 'O', 'D', 'O', 'P', '1'};
constexpr uint32_t kComplex128 = 1;
constexpr uint32_t kRowMajor = 0;

void put_u32(std::ostream &out, uint32_t v) { out.write(reinterpret_cast<const char *>(&v), 4); }

uint32_t get_u32(std::istream &in) {
    uint32_t v = 0;
    in.read(reinterpret_cast<char *>(&v), 4);
    if (!in) {
        throw std::runtime_error("truncated operator header");
    }
    return v;
}

}  // namespace

void write_dense_operator(std::ostream &out, const DenseOperator &op) {
    out.write(kMagic, 8);
    put_u32(out, (uint32_t)op.n_qubits);
    put_u32(out, kComplex128);
    put_u32(out, kRowMajor);
    size_t d = op.dim();
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            double buf[2] = {op.data(r, c).real(), op.data(r, c).imag()};
            out.write(reinterpret_cast<const char *>(buf), sizeof(buf));
        }
    }
    if (!out) {
        throw std::runtime_error("failed writing operator");
    }
}

DenseOperator read_dense_operator(std::istream &in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) {
        throw std::runtime_error("not a dense operator container");
    }
    uint32_t n = get_u32(in);
    uint32_t dtype = get_u32(in);
    uint32_t order = get_u32(in);
    if (dtype != kComplex128 || order != kRowMajor || n > 14) {
        throw std::runtime_error("unsupported operator container header");
    }
    size_t d = (size_t)1 << n;
    Mat m(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            double buf[2];
            in.read(reinterpret_cast<char *>(buf), sizeof(buf));
            m(r, c) = cd(buf[0], buf[1]);
        }
    }
    if (!in) {
        throw std::runtime_error("truncated operator payload");
    }
    return DenseOperator(n, std::move(m));
}

void save_dense_operator(const std::string &path, const DenseOperator &op) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path);
    }
    write_dense_operator(out, op);
}

DenseOperator load_dense_operator(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_dense_operator(in);
}

}  // namespace holo
