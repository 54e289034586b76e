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

#ifndef HOLO_DENSE_DENSE_OPERATOR_H
#define HOLO_DENSE_DENSE_OPERATOR_H

#include <cstdint>
#include <string>
#include <vector>

#include "holo/dense/linalg.h"
#include "holo/pauli/pauli_string.h"
#include "holo/pauli/stabilizer_group.h"

namespace holo {

/// Dense operator on n qubits. Basis index b has qubit q in bit q (little endian).
struct DenseOperator {
    size_t n_qubits = 0;
    Mat data;
    std::vector<std::string> site_labels;

    DenseOperator() = default;
    DenseOperator(size_t n, Mat m);
    size_t dim() const { return (size_t)1 << n_qubits; }
};

/// Density matrix with validation of the physical invariants.
struct DensityMatrix : DenseOperator {
    DensityMatrix() = default;
    DensityMatrix(size_t n, Mat m);
    /// Hermitian to herm_tol, trace one to trace_tol, eigenvalues above -neg_tol. Throws otherwise.
    void validate(double herm_tol = 1e-12, double trace_tol = 1e-12, double neg_tol = 1e-10) const;
};

/// Full 2^n matrix of a Pauli string (including its phase).
Mat pauli_matrix(const PauliString &p);

/// Returns P rho P† for a Pauli P. Cost O(4^n).
Mat pauli_conjugate(const PauliString &p, const Mat &rho);
/// Returns P m (left multiplication only).
Mat pauli_left(const PauliString &p, const Mat &m);
/// Applies P to a state vector.
Vec pauli_apply(const PauliString &p, const Vec &psi);

/// out = S in, where S acts on the listed bit positions of a vector over 2^num_bits entries.
/// `in` and `out` must not alias.
void apply_local_bits(const Mat &s, const std::vector<size_t> &bits, size_t num_bits, const cd *in, cd *out);

/// K m for a local matrix K acting on `sites` (local bit j <-> qubit sites[j]).
Mat local_left(const Mat &k, const std::vector<size_t> &sites, const Mat &m);
/// m K† for a local matrix K.
Mat local_right_adjoint(const Mat &k, const std::vector<size_t> &sites, const Mat &m);
/// Applies a local matrix to a state vector.
Vec local_apply(const Mat &k, const std::vector<size_t> &sites, const Vec &psi);

/// Product state; letters in {0,1,+,-}.
Vec product_state(const std::string &letters);
Mat pure_density(const Vec &psi);

/// Partial trace keeping `keep` (result qubit j is keep[j]).
Mat partial_trace(const Mat &rho, size_t n, const std::vector<size_t> &keep);

/// rho = prod_i (1+g_i)/2 / 2^(n-k) for a stabilizer group.
Mat stabilizer_density(const StabilizerGroup &g);

/// (1/2)||a-b||_1 for Hermitian a, b.
double trace_distance(const Mat &a, const Mat &b);

/// Projector (1 + s P)/2 for Hermitian Pauli P and s = ±1, as a full matrix.
Mat pauli_projector(const PauliString &p, int eigenvalue);

}  // namespace holo

#endif
