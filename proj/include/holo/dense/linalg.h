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

#ifndef HOLO_DENSE_LINALG_H
#define HOLO_DENSE_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace holo {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is read.
Eigen::VectorXd hermitian_eigenvalues(const Mat &h);

struct HermitianEigen {
    Eigen::VectorXd values;
    Mat vectors;
};
HermitianEigen hermitian_eigen(const Mat &h);

struct GeneralEigen {
    Eigen::VectorXcd values;
    /// Right eigenvectors as columns; empty unless requested.
    Mat vectors;
};
/// Nonsymmetric eigenproblem (LAPACK dgeev).
GeneralEigen real_general_eigen(const Eigen::MatrixXd &a, bool want_vectors);
/// Nonsymmetric complex eigenproblem (LAPACK zgeev).
GeneralEigen complex_general_eigen(const Mat &a, bool want_vectors);

/// Sum of |eigenvalues| of the Hermitian part.
double hermitian_trace_norm(const Mat &h);

/// Principal square root of a PSD Hermitian matrix, eigenvalues clipped below `clip`.
Mat psd_sqrt(const Mat &h, double clip = 1e-12);

}  // namespace holo

#endif
