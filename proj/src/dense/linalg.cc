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

#include "holo/dense/linalg.h"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace holo {

Eigen::VectorXd hermitian_eigenvalues(const Mat &h) {
    lapack_int n = (lapack_int)h.rows();
    if (h.cols() != h.rows()) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    }
    Eigen::VectorXd w(n);
    if (n == 0) {
        return w;
    }
    Mat a = h;
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, reinterpret_cast<lapack_complex_double *>(a.data()),
                                     n, w.data());
    if (info != 0) {
        throw std::runtime_error("zheevd failed with info=" + std::to_string(info));
    }
    return w;
}

HermitianEigen hermitian_eigen(const Mat &h) {
    lapack_int n = (lapack_int)h.rows();
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = h;
    if (n == 0) {
        return out;
    }
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                     reinterpret_cast<lapack_complex_double *>(out.vectors.data()), n,
                                     out.values.data());
    if (info != 0) {
        throw std::runtime_error("zheevd failed with info=" + std::to_string(info));
    }
    return out;
}

GeneralEigen real_general_eigen(const Eigen::MatrixXd &a_in, bool want_vectors) {
    lapack_int n = (lapack_int)a_in.rows();
    GeneralEigen out;
    out.values.resize(n);
    if (n == 0) {
        return out;
    }
    Eigen::MatrixXd a = a_in;
    Eigen::VectorXd wr(n), wi(n);
    Eigen::MatrixXd vr;
    if (want_vectors) {
        vr.resize(n, n);
    }
    lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, a.data(), n, wr.data(),
                                    wi.data(), nullptr, 1, want_vectors ? vr.data() : nullptr, want_vectors ? n : 1);
    if (info != 0) {
        throw std::runtime_error("dgeev failed with info=" + std::to_string(info));
    }
    for (lapack_int k = 0; k < n; k++) {
        out.values[k] = cd(wr[k], wi[k]);
    }
    if (want_vectors) {
        out.vectors.resize(n, n);
        for (lapack_int k = 0; k < n; k++) {
            if (wi[k] == 0.0) {
                out.vectors.col(k) = vr.col(k).cast<cd>();
            } else if (wi[k] > 0.0 && k + 1 < n) {
                // Conjugate pair stored as (re, im) columns.
                out.vectors.col(k) = vr.col(k).cast<cd>() + cd(0, 1) * vr.col(k + 1).cast<cd>();
                out.vectors.col(k + 1) = vr.col(k).cast<cd>() - cd(0, 1) * vr.col(k + 1).cast<cd>();
                k++;
            }
        }
    }
    return out;
}

GeneralEigen complex_general_eigen(const Mat &a_in, bool want_vectors) {
    lapack_int n = (lapack_int)a_in.rows();
    GeneralEigen out;
    out.values.resize(n);
    if (n == 0) {
        return out;
    }
    Mat a = a_in;
    if (want_vectors) {
        out.vectors.resize(n, n);
    }
    lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
                                    reinterpret_cast<lapack_complex_double *>(a.data()), n,
                                    reinterpret_cast<lapack_complex_double *>(out.values.data()), nullptr, 1,
                                    want_vectors ? reinterpret_cast<lapack_complex_double *>(out.vectors.data()) : nullptr,
                                    want_vectors ? n : 1);
    if (info != 0) {
        throw std::runtime_error("zgeev failed with info=" + std::to_string(info));
    }
    return out;
}

double hermitian_trace_norm(const Mat &h) {
    Mat herm = (h + h.adjoint()) * 0.5;
    return hermitian_eigenvalues(herm).cwiseAbs().sum();
}

Mat psd_sqrt(const Mat &h, double clip) {
    Mat herm = (h + h.adjoint()) * 0.5;
    HermitianEigen e = hermitian_eigen(herm);
    Eigen::VectorXd s(e.values.size());
    for (Eigen::Index k = 0; k < s.size(); k++) {
        s[k] = e.values[k] > clip ? std::sqrt(e.values[k]) : 0.0;
    }
    return e.vectors * s.cast<cd>().asDiagonal() * e.vectors.adjoint();
}

}  // namespace holo
