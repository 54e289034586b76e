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

#include "holo/dense/kraus_channel.h"

#include <cmath>
#include <stdexcept>

#include "holo/dense/dense_operator.h"

namespace holo {

KrausOp KrausOp::from_local(std::vector<size_t> sites, Mat m) {
    size_t d = (size_t)1 << sites.size();
    if ((size_t)m.rows() != d || (size_t)m.cols() != d) {
        throw std::invalid_argument("local Kraus matrix does not match its site list");
    }
    KrausOp k;
    k.sites = std::move(sites);
    k.local = std::move(m);
    return k;
}

KrausOp KrausOp::from_pauli(PauliString p, cd coeff) {
    KrausOp k;
    k.pauli = std::move(p);
    k.coeff = coeff;
    return k;
}

Mat KrausOp::full_matrix(size_t n) const {
    size_t d = (size_t)1 << n;
    if (pauli) {
        return coeff * pauli_matrix(*pauli);
    }
    return local_left(local, sites, Mat::Identity(d, d));
}

Mat KrausOp::left(const Mat &m) const {
    if (pauli) {
        return coeff * pauli_left(*pauli, m);
    }
    return local_left(local, sites, m);
}

Vec KrausOp::apply(const Vec &psi) const {
    if (pauli) {
        return coeff * pauli_apply(*pauli, psi);
    }
    return local_apply(local, sites, psi);
}

void KrausChannel::add_stage(ChannelStage s) {
    for (const auto &k : s.ops) {
        if (k.pauli && k.pauli->num_qubits() != n_) {
            throw std::invalid_argument("Pauli Kraus operator size mismatch");
        }
        for (size_t q : k.sites) {
            if (q >= n_) {
                throw std::out_of_range("Kraus site out of range");
            }
        }
    }
    stages_.push_back(std::move(s));
}

void KrausChannel::add_pauli_noise(const PauliString &p, double prob) {
    if (!(prob >= 0 && prob <= 1)) {
        throw std::invalid_argument("noise probability outside [0, 1]");
    }
    ChannelStage s;
    s.ops.push_back(KrausOp::from_pauli(PauliString(n_), std::sqrt(1 - prob)));
    if (prob > 0) {
        s.ops.push_back(KrausOp::from_pauli(p, std::sqrt(prob)));
    }
    add_stage(std::move(s));
}

void KrausChannel::append(const KrausChannel &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("channel size mismatch");
    }
    for (const auto &s : other.stages_) {
        stages_.push_back(s);
    }
    cptp_ = cptp_ && other.cptp_;
}

KrausChannel KrausChannel::repeated(size_t times) const {
    KrausChannel out(n_, name_, cptp_);
    for (size_t t = 0; t < times; t++) {
        for (const auto &s : stages_) {
            out.stages_.push_back(s);
        }
    }
    return out;
}

namespace {

bool shares_sites(const ChannelStage &s) {
    if (s.ops.empty() || s.ops[0].pauli) {
        return false;
    }
    for (const auto &k : s.ops) {
        if (k.pauli || k.sites != s.ops[0].sites) {
            return false;
        }
    }
    return true;
}

bool all_pauli(const ChannelStage &s) {
    for (const auto &k : s.ops) {
        if (!k.pauli) {
            return false;
        }
    }
    return true;
}

}  // namespace

double KrausChannel::cptp_defect() const {
    double worst = 0;
    for (const auto &s : stages_) {
        if (all_pauli(s)) {
            double w = 0;
            for (const auto &k : s.ops) {
                w += std::norm(k.coeff);
            }
            worst = std::max(worst, std::abs(w - 1));
            continue;
        }
        Mat acc;
        if (shares_sites(s)) {
            size_t d = (size_t)1 << s.ops[0].sites.size();
            acc = -Mat::Identity(d, d);
            for (const auto &k : s.ops) {
                acc += k.local.adjoint() * k.local;
            }
        } else {
            size_t d = (size_t)1 << n_;
            acc = -Mat::Identity(d, d);
            for (const auto &k : s.ops) {
                Mat km = k.full_matrix(n_);
                acc += km.adjoint() * km;
            }
        }
        worst = std::max(worst, acc.cwiseAbs().maxCoeff());
    }
    return worst;
}

double KrausChannel::strong_symmetry_residual(const Mat &sym) const {
    double worst = 0;
    for (const auto &s : stages_) {
        for (const auto &k : s.ops) {
            Mat km = k.full_matrix(n_);
            worst = std::max(worst, (km * sym - sym * km).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double KrausChannel::strong_symmetry_residual(const PauliString &sym) const {
    double worst = 0;
    for (const auto &s : stages_) {
        for (const auto &k : s.ops) {
            if (k.pauli) {
                if (!k.pauli->commutes(sym) && std::abs(k.coeff) > 0) {
                    worst = std::max(worst, 2 * std::abs(k.coeff));
                }
                continue;
            }
            Mat sl = pauli_matrix(sym.restricted(k.sites));
            worst = std::max(worst, (k.local * sl - sl * k.local).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

Mat apply_stage(const ChannelStage &s, const Mat &rho) {
    Mat out = Mat::Zero(rho.rows(), rho.cols());
    for (const auto &k : s.ops) {
        if (k.pauli) {
            double w = std::norm(k.coeff);
            if (w == 0) {
                continue;
            }
            if (k.pauli->is_identity()) {
                out += w * rho;
            } else {
                out += w * pauli_conjugate(*k.pauli, rho);
            }
        } else {
            out += local_right_adjoint(k.local, k.sites, local_left(k.local, k.sites, rho));
        }
    }
    return out;
}

Mat apply_channel(const KrausChannel &c, const Mat &rho) {
    size_t d = (size_t)1 << c.num_qubits();
    if ((size_t)rho.rows() != d || (size_t)rho.cols() != d) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    Mat cur = rho;
    for (const auto &s : c.stages()) {
        cur = apply_stage(s, cur);
    }
    return cur;
}

KrausChannel identity_channel(size_t n) { return KrausChannel(n, "identity", true); }

}  // namespace holo
