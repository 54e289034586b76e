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

#include "holo/dense/spectrum.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "holo/dense/dense_operator.h"

namespace holo {

namespace {

const cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

Mat embed_local(const KrausOp &k, const std::vector<size_t> &uni) {
    size_t du = (size_t)1 << uni.size();
    if (k.pauli) {
        PauliString r = k.pauli->restricted(uni);
        return k.coeff * kIPow[k.pauli->phase()] * pauli_matrix(r);
    }
    std::vector<size_t> pos;
    for (size_t q : k.sites) {
        pos.push_back((size_t)(std::find(uni.begin(), uni.end(), q) - uni.begin()));
    }
    return local_left(k.local, pos, Mat::Identity(du, du));
}

Mat orthonormal_columns(const Mat &x) {
    Eigen::HouseholderQR<Mat> qr(x);
    return qr.householderQ() * Mat::Identity(x.rows(), x.cols());
}

}  // namespace

SuperOperator::SuperOperator(const KrausChannel &c) : n_(c.num_qubits()) {
    for (const auto &stage : c.stages()) {
        std::vector<size_t> uni;
        for (const auto &k : stage.ops) {
            auto s = k.pauli ? k.pauli->support() : k.sites;
            uni.insert(uni.end(), s.begin(), s.end());
        }
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        Step step;
        if (uni.size() > 3) {
            step.fallback = &stage;
            steps_.push_back(std::move(step));
            continue;
        }
        size_t du = (size_t)1 << uni.size();
        Mat sup = Mat::Zero(du * du, du * du);
        for (const auto &k : stage.ops) {
            Mat ku = embed_local(k, uni);
            for (size_t l2b = 0; l2b < du; l2b++) {
                for (size_t l2 = 0; l2 < du; l2++) {
                    for (size_t l1b = 0; l1b < du; l1b++) {
                        cd kb = std::conj(ku(l1b, l2b));
                        if (kb == cd(0)) {
                            continue;
                        }
                        for (size_t l1 = 0; l1 < du; l1++) {
                            sup(l1 + du * l1b, l2 + du * l2b) += ku(l1, l2) * kb;
                        }
                    }
                }
            }
        }
        for (size_t q : uni) {
            step.bits.push_back(q);
        }
        for (size_t q : uni) {
            step.bits.push_back(n_ + q);
        }
        step.local = std::move(sup);
        steps_.push_back(std::move(step));
    }
}

void SuperOperator::apply(const cd *in, cd *out) const {
    size_t dd = dim();
    size_t d = (size_t)1 << n_;
    std::vector<cd> a(in, in + dd), b(dd);
    for (const auto &s : steps_) {
        if (s.fallback) {
            Eigen::Map<const Mat> x(a.data(), (Eigen::Index)d, (Eigen::Index)d);
            Mat y = apply_stage(*s.fallback, x);
            std::copy(y.data(), y.data() + dd, b.begin());
        } else {
            apply_local_bits(s.local, s.bits, 2 * n_, a.data(), b.data());
        }
        std::swap(a, b);
    }
    std::copy(a.begin(), a.end(), out);
}

Vec SuperOperator::apply(const Vec &v) const {
    if ((size_t)v.size() != dim()) {
        throw std::invalid_argument("SuperOperator::apply: dimension mismatch");
    }
    Vec out(v.size());
    apply(v.data(), out.data());
    return out;
}

Mat build_superoperator(const KrausChannel &c, size_t budget_bytes) {
    size_t dd = (size_t)1 << (2 * c.num_qubits());
    double bytes = (double)dd * (double)dd * sizeof(cd);
    if (c.num_qubits() > 15 || bytes > (double)budget_bytes) {
        throw std::length_error("explicit superoperator exceeds the memory budget");
    }
    SuperOperator s(c);
    Mat m(dd, dd);
    Vec e = Vec::Zero(dd);
    for (size_t j = 0; j < dd; j++) {
        e[j] = 1;
        s.apply(e.data(), m.col(j).data());
        e[j] = 0;
    }
    return m;
}

KrylovResult block_krylov(const std::function<void(const cd *, cd *)> &op, size_t dim, size_t k, double tol,
                          size_t max_cycles, uint64_t seed, double tail_floor) {
    KrylovResult res;
    if (dim == 0 || k == 0) {
        res.converged = true;
        return res;
    }
    size_t kk = std::min(k, dim);
    size_t m = std::min(dim, std::max<size_t>(4 * kk, 60));
    size_t b = kk;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Mat x(dim, b);
    for (Eigen::Index j = 0; j < x.cols(); j++) {
        for (Eigen::Index i = 0; i < x.rows(); i++) {
            x(i, j) = cd(nd(rng), nd(rng));
        }
    }
    x = orthonormal_columns(x);

    Mat v(dim, m), av(dim, m);
    for (size_t cyc = 0; cyc < max_cycles; cyc++) {
        res.cycles = cyc + 1;
        size_t cols = 0;
        size_t applied = 0;
        Mat block = x;
        while (true) {
            // Orthogonalize the candidate block against the basis, twice.
            for (int pass = 0; pass < 2 && cols > 0; pass++) {
                block -= v.leftCols(cols) * (v.leftCols(cols).adjoint() * block);
            }
            size_t added = 0;
            for (Eigen::Index j = 0; j < block.cols() && cols < m; j++) {
                Vec w = block.col(j);
                double before = w.norm();
                if (before == 0) {
                    continue;
                }
                for (int pass = 0; pass < 2; pass++) {
                    if (cols > 0) {
                        w -= v.leftCols(cols) * (v.leftCols(cols).adjoint() * w);
                    }
                }
                double nrm = w.norm();
                if (nrm <= 1e-10 * before || nrm < 1e-300) {
                    continue;
                }
                v.col(cols) = w / nrm;
                cols++;
                added++;
            }
            for (; applied < cols; applied++) {
                op(v.col(applied).data(), av.col(applied).data());
                res.applications++;
            }
            if (added == 0 || cols >= m) {
                break;
            }
            block = av.middleCols(cols - added, added);
        }

        Mat h = v.leftCols(cols).adjoint() * av.leftCols(cols);
        GeneralEigen ge = complex_general_eigen(h, true);
        std::vector<size_t> order(cols);
        for (size_t i = 0; i < cols; i++) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t p, size_t q) { return std::abs(ge.values[p]) > std::abs(ge.values[q]); });
        size_t take = std::min(kk, cols);
        res.values.assign(take, cd(0));
        res.residuals.assign(take, 0);
        double scale = std::max(1.0, std::abs(ge.values[order[0]]));
        bool ok = true;
        Mat ritz(dim, std::min(b, cols));
        for (size_t t = 0; t < take; t++) {
            Vec y = ge.vectors.col(order[t]);
            y /= y.norm();
            cd theta = ge.values[order[t]];
            Vec r = av.leftCols(cols) * y - theta * (v.leftCols(cols) * y);
            res.values[t] = theta;
            res.residuals[t] = r.norm();
            double allowed = std::abs(theta) < tail_floor * scale ? std::sqrt(tol) * scale : tol * scale;
            if (res.residuals[t] > allowed) {
                ok = false;
            }
        }
        for (size_t t = 0; t < (size_t)ritz.cols(); t++) {
            Vec y = ge.vectors.col(order[t]);
            ritz.col(t) = v.leftCols(cols) * (y / y.norm());
        }
        // An invariant subspace smaller than k: every eigenvalue outside it is zero.
        if (cols < kk && ok) {
            res.values.resize(kk, cd(0));
            res.residuals.resize(kk, 0);
        }
        if (ok) {
            res.converged = true;
            return res;
        }
        x = orthonormal_columns(ritz);
    }
    return res;
}

double SpectrumReport::sector_gap(const std::string &prefix) const {
    std::vector<double> mags;
    for (size_t i = 0; i < eigenvalues.size(); i++) {
        if (sectors[i].rfind(prefix, 0) == 0) {
            mags.push_back(std::abs(eigenvalues[i]));
        }
    }
    std::sort(mags.rbegin(), mags.rend());
    if (mags.size() < 2 || mags[0] == 0) {
        return NAN;
    }
    return 1 - mags[1] / mags[0];
}

nlohmann::json SpectrumReport::to_json() const {
    nlohmann::json j;
    j["magnitudes"] = magnitudes;
    j["degeneracy"] = degeneracy;
    j["gap"] = std::isfinite(gap) ? nlohmann::json(gap) : nlohmann::json(nullptr);
    j["epsilon_deg"] = epsilon_deg;
    j["residuals"] = residuals;
    j["sectors"] = sectors;
    j["method"] = method;
    j["converged"] = converged;
    j["scale"] = scale;
    return j;
}

namespace {

struct Collected {
    cd value;
    std::string sector;
};

std::string sign_label(int s) { return s > 0 ? " +" : (s < 0 ? " -" : ""); }

}  // namespace

SpectrumReport leading_spectrum(const KrausChannel &c, const SpectrumOptions &opt) {
    if (opt.k == 0) {
        throw std::invalid_argument("leading_spectrum needs k >= 1");
    }
    size_t n = c.num_qubits();
    size_t d = (size_t)1 << n;
    size_t dd = d * d;
    SuperOperator sup(c);

    int nid = 1;
    std::vector<int> ids(d, 0);
    if (!opt.sectors.charges.empty()) {
        ids = opt.sectors.combined(d, &nid);
    }
    std::vector<std::string> id_names(nid);
    for (int a = 0; a < nid; a++) {
        id_names[a] = opt.sectors.describe(a, d);
    }

    // How the weak involution permutes charge ids.
    uint64_t fm = opt.sectors.flip_mask.value_or(0);
    std::vector<int> sigma(nid);
    for (int a = 0; a < nid; a++) {
        sigma[a] = a;
    }
    if (fm) {
        std::vector<int> seen(nid, -1);
        for (size_t r = 0; r < d; r++) {
            int img = ids[r ^ fm];
            if (seen[ids[r]] >= 0 && seen[ids[r]] != img) {
                throw std::invalid_argument("flip involution does not act on the charge sectors");
            }
            seen[ids[r]] = img;
        }
        for (int a = 0; a < nid; a++) {
            sigma[a] = seen[a] >= 0 ? seen[a] : a;
        }
    }

    std::vector<std::vector<size_t>> rows_of(nid);
    for (size_t r = 0; r < d; r++) {
        rows_of[ids[r]].push_back(r);
    }

    bool whole_fits = (double)dd * (double)dd * sizeof(cd) <= (double)opt.budget_bytes;
    std::vector<Collected> all;
    SpectrumReport rep;
    rep.epsilon_deg = opt.eps_deg;
    std::string method_used;

    for (int a = 0; a < nid; a++) {
        for (int bq = 0; bq < nid; bq++) {
            std::pair<int, int> me{a, bq}, partner{sigma[a], sigma[bq]};
            if (fm && partner < me) {
                continue;
            }
            bool self_dual = fm && partner == me;
            std::vector<int> signs = self_dual ? std::vector<int>{+1, -1} : std::vector<int>{0};
            std::string base_label = "ket[" + id_names[a] + "] bra[" + id_names[bq] + "]";
            std::string mirror_label = "ket[" + id_names[partner.first] + "] bra[" + id_names[partner.second] + "]";

            std::vector<uint64_t> reps;
            for (size_t cc : rows_of[bq]) {
                for (size_t r : rows_of[a]) {
                    uint64_t i = r + d * cc;
                    if (self_dual) {
                        uint64_t f = (r ^ fm) + d * (cc ^ fm);
                        if (f < i) {
                            continue;
                        }
                    }
                    reps.push_back(i);
                }
            }
            size_t bdim = reps.size();
            if (bdim == 0) {
                continue;
            }
            for (int s : signs) {
                auto scatter = [&](const cd *in, Vec &x) {
                    x.setZero();
                    for (size_t j = 0; j < bdim; j++) {
                        uint64_t i = reps[j];
                        x[i] += in[j];
                        if (s != 0) {
                            uint64_t r = i % d, cc = i / d;
                            x[(r ^ fm) + d * (cc ^ fm)] += (double)s * in[j];
                        }
                    }
                };
                std::vector<cd> vals;
                double resid = 0;
                bool use_explicit = opt.method == SpectrumOptions::Method::Explicit ||
                                    (opt.method == SpectrumOptions::Method::Auto &&
                                     (whole_fits || bdim <= opt.explicit_block_limit));
                if (use_explicit) {
                    Mat m(bdim, bdim);
                    Vec x(dd), y(dd);
                    std::vector<cd> unit(bdim, cd(0));
                    for (size_t j = 0; j < bdim; j++) {
                        unit[j] = 1;
                        scatter(unit.data(), x);
                        unit[j] = 0;
                        sup.apply(x.data(), y.data());
                        for (size_t i = 0; i < bdim; i++) {
                            m(i, j) = y[reps[i]];
                        }
                    }
                    GeneralEigen ge;
                    if (m.imag().cwiseAbs().maxCoeff() == 0) {
                        ge = real_general_eigen(m.real(), false);
                    } else {
                        ge = complex_general_eigen(m, false);
                    }
                    vals.assign(ge.values.data(), ge.values.data() + ge.values.size());
                    if (method_used.find("explicit") == std::string::npos) {
                        method_used += method_used.empty() ? "explicit" : "+explicit";
                    }
                } else {
                    Vec x(dd), y(dd);
                    auto op = [&](const cd *in, cd *out) {
                        scatter(in, x);
                        sup.apply(x.data(), y.data());
                        for (size_t i = 0; i < bdim; i++) {
                            out[i] = y[reps[i]];
                        }
                    };
                    KrylovResult kr = block_krylov(op, bdim, opt.k, opt.tol, opt.max_cycles, opt.seed, opt.tail_floor);
                    vals = kr.values;
                    for (double r : kr.residuals) {
                        resid = std::max(resid, r);
                    }
                    rep.converged = rep.converged && kr.converged;
                    if (method_used.find("krylov") == std::string::npos) {
                        method_used += method_used.empty() ? "krylov" : "+krylov";
                    }
                }
                std::stable_sort(vals.begin(), vals.end(),
                                 [](const cd &p, const cd &q) { return std::abs(p) > std::abs(q); });
                if (vals.size() > opt.k) {
                    vals.resize(opt.k);
                }
                rep.residuals.push_back(resid);
                for (const cd &v : vals) {
                    all.push_back({v, base_label + sign_label(s)});
                    if (fm && partner != me) {
                        all.push_back({v, mirror_label});
                    }
                }
            }
        }
    }

    std::stable_sort(all.begin(), all.end(),
                     [](const Collected &p, const Collected &q) { return std::abs(p.value) > std::abs(q.value); });
    rep.method = method_used;
    rep.scale = 1;
    if (opt.normalize && !all.empty() && std::abs(all[0].value) > 0) {
        rep.scale = std::abs(all[0].value);
    }
    for (const auto &e : all) {
        rep.eigenvalues.push_back(e.value);
        rep.magnitudes.push_back(std::abs(e.value) / rep.scale);
        rep.sectors.push_back(e.sector);
    }
    rep.degeneracy = 0;
    while (rep.degeneracy < rep.magnitudes.size() && rep.magnitudes[rep.degeneracy] > 1 - opt.eps_deg) {
        rep.degeneracy++;
    }
    rep.gap = rep.degeneracy < rep.magnitudes.size() ? 1 - rep.magnitudes[rep.degeneracy] : NAN;
    return rep;
}

}  // namespace holo
