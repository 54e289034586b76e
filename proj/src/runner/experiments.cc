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

#include "holo/runner/experiments.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "holo/dense/dense_operator.h"
#include "holo/dense/fixed_point.h"
#include "holo/dense/spectrum.h"
#include "holo/diagnostics/entropy.h"
#include "holo/diagnostics/fidelity.h"
#include "holo/holography/appendix.h"
#include "holo/holography/channels.h"
#include "holo/holography/overlap.h"
#include "holo/isotns/transfer.h"

namespace holo {

using nlohmann::json;

double deformed_tc_critical_g() { return 1 / std::sqrt(1 + std::sqrt(2.0)); }

namespace {

const char *kSector = "ket[Z2=0] bra[Z2=0]";

std::string fmt(double v) { return format_double(v); }

std::array<size_t, 4> partition_for(const ExperimentConfig &c, size_t L) {
    return c.partition ? *c.partition : default_partition(L);
}

Partition ring_partition(const std::array<size_t, 4> &p, size_t L) { return Partition::ring(L, p[0], p[1], p[2], p[3]); }

std::string partition_text(const std::array<size_t, 4> &p) {
    return "A" + std::to_string(p[0]) + "B" + std::to_string(p[1]) + "C" + std::to_string(p[2]) + "B" +
           std::to_string(p[3]);
}

Mat plus_state_density(size_t L) { return pure_density(product_state(std::string(L, '+'))); }

void add_row(PointResult &r, const ExperimentConfig &c, long long L, double gp, long long depth, const std::string &q,
             double v, const std::string &meta) {
    r.rows.push_back(CsvRow{c.experiment, L, gp, depth, q, v, meta});
    r.values[q] = v;
}

void run_fig4_spectrum(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    double g = r.params["g"];
    TransferOperator t = ring_transfer_channel(w_tensor(g), L);
    SpectrumOptions so;
    so.k = L + 3;
    so.eps_deg = c.tolerances.eps_deg;
    so.sectors = t.sectors();
    SpectrumReport rep = leading_spectrum(t.channel, so);
    std::string meta = "eps_deg=" + fmt(so.eps_deg) + ";method=" + rep.method;
    add_row(r, c, (long long)L, g, 0, "degeneracy", (double)rep.degeneracy, meta);
    add_row(r, c, (long long)L, g, 0, "gap", rep.gap, meta);
    for (size_t k = 0; k < std::min<size_t>(rep.magnitudes.size(), L + 3); k++) {
        add_row(r, c, (long long)L, g, 0, "magnitude[" + std::to_string(k) + "]", rep.magnitudes[k], meta);
    }
    r.values["converged"] = rep.converged;
    r.values["method"] = rep.method;
}

void run_fig4_cmi(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    double g = r.params["g"];
    TransferOperator t = ring_transfer_channel(w_tensor(g), L);
    BoundaryRdmOptions bo;
    bo.tol = c.tolerances.solver;
    Mat rho = boundary_rdm(t, 1, bo);
    auto p = partition_for(c, L);
    add_row(r, c, (long long)L, g, 0, "cmi", cmi(rho, ring_partition(p, L)),
            "partition=" + partition_text(p) + ";sector=even;unit=bits");
}

void run_fig6(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    double g = r.params["g"];
    TransferOperator t = deformed_tc_transfer(g, L);
    SpectrumOptions so;
    so.k = 3;
    so.eps_deg = c.tolerances.eps_deg;
    so.sectors = t.sectors();
    so.normalize = true;
    SpectrumReport rep = leading_spectrum(t.channel, so);
    std::string meta = "normalized;block=" + std::string(kSector) + ";method=" + rep.method;
    add_row(r, c, (long long)L, g, 0, "gap", rep.sector_gap(kSector), meta);
    add_row(r, c, (long long)L, g, 0, "gap_all_blocks", rep.gap, meta);
    BoundaryRdmOptions bo;
    bo.tol = c.tolerances.solver;
    Mat rho = boundary_rdm(t, 1, bo);
    auto p = partition_for(c, L);
    add_row(r, c, (long long)L, g, 0, "cmi", cmi(rho, ring_partition(p, L)),
            "partition=" + partition_text(p) + ";sector=even;unit=bits");
}

void run_fixed_point(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    KrausChannel ch = ising_channel(L, c.p_x, c.p_z);
    FixedPointOptions fo;
    fo.tol = c.tolerances.solver;
    FixedPointResult fp = iterate_to_fixed_point(ch, plus_state_density(L), fo);
    PauliString all_x = PauliString::from_sites(L, 'X', [&] {
        std::vector<size_t> s(L);
        for (size_t i = 0; i < L; i++) {
            s[i] = i;
        }
        return s;
    }());
    Mat target = stabilizer_density(StabilizerGroup(L, {all_x}));
    auto p = partition_for(c, L);
    size_t j = L / 2;
    PauliString zi = PauliString::from_sites(L, 'Z', {0}), zj = PauliString::from_sites(L, 'Z', {j});
    double gp = c.p_z;
    std::string meta = "p_x=" + fmt(c.p_x) + ";solver=" + fmt(fo.tol);
    add_row(r, c, (long long)L, gp, (long long)fp.iterations, "trace_distance", trace_distance(fp.rho, target), meta);
    add_row(r, c, (long long)L, gp, (long long)fp.iterations, "cmi", cmi(fp.rho, ring_partition(p, L)),
            meta + ";partition=" + partition_text(p) + ";unit=bits");
    add_row(r, c, (long long)L, gp, (long long)fp.iterations, "fidelity_correlator[0," + std::to_string(j) + "]",
            fidelity_correlator(fp.rho, zi, zj), meta);
    add_row(r, c, (long long)L, gp, (long long)fp.iterations, "zz[0," + std::to_string(j) + "]",
            two_point(fp.rho, zi, zj).real(), meta);
    r.values["converged"] = fp.converged;
}

void run_appendix(const ExperimentConfig &c, PointResult &r) {
    std::string name = r.params["construction"];
    static const std::map<std::string, std::string> ids = {
        {"A", "ring"}, {"D", "zero_form"}, {"E", "one_form"}, {"F", "fermionic"}, {"S", "subsystem"}};
    VerificationReport rep = verify_constructions(ids.at(name))[0];
    size_t passed = 0;
    json checks = json::array();
    for (const auto &chk : rep.checks) {
        passed += chk.passed;
        checks.push_back({{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
    }
    add_row(r, c, 0, 0.5, 0, "checks_passed[" + name + "]", (double)passed, rep.construction);
    add_row(r, c, 0, 0.5, 0, "checks_total[" + name + "]", (double)rep.checks.size(), rep.construction);
    r.values["checks"] = checks;
    r.values["all_passed"] = rep.all_passed();
}

void run_depth(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    KrausChannel ch = ising_channel(L, c.p_x, c.p_z);
    Mat rho = plus_state_density(L);
    long long depth = -1;
    std::string meta = "p_x=" + fmt(c.p_x);
    if (r.params["depth"].is_string()) {
        FixedPointOptions fo;
        fo.tol = c.tolerances.solver;
        FixedPointResult fp = iterate_to_fixed_point(ch, rho, fo);
        if (!fp.converged) {
            throw std::runtime_error("plateau state did not converge");
        }
        rho = fp.rho;
        meta += ";plateau;solver=" + fmt(fo.tol);
    } else {
        depth = r.params["depth"];
        for (long long k = 0; k < depth; k++) {
            rho = apply_channel(ch, rho);
        }
    }
    PauliString z0 = PauliString::from_sites(L, 'Z', {0});
    for (size_t d = 1; d <= L / 2; d++) {
        add_row(r, c, (long long)L, c.p_z, depth, "fidelity_correlator[r=" + std::to_string(d) + "]",
                fidelity_correlator(rho, z0, PauliString::from_sites(L, 'Z', {d})), meta);
    }
}

void run_overlap(const ExperimentConfig &c, PointResult &r) {
    double gx = r.params["g_x"], gz = r.params["g_z"];
    size_t lx = r.params["Lx"], ly = r.params["Ly"];
    OverlapResult o = overlap_check(gx, gz, lx, ly);
    std::string tag = "[g_x=" + fmt(gx) + ",Lx=" + std::to_string(lx) + "]";
    std::string meta = "qubits=" + std::to_string(o.num_qubits);
    add_row(r, c, (long long)ly, gz, 0, "overlap" + tag, o.overlap, meta);
    add_row(r, c, (long long)ly, gz, 0, "deviation" + tag, o.deviation, meta);
}

void run_jw(const ExperimentConfig &c, PointResult &r) {
    size_t L = r.params["L"];
    KrausChannel ch = jordan_wigner_channel(L, c.p_a, c.p_b);
    PauliString parity(L);
    for (size_t i = 0; i < L; i++) {
        parity *= parity_image(L, i);
    }
    FixedPointOptions fo;
    fo.tol = c.tolerances.solver;
    FixedPointResult fp = iterate_to_fixed_point(ch, pure_density(product_state(std::string(L, '0'))), fo);
    Mat target = stabilizer_density(StabilizerGroup(L, {parity}));
    std::string meta = "p_a=" + fmt(c.p_a) + ";p_b=" + fmt(c.p_b);
    add_row(r, c, (long long)L, c.p_a, (long long)fp.iterations, "trace_distance", trace_distance(fp.rho, target), meta);
    add_row(r, c, (long long)L, c.p_a, 0, "parity_commutator", ch.strong_symmetry_residual(parity), meta);
    r.values["converged"] = fp.converged;
}

double tol_or(const ExperimentConfig &c, double fallback) { return c.tolerances.check.value_or(fallback); }

Verdict make(const std::string &id, const std::string &name, bool ok, const std::string &detail) {
    return Verdict{id, name, ok, detail};
}

double value(const PointResult &p, const std::string &key) {
    if (!p.ok || !p.values.contains(key)) {
        return NAN;
    }
    return p.values[key].get<double>();
}

std::string point_name(const json &params) {
    std::string s;
    for (const auto &[k, v] : params.items()) {
        if (!s.empty()) {
            s += " ";
        }
        s += k + "=" + (v.is_number_float() ? fmt(v.get<double>()) : v.dump());
    }
    return s;
}

}  // namespace

std::vector<json> expand_points(const ExperimentConfig &c) {
    std::vector<json> out;
    const std::string &e = c.experiment;
    if (e == "fig4_spectrum" || e == "fig4_cmi" || e == "fig6_deformed_tc") {
        for (size_t L : c.L) {
            for (double g : c.g) {
                out.push_back({{"L", L}, {"g", g}});
            }
        }
    } else if (e == "fixed_point_suite" || e == "jw_check") {
        for (size_t L : c.L) {
            out.push_back({{"L", L}});
        }
    } else if (e == "appendix_verify") {
        for (const auto &s : c.constructions) {
            out.push_back({{"construction", s}});
        }
    } else if (e == "depth_sweep") {
        for (size_t L : c.L) {
            for (size_t d : c.depth) {
                out.push_back({{"L", L}, {"depth", d}});
            }
            out.push_back({{"L", L}, {"depth", "inf"}});
        }
    } else if (e == "overlap_check") {
        for (double gx : c.g_x) {
            for (double gz : c.g_z) {
                for (size_t lx : c.Lx) {
                    for (size_t ly : c.Ly) {
                        out.push_back({{"g_x", gx}, {"g_z", gz}, {"Lx", lx}, {"Ly", ly}});
                    }
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown experiment '" + e + "'");
    }
    return out;
}

void run_point(const ExperimentConfig &c, PointResult &r) {
    r.values = json::object();
    const std::string &e = c.experiment;
    if (e == "fig4_spectrum") {
        run_fig4_spectrum(c, r);
    } else if (e == "fig4_cmi") {
        run_fig4_cmi(c, r);
    } else if (e == "fig6_deformed_tc") {
        run_fig6(c, r);
    } else if (e == "fixed_point_suite") {
        run_fixed_point(c, r);
    } else if (e == "appendix_verify") {
        run_appendix(c, r);
    } else if (e == "depth_sweep") {
        run_depth(c, r);
    } else if (e == "overlap_check") {
        run_overlap(c, r);
    } else if (e == "jw_check") {
        run_jw(c, r);
    } else {
        throw std::invalid_argument("unknown experiment '" + e + "'");
    }
}

std::vector<Verdict> judge(const ExperimentConfig &c, const std::vector<PointResult> &points) {
    std::vector<Verdict> out;
    const std::string &e = c.experiment;
    for (const auto &p : points) {
        if (!p.ok) {
            out.push_back(make("run", "point " + point_name(p.params), false, p.error));
        }
    }
    if (e == "fig4_spectrum") {
        std::map<size_t, double> gap_at_zero;
        for (const auto &p : points) {
            size_t L = p.params["L"];
            double g = p.params["g"];
            size_t want = g > 0 ? 2 : (g < 0 ? 1 : L + 1);
            double got = value(p, "degeneracy");
            out.push_back(make("C4", "degeneracy L=" + std::to_string(L) + " g=" + fmt(g), got == (double)want,
                               "got " + fmt(got) + ", expected " + std::to_string(want)));
            if (g == 0 && p.ok) {
                gap_at_zero[L] = value(p, "gap");
            }
        }
        if (gap_at_zero.size() >= 2) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0, m = (double)gap_at_zero.size();
            for (auto [L, gap] : gap_at_zero) {
                double x = std::log((double)L), y = -std::log(gap);
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
            out.push_back(make("C5", "gap exponent at g=0", slope >= 1.6 && slope <= 2.4,
                               "fitted exponent " + fmt(slope) + ", required [1.6, 2.4]"));
        }
    } else if (e == "fig4_cmi") {
        std::map<size_t, std::pair<double, double>> jump;
        for (const auto &p : points) {
            size_t L = p.params["L"];
            double g = p.params["g"], v = value(p, "cmi");
            auto &[min_pos, max_neg] = jump.try_emplace(L, INFINITY, -INFINITY).first->second;
            if (g > 0) {
                min_pos = std::min(min_pos, v);
            } else if (g < 0) {
                max_neg = std::max(max_neg, v);
            }
            if (g >= 0.5) {
                out.push_back(make("C6", "cmi L=" + std::to_string(L) + " g=" + fmt(g) + " >= 0.9", v >= 0.9, fmt(v)));
            } else if (g <= -0.5) {
                out.push_back(make("C6", "cmi L=" + std::to_string(L) + " g=" + fmt(g) + " <= 0.05", v <= 0.05, fmt(v)));
            }
        }
        for (auto [L, mm] : jump) {
            if (std::isfinite(mm.first) && std::isfinite(mm.second)) {
                out.push_back(make("C6", "cmi jump across g=0 at L=" + std::to_string(L), mm.first > mm.second,
                                   "min over g>0 " + fmt(mm.first) + ", max over g<0 " + fmt(mm.second)));
            }
        }
    } else if (e == "fig6_deformed_tc") {
        double gc = deformed_tc_critical_g();
        std::map<size_t, std::vector<std::array<double, 3>>> by_l;
        for (const auto &p : points) {
            by_l[p.params["L"]].push_back({p.params["g"].get<double>(), value(p, "gap"), value(p, "cmi")});
        }
        std::vector<std::pair<size_t, double>> minima;
        std::vector<std::pair<size_t, double>> slopes;
        for (auto &[L, rows] : by_l) {
            std::sort(rows.begin(), rows.end());
            auto best = std::min_element(rows.begin(), rows.end(), [](auto &a, auto &b) { return a[1] < b[1]; });
            double g_min = (*best)[0];
            out.push_back(make("C7", "gap minimum near g_c at L=" + std::to_string(L), std::abs(g_min - gc) <= 0.08,
                               "argmin g=" + fmt(g_min) + " gap=" + fmt((*best)[1]) + ", g_c=" + fmt(gc)));
            minima.push_back({L, (*best)[1]});
            double slope = 0;
            for (size_t k = 0; k + 1 < rows.size(); k++) {
                slope = std::max(slope, std::abs(rows[k + 1][2] - rows[k][2]) / (rows[k + 1][0] - rows[k][0]));
            }
            slopes.push_back({L, slope});
            for (auto [target, want_high] : {std::pair{0.95, false}, {0.35, true}}) {
                auto near = std::min_element(rows.begin(), rows.end(), [&](auto &a, auto &b) {
                    return std::abs(a[0] - target) < std::abs(b[0] - target);
                });
                if (std::abs((*near)[0] - target) > 0.021) {
                    continue;
                }
                double v = (*near)[2];
                bool ok = want_high ? v >= 0.9 : v <= 0.1;
                out.push_back(make("C7",
                                   "boundary cmi at g=" + fmt((*near)[0]) + " L=" + std::to_string(L) +
                                       (want_high ? " >= 0.9" : " <= 0.1"),
                                   ok, fmt(v)));
            }
        }
        for (size_t k = 0; k + 1 < minima.size(); k++) {
            out.push_back(make("C7",
                               "gap minimum deepens from L=" + std::to_string(minima[k].first) + " to L=" +
                                   std::to_string(minima[k + 1].first),
                               minima[k + 1].second < minima[k].second,
                               fmt(minima[k].second) + " -> " + fmt(minima[k + 1].second)));
            out.push_back(make("C7",
                               "cmi crossover sharpens from L=" + std::to_string(slopes[k].first) + " to L=" +
                                   std::to_string(slopes[k + 1].first),
                               slopes[k + 1].second > slopes[k].second,
                               "max |dCMI/dg| " + fmt(slopes[k].second) + " -> " + fmt(slopes[k + 1].second)));
        }
    } else if (e == "fixed_point_suite") {
        for (const auto &p : points) {
            if (!p.ok) {
                continue;
            }
            std::string L = std::to_string(p.params["L"].get<size_t>());
            std::string j = std::to_string(p.params["L"].get<size_t>() / 2);
            double td = value(p, "trace_distance"), ci = value(p, "cmi");
            double f = value(p, "fidelity_correlator[0," + j + "]"), zz = value(p, "zz[0," + j + "]");
            out.push_back(make("C1", "steady state L=" + L, td <= tol_or(c, 1e-10), "trace distance " + fmt(td)));
            out.push_back(make("C1", "cmi = 1 bit L=" + L, std::abs(ci - 1) <= tol_or(c, 1e-9), fmt(ci)));
            out.push_back(make("C1", "fidelity correlator = 1 L=" + L, std::abs(f - 1) <= tol_or(c, 1e-9), fmt(f)));
            out.push_back(make("C1", "Tr(rho ZZ) = 0 L=" + L, std::abs(zz) <= tol_or(c, 1e-10), fmt(zz)));
        }
    } else if (e == "appendix_verify") {
        for (const auto &p : points) {
            std::string name = p.params["construction"];
            bool ok = p.ok && p.values["all_passed"].get<bool>();
            std::string detail;
            if (p.ok) {
                for (const auto &chk : p.values["checks"]) {
                    if (!chk["passed"].get<bool>()) {
                        detail += chk["name"].get<std::string>() + ": " + chk["detail"].get<std::string>() + "; ";
                    }
                }
                if (detail.empty()) {
                    detail = fmt(value(p, "checks_passed[" + name + "]")) + " checks";
                }
            }
            out.push_back(make("C3", "stabilizer flow " + name, ok, detail));
        }
    } else if (e == "depth_sweep") {
        std::map<size_t, std::vector<std::pair<long long, const PointResult *>>> by_l;
        for (const auto &p : points) {
            long long d = p.params["depth"].is_string() ? -1 : p.params["depth"].get<long long>();
            by_l[p.params["L"]].push_back({d, &p});
        }
        double mono_tol = tol_or(c, 1e-12);
        for (auto &[L, rows] : by_l) {
            std::sort(rows.begin(), rows.end());
            std::vector<const PointResult *> finite;
            const PointResult *plateau = nullptr;
            for (auto &[d, p] : rows) {
                if (d < 0) {
                    plateau = p;
                } else {
                    finite.push_back(p);
                }
            }
            std::string Ls = std::to_string(L);
            for (size_t r = 1; r <= L / 2; r++) {
                std::string key = "fidelity_correlator[r=" + std::to_string(r) + "]";
                bool ok = true;
                std::string detail;
                for (size_t k = 0; k + 1 < finite.size(); k++) {
                    double a = value(*finite[k], key), b = value(*finite[k + 1], key);
                    if (!(b >= a - mono_tol)) {
                        ok = false;
                        detail = "drops at depth " + finite[k + 1]->params["depth"].dump() + ": " + fmt(a) + " -> " + fmt(b);
                    }
                }
                out.push_back(make("C9", "F nondecreasing in depth L=" + Ls + " r=" + std::to_string(r), ok, detail));
            }
            if (!finite.empty()) {
                const PointResult *last = finite.back();
                bool ok = true, strict = true;
                std::string values;
                for (size_t r = 1; r <= L / 2; r++) {
                    double v = value(*last, "fidelity_correlator[r=" + std::to_string(r) + "]");
                    values += fmt(v) + " ";
                    if (r > 1) {
                        double prev = value(*last, "fidelity_correlator[r=" + std::to_string(r - 1) + "]");
                        ok &= v <= prev + mono_tol;
                        strict &= v < prev;
                    }
                }
                out.push_back(make("C9", "F nonincreasing in r at depth " + last->params["depth"].dump() + " L=" + Ls, ok,
                                   values + (strict ? "(strict)" : "(ties within tolerance)")));
            }
            if (plateau) {
                double lo = INFINITY, hi = -INFINITY;
                for (size_t r = 1; r <= L / 2; r++) {
                    double v = value(*plateau, "fidelity_correlator[r=" + std::to_string(r) + "]");
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                out.push_back(make("C9", "plateau independent of r L=" + Ls, hi - lo <= tol_or(c, 1e-6),
                                   "spread " + fmt(hi - lo) + ", plateau " + fmt(hi)));
            }
        }
    } else if (e == "overlap_check") {
        std::map<std::pair<double, size_t>, std::vector<std::pair<size_t, double>>> series;
        for (const auto &p : points) {
            double gz = p.params["g_z"];
            if (std::abs(gz - 0.3) > 1e-12 || !p.ok) {
                continue;
            }
            double gx = p.params["g_x"];
            size_t lx = p.params["Lx"], ly = p.params["Ly"];
            series[{gx, lx}].push_back(
                {ly, value(p, "deviation[g_x=" + fmt(gx) + ",Lx=" + std::to_string(lx) + "]")});
        }
        for (auto &[key, s] : series) {
            std::sort(s.begin(), s.end());
            for (size_t k = 0; k + 1 < s.size(); k++) {
                double ratio = s[k].second / s[k + 1].second;
                bool unit_step = s[k + 1].first == s[k].first + 1;
                out.push_back(make("C8",
                                   "deviation halves from Ly=" + std::to_string(s[k].first) + " to Ly=" +
                                       std::to_string(s[k + 1].first) + " (g_x=" + fmt(key.first) +
                                       ", Lx=" + std::to_string(key.second) + ")",
                                   unit_step && ratio >= 2, "ratio " + fmt(ratio)));
            }
        }
    } else if (e == "jw_check") {
        for (const auto &p : points) {
            if (!p.ok) {
                continue;
            }
            std::string L = std::to_string(p.params["L"].get<size_t>());
            double td = value(p, "trace_distance"), comm = value(p, "parity_commutator");
            out.push_back(make("C10", "steady state (1+prod P) L=" + L, td <= tol_or(c, 1e-10), "trace distance " + fmt(td)));
            out.push_back(make("C10", "Kraus operators commute with the parity image L=" + L, comm <= tol_or(c, 1e-12),
                               "max commutator " + fmt(comm)));
        }
    }
    return out;
}

}  // namespace holo
