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

#include "holo/runner/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace holo {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommon = {"experiment", "name", "tolerances", "threads", "output_dir"};

[[noreturn]] void bad(const std::string &msg) { throw std::invalid_argument("config: " + msg); }

double get_number(const json &j, const std::string &key) {
    if (!j.is_number()) {
        bad("'" + key + "' must be a number");
    }
    return j.get<double>();
}

size_t get_count(const json &j, const std::string &key) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        bad("'" + key + "' must be a non-negative integer");
    }
    return j.get<size_t>();
}

std::vector<double> get_numbers(const json &j, const std::string &key) {
    if (!j.is_array() || j.empty()) {
        bad("'" + key + "' must be a non-empty array of numbers");
    }
    std::vector<double> out;
    for (const auto &v : j) {
        out.push_back(get_number(v, key));
    }
    return out;
}

std::vector<size_t> get_counts(const json &j, const std::string &key) {
    if (!j.is_array() || j.empty()) {
        bad("'" + key + "' must be a non-empty array of integers");
    }
    std::vector<size_t> out;
    for (const auto &v : j) {
        out.push_back(get_count(v, key));
    }
    return out;
}

void check_probability(double p, const std::string &key) {
    if (!(p >= 0 && p <= 1)) {
        bad("'" + key + "' must lie in [0, 1]");
    }
}

void check_range(const std::vector<size_t> &v, size_t lo, size_t hi, const std::string &key) {
    for (size_t x : v) {
        if (x < lo || x > hi) {
            bad("'" + key + "' value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]");
        }
    }
}

bool has_key(const ExperimentSchema &s, const std::string &key) {
    return std::find(s.required.begin(), s.required.end(), key) != s.required.end() ||
           std::find(s.optional.begin(), s.optional.end(), key) != s.optional.end();
}

}  // namespace

const std::vector<std::string> &experiment_names() {
    static const std::vector<std::string> names = {"fig4_spectrum",     "fig4_cmi",       "fig6_deformed_tc",
                                                   "fixed_point_suite", "appendix_verify", "depth_sweep",
                                                   "overlap_check",     "jw_check"};
    return names;
}

ExperimentSchema experiment_schema(const std::string &e) {
    ExperimentSchema s;
    if (e == "fig4_spectrum") {
        s.required = {"L", "g"};
    } else if (e == "fig4_cmi" || e == "fig6_deformed_tc") {
        s.required = {"L", "g"};
        s.optional = {"partition"};
    } else if (e == "fixed_point_suite") {
        s.required = {"L"};
        s.optional = {"p_x", "p_z", "partition"};
    } else if (e == "appendix_verify") {
        s.required = {"constructions"};
    } else if (e == "depth_sweep") {
        s.required = {"L", "depth"};
        s.optional = {"p_x", "p_z"};
    } else if (e == "overlap_check") {
        s.required = {"g_x", "g_z", "Lx", "Ly"};
    } else if (e == "jw_check") {
        s.required = {"L"};
        s.optional = {"p_a", "p_b"};
    } else {
        bad("unknown experiment '" + e + "'");
    }
    s.optional.insert(s.optional.end(), kCommon.begin(), kCommon.end());
    return s;
}

std::array<size_t, 4> default_partition(size_t L) {
    size_t a = std::min<size_t>(L / 2 - 1, 3);
    size_t b1 = (L - 2 * a) / 2;
    return {a, b1, a, L - 2 * a - b1};
}

json ExperimentConfig::to_json() const {
    json j;
    j["experiment"] = experiment;
    if (!name.empty()) {
        j["name"] = name;
    }
    ExperimentSchema s = experiment_schema(experiment);
    auto want = [&](const char *k) { return has_key(s, k); };
    if (want("L")) {
        j["L"] = L;
    }
    if (want("g")) {
        j["g"] = g;
    }
    if (want("depth")) {
        j["depth"] = depth;
    }
    if (want("p_x")) {
        j["p_x"] = p_x;
        j["p_z"] = p_z;
    }
    if (want("p_a")) {
        j["p_a"] = p_a;
        j["p_b"] = p_b;
    }
    if (want("partition") && partition) {
        j["partition"] = {{"A", (*partition)[0]}, {"B1", (*partition)[1]}, {"C", (*partition)[2]}, {"B2", (*partition)[3]}};
    }
    if (want("constructions")) {
        j["constructions"] = constructions;
    }
    if (want("g_x")) {
        j["g_x"] = g_x;
        j["g_z"] = g_z;
        j["Lx"] = Lx;
        j["Ly"] = Ly;
    }
    json t = {{"eps_deg", tolerances.eps_deg}, {"solver", tolerances.solver}};
    if (tolerances.check) {
        t["check"] = *tolerances.check;
    }
    j["tolerances"] = t;
    j["threads"] = threads;
    if (!output_dir.empty()) {
        j["output_dir"] = output_dir;
    }
    return j;
}

void validate_config(const ExperimentConfig &c) {
    ExperimentSchema s = experiment_schema(c.experiment);
    auto need = [&](bool present, const char *k) {
        if (!present && std::find(s.required.begin(), s.required.end(), k) != s.required.end()) {
            bad(std::string("missing required key '") + k + "'");
        }
    };
    need(!c.L.empty(), "L");
    need(!c.g.empty(), "g");
    need(!c.depth.empty(), "depth");
    need(!c.constructions.empty(), "constructions");
    need(!c.g_x.empty(), "g_x");
    need(!c.g_z.empty(), "g_z");
    need(!c.Lx.empty(), "Lx");
    need(!c.Ly.empty(), "Ly");
    if (c.threads < 1 || c.threads > 64) {
        bad("'threads' must lie in [1, 64]");
    }
    if (!(c.tolerances.eps_deg > 0 && c.tolerances.eps_deg < 1) || !(c.tolerances.solver > 0 && c.tolerances.solver < 1)) {
        bad("tolerances must lie in (0, 1)");
    }
    if (c.tolerances.check && !(*c.tolerances.check > 0)) {
        bad("'tolerances.check' must be positive");
    }
    for (double p : {c.p_x, c.p_z, c.p_a, c.p_b}) {
        check_probability(p, "probability");
    }
    const std::string &e = c.experiment;
    if (e == "fig4_spectrum") {
        check_range(c.L, 2, 8, "L");
    } else if (e == "fig4_cmi" || e == "fixed_point_suite" || e == "depth_sweep" || e == "jw_check") {
        check_range(c.L, e == "fig4_cmi" || e == "fixed_point_suite" ? 4 : 2, 10, "L");
    } else if (e == "fig6_deformed_tc") {
        check_range(c.L, 4, 8, "L");
    }
    if (e == "fig4_spectrum" || e == "fig4_cmi") {
        for (double g : c.g) {
            if (!(g >= -1 && g <= 1)) {
                bad("'g' must lie in [-1, 1]");
            }
        }
    }
    if (e == "fig6_deformed_tc") {
        for (double g : c.g) {
            if (!(g > 0 && g <= 1)) {
                bad("'g' must lie in (0, 1]");
            }
        }
    }
    if (c.partition) {
        const auto &p = *c.partition;
        if (p[0] == 0 || p[2] == 0) {
            bad("partition arcs A and C must be nonempty");
        }
        for (size_t L : c.L) {
            if (p[0] + p[1] + p[2] + p[3] != L) {
                bad("partition arcs must sum to every L in the config");
            }
        }
    } else if (e == "fig4_cmi" || e == "fig6_deformed_tc" || e == "fixed_point_suite") {
        check_range(c.L, 4, 10, "L");
    }
    if (e == "depth_sweep") {
        check_range(c.depth, 0, 4096, "depth");
    }
    if (e == "appendix_verify") {
        for (const auto &name : c.constructions) {
            if (name != "A" && name != "D" && name != "E" && name != "F" && name != "S") {
                bad("unknown construction '" + name + "' (expected A, D, E, F or S)");
            }
        }
    }
    if (e == "overlap_check") {
        check_range(c.Lx, 2, 12, "Lx");
        check_range(c.Ly, 1, 12, "Ly");
        for (size_t lx : c.Lx) {
            for (size_t ly : c.Ly) {
                if (lx * (2 * ly - 1) > 24) {
                    bad("overlap register Lx*(2Ly-1) exceeds 24 qubits");
                }
            }
        }
    }
}

ExperimentConfig parse_config(const json &j) {
    if (!j.is_object()) {
        bad("top level must be an object");
    }
    if (!j.contains("experiment") || !j["experiment"].is_string()) {
        bad("missing string key 'experiment'");
    }
    ExperimentConfig c;
    c.experiment = j["experiment"].get<std::string>();
    ExperimentSchema s = experiment_schema(c.experiment);
    for (const auto &[key, value] : j.items()) {
        if (!has_key(s, key)) {
            bad("unknown key '" + key + "' for experiment " + c.experiment);
        }
    }
    for (const auto &[key, v] : j.items()) {
        if (key == "experiment") {
            continue;
        } else if (key == "name" || key == "output_dir") {
            if (!v.is_string()) {
                bad("'" + key + "' must be a string");
            }
            (key == "name" ? c.name : c.output_dir) = v.get<std::string>();
        } else if (key == "threads") {
            c.threads = get_count(v, key);
        } else if (key == "L") {
            c.L = get_counts(v, key);
        } else if (key == "g") {
            c.g = get_numbers(v, key);
        } else if (key == "depth") {
            c.depth = get_counts(v, key);
        } else if (key == "p_x") {
            c.p_x = get_number(v, key);
        } else if (key == "p_z") {
            c.p_z = get_number(v, key);
        } else if (key == "p_a") {
            c.p_a = get_number(v, key);
        } else if (key == "p_b") {
            c.p_b = get_number(v, key);
        } else if (key == "g_x") {
            c.g_x = get_numbers(v, key);
        } else if (key == "g_z") {
            c.g_z = get_numbers(v, key);
        } else if (key == "Lx") {
            c.Lx = get_counts(v, key);
        } else if (key == "Ly") {
            c.Ly = get_counts(v, key);
        } else if (key == "constructions") {
            if (!v.is_array() || v.empty()) {
                bad("'constructions' must be a non-empty array of strings");
            }
            for (const auto &x : v) {
                if (!x.is_string()) {
                    bad("'constructions' must be a non-empty array of strings");
                }
                c.constructions.push_back(x.get<std::string>());
            }
        } else if (key == "partition") {
            if (!v.is_object()) {
                bad("'partition' must be an object with keys A, B1, C, B2");
            }
            std::array<size_t, 4> p{};
            const char *names[4] = {"A", "B1", "C", "B2"};
            std::set<std::string> seen;
            for (const auto &[pk, pv] : v.items()) {
                size_t idx = 4;
                for (size_t i = 0; i < 4; i++) {
                    if (pk == names[i]) {
                        idx = i;
                    }
                }
                if (idx == 4) {
                    bad("unknown partition key '" + pk + "'");
                }
                p[idx] = get_count(pv, "partition." + pk);
                seen.insert(pk);
            }
            if (seen.size() != 4) {
                bad("'partition' needs all of A, B1, C, B2");
            }
            c.partition = p;
        } else if (key == "tolerances") {
            if (!v.is_object()) {
                bad("'tolerances' must be an object");
            }
            for (const auto &[tk, tv] : v.items()) {
                if (tk == "eps_deg") {
                    c.tolerances.eps_deg = get_number(tv, tk);
                } else if (tk == "solver") {
                    c.tolerances.solver = get_number(tv, tk);
                } else if (tk == "check") {
                    c.tolerances.check = get_number(tv, tk);
                } else {
                    bad("unknown tolerance key '" + tk + "'");
                }
            }
        }
    }
    validate_config(c);
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        bad(std::string("parse error: ") + e.what());
    }
    return parse_config(j);
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names = {"fig4", "fig6", "appendices", "fixed_point", "depth", "overlap", "jw"};
    return names;
}

std::vector<ExperimentConfig> preset(const std::string &name) {
    std::vector<ExperimentConfig> out;
    auto grid = [](double lo, double hi, size_t count) {
        std::vector<double> v;
        for (size_t k = 0; k < count; k++) {
            v.push_back(lo + (hi - lo) * (double)k / (double)(count - 1));
        }
        return v;
    };
    if (name == "fig4") {
        ExperimentConfig s;
        s.experiment = "fig4_spectrum";
        s.name = "fig4";
        s.L = {4, 6, 8};
        s.g = grid(-1, 1, 21);
        ExperimentConfig c = s;
        c.experiment = "fig4_cmi";
        out = {s, c};
    } else if (name == "fig6") {
        ExperimentConfig c;
        c.experiment = "fig6_deformed_tc";
        c.name = "fig6";
        c.L = {4, 6};
        c.g = grid(0.04, 1, 25);
        out = {c};
    } else if (name == "appendices") {
        ExperimentConfig c;
        c.experiment = "appendix_verify";
        c.name = "appendices";
        c.constructions = {"A", "D", "E", "F"};
        out = {c};
    } else if (name == "fixed_point") {
        ExperimentConfig c;
        c.experiment = "fixed_point_suite";
        c.name = "fixed_point";
        c.L = {6, 7, 8, 9, 10};
        out = {c};
    } else if (name == "depth") {
        ExperimentConfig c;
        c.experiment = "depth_sweep";
        c.name = "depth";
        c.L = {8};
        c.p_z = 0.3;
        c.depth = {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
        out = {c};
    } else if (name == "overlap") {
        ExperimentConfig c;
        c.experiment = "overlap_check";
        c.name = "overlap";
        c.g_x = {0.0, 0.3};
        c.g_z = {0.0, 0.1, 0.2, 0.3, 0.4};
        c.Lx = {3};
        c.Ly = {2, 3, 4};
        out = {c};
    } else if (name == "jw") {
        ExperimentConfig c;
        c.experiment = "jw_check";
        c.name = "jw";
        c.L = {4, 6};
        out = {c};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    for (auto &c : out) {
        validate_config(c);
    }
    return out;
}

}  // namespace holo
