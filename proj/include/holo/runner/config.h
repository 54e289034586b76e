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

#ifndef HOLO_RUNNER_CONFIG_H
#define HOLO_RUNNER_CONFIG_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace holo {

/// Verdict and solver tolerances. `check`, when set, replaces every
/// equality tolerance used by the verdicts (the --tol override).
struct Tolerances {
    double eps_deg = 1e-8;
    double solver = 1e-12;
    std::optional<double> check;
};

/// One experiment. Which fields are allowed depends on `experiment`; see
/// experiment_schema(). Entropies are in bits, probabilities in [0, 1].
struct ExperimentConfig {
    std::string experiment;
    std::string name;
    std::vector<size_t> L;
    std::vector<double> g;
    std::vector<size_t> depth;
    double p_x = 0.5;
    double p_z = 0.5;
    double p_a = 0.5;
    double p_b = 0.5;
    /// Ring arcs A, B1, C, B2; see default_partition().
    std::optional<std::array<size_t, 4>> partition;
    std::vector<std::string> constructions;
    std::vector<double> g_x;
    std::vector<double> g_z;
    std::vector<size_t> Lx;
    std::vector<size_t> Ly;
    Tolerances tolerances;
    size_t threads = 1;
    std::string output_dir;

    nlohmann::json to_json() const;
};

/// Experiments the runner knows.
const std::vector<std::string> &experiment_names();

/// Required and optional keys for an experiment. Throws for an unknown name.
struct ExperimentSchema {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};
ExperimentSchema experiment_schema(const std::string &experiment);

/// Strict parse: unknown keys, wrong types, out-of-range values and
/// resource-budget violations all throw std::invalid_argument.
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);

/// Re-checks every field against the schema (used for presets and overrides).
void validate_config(const ExperimentConfig &c);

/// Ring partition used when the config does not give one: A = C = min(L/2-1, 3)
/// and the rest split into two B arcs, e.g. 3-1-3-1 at L=8 and 3-2-3-2 at L=10.
std::array<size_t, 4> default_partition(size_t L);

/// Named desk-scale configurations: "fig4", "fig6", "appendices",
/// "fixed_point", "depth", "overlap", "jw".
std::vector<ExperimentConfig> preset(const std::string &name);
const std::vector<std::string> &preset_names();

}  // namespace holo

#endif
