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

#ifndef HOLO_RUNNER_RUN_H
#define HOLO_RUNNER_RUN_H

#include <functional>
#include <string>
#include <vector>

#include "holo/runner/experiments.h"

namespace holo {

/// Environment variable naming the default output root.
constexpr const char *kOutputRootEnv = "HOLO_OUTPUT_ROOT";

struct RunReport {
    ExperimentConfig config;
    std::vector<PointResult> points;
    std::vector<Verdict> verdicts;
    double seconds = 0;
    std::string output_dir;

    bool all_passed() const;
    CsvTable csv() const;
    nlohmann::json to_json() const;
};

/// Runs fn(0..count-1) on at most `threads` workers. Results are written by
/// index, so ordering never depends on completion order.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn);

/// Output directory: config.output_dir if set, else $HOLO_OUTPUT_ROOT (or
/// "runs") joined with the config name (or the experiment name).
std::string resolve_output_dir(const ExperimentConfig &c);

/// Validates, runs every point (failures are recorded, not thrown), judges,
/// and when `write` is set writes config.json, results.csv, one CSV per
/// quantity family, and report.json into the output directory.
RunReport run(const ExperimentConfig &c, bool write = true);

void write_outputs(const RunReport &r);

}  // namespace holo

#endif
