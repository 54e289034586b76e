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

#ifndef HOLO_RUNNER_EXPERIMENTS_H
#define HOLO_RUNNER_EXPERIMENTS_H

#include <string>
#include <vector>

#include "holo/diagnostics/csv.h"
#include "holo/runner/config.h"
#include "json.hpp"

namespace holo {

/// Outcome of one parameter point. A failed point keeps its error message.
struct PointResult {
    size_t index = 0;
    nlohmann::json params;
    bool ok = false;
    std::string error;
    double seconds = 0;
    std::vector<CsvRow> rows;
    nlohmann::json values;
};

/// Pass/fail against an acceptance criterion, identified as "C1".."C12".
struct Verdict {
    std::string criterion;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Parameter points of an experiment, in config order.
std::vector<nlohmann::json> expand_points(const ExperimentConfig &c);

/// Computes one point; throws on failure.
void run_point(const ExperimentConfig &c, PointResult &r);

/// Verdicts over all points (failed points yield failing verdicts).
std::vector<Verdict> judge(const ExperimentConfig &c, const std::vector<PointResult> &points);

/// Critical coupling of the deformed toric-code map, (1 + sqrt 2)^(-1/2).
double deformed_tc_critical_g();

}  // namespace holo

#endif
