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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/runner/config.h"
#include "holo/runner/experiments.h"
#include "holo/runner/run.h"

using namespace holo;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(runner, strict_config_parsing) {
    json ok = {{"experiment", "fixed_point_suite"}, {"L", {4, 6}}, {"p_x", 0.5}};
    ExperimentConfig c = parse_config(ok);
    EXPECT_EQ(c.L, (std::vector<size_t>{4, 6}));
    EXPECT_EQ(c.threads, 1u);

    json unknown = ok;
    unknown["p_y"] = 0.1;
    EXPECT_THROW(parse_config(unknown), std::invalid_argument);
    json foreign = ok;
    foreign["g"] = {0.5};  // valid for other experiments, not this one
    EXPECT_THROW(parse_config(foreign), std::invalid_argument);
    json missing = {{"experiment", "fixed_point_suite"}};
    EXPECT_THROW(parse_config(missing), std::invalid_argument);
    json wrong_type = ok;
    wrong_type["L"] = "six";
    EXPECT_THROW(parse_config(wrong_type), std::invalid_argument);
    json prob = ok;
    prob["p_x"] = 1.5;
    EXPECT_THROW(parse_config(prob), std::invalid_argument);
    EXPECT_THROW(parse_config(json{{"experiment", "nope"}}), std::invalid_argument);
    json bad_tol = ok;
    bad_tol["tolerances"] = {{"eps", 1e-3}};
    EXPECT_THROW(parse_config(bad_tol), std::invalid_argument);
}

TEST(runner, budget_checks) {
    EXPECT_THROW(parse_config(json{{"experiment", "fig4_spectrum"}, {"L", {12}}, {"g", {0.5}}}),
                 std::invalid_argument);
    EXPECT_THROW(parse_config(json{{"experiment", "fig6_deformed_tc"}, {"L", {4}}, {"g", {0.0}}}),
                 std::invalid_argument);
    EXPECT_THROW(parse_config(json{{"experiment", "overlap_check"},
                                   {"g_x", {0.0}},
                                   {"g_z", {0.3}},
                                   {"Lx", {3}},
                                   {"Ly", {5}}}),
                 std::invalid_argument);
}

TEST(runner, config_round_trips_through_json) {
    json j = {{"experiment", "fig4_cmi"},
              {"name", "x"},
              {"L", {6}},
              {"g", {0.5, -0.5}},
              {"partition", {{"A", 2}, {"B1", 1}, {"C", 2}, {"B2", 1}}},
              {"tolerances", {{"check", 1e-6}}}};
    ExperimentConfig c = parse_config(j);
    ExperimentConfig d = parse_config(c.to_json());
    EXPECT_EQ(c.to_json(), d.to_json());
    EXPECT_EQ(*d.partition, (std::array<size_t, 4>{2, 1, 2, 1}));
    EXPECT_EQ(*d.tolerances.check, 1e-6);
}

TEST(runner, default_partition_covers_ring) {
    for (size_t L : {4, 6, 8, 10}) {
        auto p = default_partition(L);
        EXPECT_EQ(p[0] + p[1] + p[2] + p[3], L);
        EXPECT_EQ(p[0], p[2]);
    }
}

TEST(runner, presets_are_valid) {
    for (const auto &name : preset_names()) {
        for (const auto &c : preset(name)) {
            EXPECT_NO_THROW(validate_config(c)) << name;
            EXPECT_NO_THROW(parse_config(c.to_json())) << name;
        }
    }
    EXPECT_THROW(preset("nope"), std::invalid_argument);
}

TEST(runner, parallel_for_writes_by_index) {
    std::vector<size_t> out(50, 0);
    std::atomic<size_t> calls{0};
    parallel_for(out.size(), 4, [&](size_t i) {
        out[i] = i * i;
        calls++;
    });
    EXPECT_EQ(calls.load(), 50u);
    for (size_t i = 0; i < out.size(); i++) {
        EXPECT_EQ(out[i], i * i);
    }
}

TEST(runner, fixed_point_run_and_verdicts) {
    ExperimentConfig c = parse_config(json{{"experiment", "fixed_point_suite"}, {"L", {4, 6}}});
    RunReport r = run(c, false);
    ASSERT_EQ(r.points.size(), 2u);
    for (const auto &p : r.points) {
        EXPECT_TRUE(p.ok) << p.error;
    }
    ASSERT_FALSE(r.verdicts.empty());
    for (const auto &v : r.verdicts) {
        EXPECT_EQ(v.criterion, "C1");
        EXPECT_TRUE(v.passed) << v.name << " " << v.detail;
    }
    EXPECT_TRUE(r.all_passed());
}

TEST(runner, edited_configs_are_revalidated) {
    ExperimentConfig c = parse_config(json{{"experiment", "fixed_point_suite"}, {"L", {4}}});
    c.L = {1};
    EXPECT_THROW(run(c, false), std::invalid_argument);
}

TEST(runner, outputs_are_deterministic) {
    auto root = std::filesystem::temp_directory_path() / "holo_runner_test";
    std::filesystem::remove_all(root);
    json j = {{"experiment", "depth_sweep"}, {"L", {4}}, {"depth", {1, 2, 3}}, {"p_z", 0.3}, {"threads", 2}};
    std::vector<std::string> csvs;
    for (const char *sub : {"a", "b"}) {
        j["output_dir"] = (root / sub).string();
        run(parse_config(j), true);
        EXPECT_TRUE(std::filesystem::exists(root / sub / "config.json"));
        EXPECT_TRUE(std::filesystem::exists(root / sub / "report.json"));
        csvs.push_back(slurp(root / sub / "results.csv"));
    }
    EXPECT_FALSE(csvs[0].empty());
    EXPECT_EQ(csvs[0], csvs[1]);
    json report = json::parse(slurp(root / "a" / "report.json"));
    EXPECT_TRUE(report.contains("verdicts"));
    std::filesystem::remove_all(root);
}

TEST(runner, output_directory_resolution) {
    ExperimentConfig c = parse_config(json{{"experiment", "jw_check"}, {"L", {4}}, {"name", "demo"}});
    setenv(kOutputRootEnv, "/tmp/holo_root", 1);
    EXPECT_EQ(resolve_output_dir(c), "/tmp/holo_root/demo_jw_check");
    c.output_dir = "/tmp/explicit";
    EXPECT_EQ(resolve_output_dir(c), "/tmp/explicit");
    unsetenv(kOutputRootEnv);
}

TEST(runner, critical_coupling) { EXPECT_NEAR(deformed_tc_critical_g(), 0.643594, 1e-6); }
