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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "holo/holography/appendix.h"
#include "holo/runner/run.h"

using namespace holo;

namespace {

void print_report(const RunReport &r) {
    std::printf("experiment %s: %zu points, %.2f s, output %s\n", r.config.experiment.c_str(), r.points.size(),
                r.seconds, r.output_dir.c_str());
    for (const auto &v : r.verdicts) {
        std::printf("%s [%s] %s%s%s\n", v.passed ? "PASS" : "FAIL", v.criterion.c_str(), v.name.c_str(),
                    v.detail.empty() ? "" : " : ", v.detail.c_str());
    }
}

void apply_overrides(ExperimentConfig &c, const std::string &out, size_t threads, double tol, size_t count) {
    if (!out.empty()) {
        c.output_dir = count > 1 ? (std::filesystem::path(out) / c.experiment).string() : out;
    }
    if (threads) {
        c.threads = threads;
    }
    if (tol > 0) {
        c.tolerances.check = tol;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"holochannel: holographic channels, steady states and isoTNS transfer maps"};
    app.require_subcommand(1);
    double tol = 0;
    app.add_option("--tol", tol, "Override every equality tolerance used by the verdicts")
        ->check(CLI::PositiveNumber);

    std::string config_path, out;
    size_t threads = 0;
    auto *run_cmd = app.add_subcommand("run", "Run an experiment described by a JSON config file");
    run_cmd->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out, "Output directory");
    run_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 64));

    std::string preset_name;
    auto *preset_cmd = app.add_subcommand("preset", "Run a named desk-scale preset");
    preset_cmd->add_option("name", preset_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    preset_cmd->add_option("--out", out, "Output directory");
    preset_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 64));

    std::string which;
    auto *verify_cmd = app.add_subcommand("verify-appendix", "Print the stabilizer-flow transcript of a construction");
    verify_cmd->add_option("construction", which, "A, D, E, F or S")
        ->required()
        ->check(CLI::IsMember({"A", "D", "E", "F", "S"}));

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<ExperimentConfig> configs;
        if (*verify_cmd) {
            static const std::map<std::string, std::string> ids = {
                {"A", "ring"}, {"D", "zero_form"}, {"E", "one_form"}, {"F", "fermionic"}, {"S", "subsystem"}};
            bool ok = true;
            for (const auto &r : verify_constructions(ids.at(which))) {
                std::cout << r.transcript();
                ok &= r.all_passed();
            }
            return ok ? 0 : 1;
        }
        if (*run_cmd) {
            configs.push_back(load_config(config_path));
        } else {
            configs = preset(preset_name);
        }
        bool ok = true;
        for (auto &c : configs) {
            apply_overrides(c, out, threads, tol, configs.size());
            RunReport r = run(c);
            print_report(r);
            ok &= r.all_passed();
        }
        return ok ? 0 : 1;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
