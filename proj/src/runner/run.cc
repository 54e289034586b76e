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

#include "holo/runner/run.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

namespace holo {

using nlohmann::json;

bool RunReport::all_passed() const {
    for (const auto &p : points) {
        if (!p.ok) {
            return false;
        }
    }
    for (const auto &v : verdicts) {
        if (!v.passed) {
            return false;
        }
    }
    return true;
}

CsvTable RunReport::csv() const {
    CsvTable t;
    for (const auto &p : points) {
        for (const auto &row : p.rows) {
            t.add(row);
        }
    }
    return t;
}

json RunReport::to_json() const {
    json pts = json::array();
    for (const auto &p : points) {
        json j = {{"index", p.index}, {"params", p.params}, {"ok", p.ok}, {"seconds", p.seconds}, {"values", p.values}};
        if (!p.ok) {
            j["error"] = p.error;
        }
        pts.push_back(j);
    }
    json vs = json::array();
    for (const auto &v : verdicts) {
        vs.push_back({{"criterion", v.criterion}, {"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
    }
    return {{"config", config.to_json()},
            {"points", pts},
            {"verdicts", vs},
            {"all_passed", all_passed()},
            {"seconds", seconds},
            {"output_dir", output_dir}};
}

void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn) {
    size_t workers = std::max<size_t>(1, std::min(threads, count));
    if (workers == 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

std::string resolve_output_dir(const ExperimentConfig &c) {
    if (!c.output_dir.empty()) {
        return c.output_dir;
    }
    const char *root = std::getenv(kOutputRootEnv);
    std::filesystem::path base = root && *root ? root : "runs";
    std::string leaf = c.name.empty() ? c.experiment : c.name + "_" + c.experiment;
    return (base / leaf).string();
}

RunReport run(const ExperimentConfig &c, bool write) {
    validate_config(c);
    auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.config = c;
    r.output_dir = resolve_output_dir(c);
    auto params = expand_points(c);
    r.points.resize(params.size());
    parallel_for(params.size(), c.threads, [&](size_t i) {
        PointResult &p = r.points[i];
        p.index = i;
        p.params = params[i];
        auto t0 = std::chrono::steady_clock::now();
        try {
            run_point(c, p);
            p.ok = true;
        } catch (const std::exception &e) {
            p.ok = false;
            p.error = e.what();
            p.rows.clear();
        }
        p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    r.verdicts = judge(c, r.points);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (write) {
        write_outputs(r);
    }
    return r;
}

void write_outputs(const RunReport &r) {
    namespace fs = std::filesystem;
    fs::path dir = r.output_dir;
    fs::create_directories(dir);
    std::ofstream(dir / "config.json") << r.config.to_json().dump(2) << "\n";
    CsvTable all = r.csv();
    all.write((dir / "results.csv").string());
    std::map<std::string, CsvTable> families;
    for (const auto &row : all.rows()) {
        families[row.quantity.substr(0, row.quantity.find('['))].add(row);
    }
    for (const auto &[name, table] : families) {
        table.write((dir / (name + ".csv")).string());
    }
    std::ofstream(dir / "report.json") << r.to_json().dump(2) << "\n";
}

}  // namespace holo
