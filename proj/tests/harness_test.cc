// Copyright 2026 The mptzx Authors
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

#include "mptzx/harness.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mptzx/circuit_io.h"
#include "mptzx/csv.h"
#include "mptzx/errors.h"

using namespace mptzx;
namespace fs = std::filesystem;

namespace {

std::string config_error_field(const nlohmann::json &j) {
    try {
        parse_config(j);
    } catch (const ConfigError &e) {
        return e.field();
    }
    return "<no error>";
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string &name) {
    fs::path dir = fs::path(::testing::TempDir()) / ("mptzx_harness_" + name);
    fs::remove_all(dir);
    return dir;
}

nlohmann::json small_perc_scan() {
    return {{"experiment", "perc_scan"},
            {"p", {{"start", 0.1}, {"stop", 0.4}, {"step", 0.05}}},
            {"r", {0.1}},
            {"n", {8, 12, 16}},
            {"realizations", 30},
            {"master_seed", 42}};
}

// Every output except manifest.json, whose timestamps differ between runs.
std::map<std::string, std::string> outputs_of(const fs::path &dir) {
    std::map<std::string, std::string> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name != "manifest.json") {
            files[name] = read_file(entry.path());
        }
    }
    return files;
}

}  // namespace

TEST(ParseConfig, GridsAndDefaults) {
    ExperimentConfig cfg = parse_config(small_perc_scan());
    EXPECT_EQ(cfg.experiment, ExperimentKind::kPercScan);
    ASSERT_EQ(cfg.p_values.size(), 7u);
    EXPECT_DOUBLE_EQ(cfg.p_values.back(), 0.4);
    EXPECT_EQ(cfg.n_realizations, 30u);
    EXPECT_EQ(cfg.depth_factor, 4u);
    EXPECT_EQ(cfg.workers, 1u);
    EXPECT_EQ(parse_config({{"experiment", "mi-scan"}, {"p", 0.2}, {"r", {0.1}}, {"n", {12}}}).p_values,
              std::vector<double>{0.2});
    nlohmann::json auto_workers = small_perc_scan();
    auto_workers["workers"] = 0;
    EXPECT_GE(parse_config(auto_workers).workers, 1u);
}

TEST(ParseConfig, ErrorsNameTheField) {
    nlohmann::json j = small_perc_scan();
    j["bogus"] = 1;
    EXPECT_EQ(config_error_field(j), "bogus");

    j = small_perc_scan();
    j.erase("experiment");
    EXPECT_EQ(config_error_field(j), "experiment");

    j = small_perc_scan();
    j["experiment"] = "teleport";
    EXPECT_EQ(config_error_field(j), "experiment");

    j = small_perc_scan();
    j["p"] = nlohmann::json::array();
    EXPECT_EQ(config_error_field(j), "p");

    j = small_perc_scan();
    j["r"] = {1.5};
    EXPECT_EQ(config_error_field(j), "r");

    j = small_perc_scan();
    j["n"] = {7};
    EXPECT_EQ(config_error_field(j), "n");

    j = small_perc_scan();
    j["experiment"] = "mi_scan";  // sizes must be multiples of 6
    EXPECT_EQ(config_error_field(j), "n");

    j = small_perc_scan();
    j["realizations"] = 1;
    EXPECT_EQ(config_error_field(j), "realizations");

    j = small_perc_scan();
    j["alpha"] = 2;
    EXPECT_EQ(config_error_field(j), "alpha");

    j = small_perc_scan();
    j["initial_state"] = "ghz";
    EXPECT_EQ(config_error_field(j), "initial_state");

    EXPECT_EQ(config_error_field({{"experiment", "collapse"}}), "collapse.input");
    EXPECT_EQ(config_error_field({{"experiment", "boundary_fit"}}), "boundary");
    EXPECT_EQ(config_error_field(nlohmann::json::array()), "<root>");
}

TEST(ConfigHash, IgnoresWorkersAndOutputDir) {
    nlohmann::json j = small_perc_scan();
    std::string h = config_hash(parse_config(j));
    EXPECT_EQ(h.size(), 16u);
    j["workers"] = 8;
    j["output_dir"] = "/elsewhere";
    EXPECT_EQ(config_hash(parse_config(j)), h);
    j["master_seed"] = 43;
    EXPECT_NE(config_hash(parse_config(j)), h);
}

TEST(RunExperiment, ByteIdenticalAcrossWorkerCounts) {
    ExperimentConfig cfg = parse_config(small_perc_scan());
    fs::path dir_one = scratch_dir("one");
    fs::path dir_many = scratch_dir("many");
    cfg.output_dir = dir_one.string();
    cfg.workers = 1;
    RunManifest m1 = run_experiment(cfg);
    cfg.output_dir = dir_many.string();
    cfg.workers = 4;
    RunManifest m2 = run_experiment(cfg);
    auto a = outputs_of(dir_one);
    EXPECT_EQ(a, outputs_of(dir_many));
    EXPECT_TRUE(a.count("perc_scan.csv"));
    EXPECT_TRUE(a.count("slc.csv"));
    EXPECT_TRUE(a.count("perc_scan_report.json"));
    EXPECT_TRUE(a.count("config.json"));
    ASSERT_EQ(m1.outputs.size(), m2.outputs.size());
    for (size_t k = 0; k < m1.outputs.size(); k++) {
        EXPECT_EQ(m1.outputs[k].content_hash, m2.outputs[k].content_hash);
    }
    EXPECT_TRUE(fs::exists(dir_many / "manifest.json"));
    for (const auto &entry : fs::directory_iterator(dir_many)) {
        EXPECT_NE(entry.path().extension(), ".partial");
    }
}

TEST(RunExperiment, CsvCarriesConfigHashAndColumns) {
    ExperimentConfig cfg = parse_config(small_perc_scan());
    cfg.output_dir = scratch_dir("columns").string();
    RunManifest m = run_experiment(cfg);
    CsvTable t = read_csv_file((fs::path(cfg.output_dir) / "perc_scan.csv").string());
    ASSERT_FALSE(t.comments.empty());
    EXPECT_NE(t.comments[0].find("config_hash=" + m.config_hash), std::string::npos);
    EXPECT_EQ(t.header, (std::vector<std::string>{"p", "r", "N", "M", "P_path", "stderr"}));
    EXPECT_EQ(t.rows.size(), 21u);
    for (size_t row = 0; row < t.rows.size(); row++) {
        double p_path = t.number(row, "P_path");
        EXPECT_GE(p_path, 0);
        EXPECT_LE(p_path, 1);
    }
}

TEST(RunExperiment, MiScanAndCollapseChain) {
    nlohmann::json j = {{"experiment", "mi_scan"},
                        {"p", {0.1, 0.2, 0.3, 0.4}},
                        {"r", {0.1}},
                        {"n", {12, 24}},
                        {"realizations", 20},
                        {"master_seed", 3}};
    ExperimentConfig cfg = parse_config(j);
    cfg.output_dir = scratch_dir("mi").string();
    run_experiment(cfg);
    fs::path csv = fs::path(cfg.output_dir) / "mi_scan.csv";
    CsvTable t = read_csv_file(csv.string());
    EXPECT_EQ(t.rows.size(), 8u);
    EXPECT_TRUE(t.has_column("i2_mean"));

    nlohmann::json c = {{"experiment", "collapse"},
                        {"collapse", {{"input", csv.string()}, {"x_c", 0.25}, {"exponents", {0.8, 1.3333, 2}}}}};
    ExperimentConfig ccfg = parse_config(c);
    ccfg.output_dir = scratch_dir("collapse").string();
    RunManifest m = run_experiment(ccfg);
    EXPECT_TRUE(fs::exists(fs::path(ccfg.output_dir) / "collapse.csv"));
    EXPECT_TRUE(fs::exists(fs::path(ccfg.output_dir) / "collapse_report.json"));
    EXPECT_EQ(m.experiment, "collapse");
}

TEST(RunExperiment, BoundaryFitFromPoints) {
    nlohmann::json j = {{"experiment", "boundary_fit"},
                        {"boundary", {{"points", {{0.1, 0.5 * std::exp(-1 / 0.03)},
                                                  {0.2, 0.5 * std::exp(-1 / 0.06)},
                                                  {0.3, 0.5 * std::exp(-1 / 0.09)}}}}}};
    ExperimentConfig cfg = parse_config(j);
    cfg.output_dir = scratch_dir("boundary").string();
    run_experiment(cfg);
    nlohmann::json out = nlohmann::json::parse(read_file(fs::path(cfg.output_dir) / "boundary_fit.json"));
    EXPECT_NEAR(out["A"].get<double>(), 0.3, 1e-9);
}

TEST(RunExperiment, FailedRunLeavesNoFiles) {
    nlohmann::json c = {{"experiment", "collapse"}, {"collapse", {{"input", "/nonexistent/mi_scan.csv"}}}};
    ExperimentConfig cfg = parse_config(c);
    cfg.output_dir = scratch_dir("failed").string();
    EXPECT_ANY_THROW(run_experiment(cfg));
    if (fs::exists(cfg.output_dir)) {
        EXPECT_TRUE(fs::is_empty(cfg.output_dir));
    }
}

TEST(Replay, StagesAndHashCheck) {
    BrickworkCircuit c = sample_circuit({0.3, 0.4, 6, 4, InitialState::kBellPairs, 5});
    nlohmann::json record = circuit_to_json(c);
    record["config_hash"] = "0123456789abcdef";
    ReplayResult raw = replay(record, ReplayStage::kRaw);
    EXPECT_TRUE(raw.events.empty());
    ReplayResult simplified = replay(record, ReplayStage::kSimplified, "0123456789abcdef");
    EXPECT_LE(simplified.diagram["spiders"].size(), raw.diagram["spiders"].size());
    EXPECT_EQ(replay(record, ReplayStage::kSimplified).diagram, simplified.diagram);
    EXPECT_THROW(replay(record, ReplayStage::kRaw, "ffffffffffffffff"), std::invalid_argument);
    EXPECT_EQ(parse_replay_stage("graph_like"), ReplayStage::kGraphLike);
    EXPECT_THROW(parse_replay_stage("done"), std::invalid_argument);
}

TEST(ExperimentKind, NamesRoundTrip) {
    for (ExperimentKind k : {ExperimentKind::kMiScan, ExperimentKind::kPercScan, ExperimentKind::kPhaseDiagram,
                             ExperimentKind::kSlc, ExperimentKind::kDistanceStats, ExperimentKind::kCollapse,
                             ExperimentKind::kBoundaryFit}) {
        EXPECT_EQ(parse_experiment_kind(to_string(k)), k);
    }
    EXPECT_EQ(code_version(), "0.1.0");
}
