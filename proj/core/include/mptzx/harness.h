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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mptzx/circuit.h"
#include "mptzx/collapse.h"
#include "mptzx/zx_rules.h"

namespace mptzx {

enum class ExperimentKind {
    kMiScan,
    kPercScan,
    kPhaseDiagram,
    kSlc,
    kDistanceStats,
    kCollapse,
    kBoundaryFit,
};

std::string to_string(ExperimentKind kind);
/// Accepts both "mi_scan" and "mi-scan" spellings.
ExperimentKind parse_experiment_kind(const std::string &text);

struct CollapseSettings {
    std::string input;  ///< mi_scan.csv or perc_scan.csv from an earlier run
    CollapseMode mode = CollapseMode::kTransition;
    std::vector<double> exponents;
    /// Transition center. Unset: the I2 crossing, or per-size fermionic
    /// thresholds for P_path data.
    std::optional<double> x_c;
    std::string scan = "p";  ///< which parameter varies along a curve
    std::optional<double> fixed;  ///< value of the other parameter
    /// Boundary-mode abscissa: "r", "one_minus_p" or "r_one_minus_p".
    std::string delta = "r";
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::kMiScan;
    std::vector<double> p_values;
    std::vector<double> r_values;
    std::vector<size_t> n_values;
    size_t n_realizations = 1000;
    uint64_t master_seed = 0;
    size_t depth_factor = 4;  ///< depth_layers = depth_factor * N
    InitialState initial_state = InitialState::kBellPairs;
    std::string output_dir = "out";
    size_t workers = 1;
    double nu = 4.0 / 3.0;
    double alpha = 0.05;
    double window = 0.25;
    size_t bins_per_decade = 8;
    std::vector<double> collapse_nus = {0.8, 4.0 / 3.0, 2.0};
    CollapseSettings collapse;
    std::vector<std::pair<double, double>> boundary_points;  ///< (p, r_c)
    std::string boundary_input;  ///< phase_mi.csv or phase_perc.csv
    double boundary_p_max = 1.0;
    std::vector<std::pair<double, double>> sample_points;  ///< (p, r) circuit dumps
};

/// Validates and fills defaults. Throws ConfigError naming the offending
/// field. Grids may be lists or {"start", "stop", "step"} objects.
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config_file(const std::string &path);

/// Canonical JSON of every field that influences results (not workers or
/// output_dir).
nlohmann::json config_to_json(const ExperimentConfig &config);

/// 16 hex digits identifying config_to_json(config).
std::string config_hash(const ExperimentConfig &config);

struct OutputFile {
    std::string name;
    size_t rows = 0;
    std::string content_hash;
};

struct RunManifest {
    std::string experiment;
    std::string config_hash;
    std::string code_version;
    uint64_t master_seed = 0;
    std::string started_at;
    std::string finished_at;
    std::vector<OutputFile> outputs;
    nlohmann::json report;

    nlohmann::json to_json() const;
};

using ProgressFn = std::function<void(const std::string &)>;

/// Runs the experiment and writes its data files plus manifest.json into
/// config.output_dir. Files are staged and renamed into place only after
/// every computation succeeded; staged files are removed on failure.
RunManifest run_experiment(const ExperimentConfig &config, const ProgressFn &progress = {});

enum class ReplayStage { kRaw, kGraphLike, kSimplified };

ReplayStage parse_replay_stage(const std::string &text);

struct ReplayResult {
    nlohmann::json diagram;
    std::vector<RewriteEvent> events;
};

/// Rebuilds a circuit record's diagram at the requested stage. If
/// `expected_hash` is non-empty the record must carry the same
/// "config_hash" (std::invalid_argument otherwise).
ReplayResult replay(const nlohmann::json &record, ReplayStage stage, const std::string &expected_hash = "");

std::string code_version();

}  // namespace mptzx
