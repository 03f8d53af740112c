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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mptzx/circuit_io.h"
#include "mptzx/errors.h"
#include "mptzx/harness.h"
#include "mptzx/zx_io.h"
#include "selftest.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitSelftest = 3;

struct CommonFlags {
    std::string config;
    std::optional<uint64_t> seed;
    std::optional<size_t> workers;
    std::string out;
    bool quiet = false;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool config_required) {
    auto *opt = cmd->add_option("--config", flags.config, "Experiment config (JSON)");
    if (config_required) {
        opt->required();
    }
    cmd->add_option("--seed", flags.seed, "Override master_seed");
    cmd->add_option("--workers", flags.workers, "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_flag("-q,--quiet", flags.quiet, "No progress output");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

mptzx::ExperimentConfig load_config(const std::string &experiment, const CommonFlags &flags) {
    json j;
    try {
        j = json::parse(read_file(flags.config));
    } catch (const json::parse_error &e) {
        throw mptzx::ConfigError("--config", std::string("invalid JSON: ") + e.what());
    } catch (const std::runtime_error &e) {
        throw mptzx::ConfigError("--config", e.what());
    }
    if (!j.is_object()) {
        throw mptzx::ConfigError("<root>", "config must be a JSON object");
    }
    if (!j.contains("experiment")) {
        j["experiment"] = experiment;
    }
    mptzx::ExperimentConfig cfg = mptzx::parse_config(j);
    if (cfg.experiment != mptzx::parse_experiment_kind(experiment)) {
        throw mptzx::ConfigError("experiment", "config is for " + mptzx::to_string(cfg.experiment) +
                                                   ", not " + experiment);
    }
    if (flags.seed) {
        cfg.master_seed = *flags.seed;
    }
    if (flags.workers) {
        cfg.workers = *flags.workers == 0 ? std::max<size_t>(1, std::thread::hardware_concurrency()) : *flags.workers;
    }
    if (!flags.out.empty()) {
        cfg.output_dir = flags.out;
    }
    return cfg;
}

int run(const std::string &experiment, const CommonFlags &flags) {
    mptzx::ExperimentConfig cfg = load_config(experiment, flags);
    mptzx::ProgressFn progress;
    if (!flags.quiet) {
        progress = [](const std::string &line) { std::cerr << line << std::endl; };
    }
    mptzx::RunManifest manifest = mptzx::run_experiment(cfg, progress);
    std::cout << manifest.report.dump(2) << "\n";
    std::cerr << "wrote " << manifest.outputs.size() << " files to " << cfg.output_dir << " (config "
              << manifest.config_hash << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Monitored Clifford circuits: entanglement transition and ZX percolation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mptzx::code_version());

    CommonFlags flags;
    const char *experiments[][2] = {
        {"mi-scan", "Mutual-information scan and crossing analysis"},
        {"perc-scan", "P_path scan, fermionic fits and threshold extrapolation"},
        {"phase-diagram", "MI and percolation boundaries over a (p, r) grid"},
        {"slc", "Second-largest-cluster curves and peak positions"},
        {"distance-stats", "Rewrite-distance telemetry"},
        {"collapse", "Scaling collapse of an earlier scan"},
        {"boundary-fit", "r_c(p) ~ exp(-1/(A p)) fit of phase-boundary points"},
    };
    for (auto &e : experiments) {
        CLI::App *cmd = app.add_subcommand(e[0], e[1]);
        add_common(cmd, flags, true);
    }

    std::string circuit_path;
    std::string stage = "simplified";
    std::string dump_path;
    std::string events_path;
    CLI::App *replay_cmd = app.add_subcommand("replay", "Rebuild a circuit record's diagram at a given stage");
    replay_cmd->add_option("--circuit", circuit_path, "Circuit record (JSON)")->required();
    replay_cmd->add_option("--stage", stage, "raw | graphlike | simplified");
    replay_cmd->add_option("--dump", dump_path, "Write the diagram dump here instead of stdout");
    replay_cmd->add_option("--events", events_path, "Write the rewrite event log (CSV)");
    add_common(replay_cmd, flags, false);

    CLI::App *selftest_cmd = app.add_subcommand("selftest", "Run the oracle cross-checks");
    add_common(selftest_cmd, flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App *cmd = app.get_subcommands().front();
    std::string name = cmd->get_name();
    try {
        if (name == "selftest") {
            bool ok = mptzx_tools::run_selftest(std::cout, flags.seed.value_or(20240601));
            return ok ? kExitOk : kExitSelftest;
        }
        if (name == "replay") {
            std::string expected_hash;
            if (!flags.config.empty()) {
                json cj = json::parse(read_file(flags.config));
                expected_hash = mptzx::config_hash(mptzx::parse_config(cj));
            }
            json record = mptzx::parse_json_text(read_file(circuit_path), circuit_path);
            mptzx::ReplayResult result =
                mptzx::replay(record, mptzx::parse_replay_stage(stage), expected_hash);
            if (dump_path.empty()) {
                std::cout << result.diagram.dump(2) << "\n";
            } else {
                std::ofstream(dump_path) << result.diagram.dump(2) << "\n";
            }
            if (!events_path.empty()) {
                std::ofstream ev(events_path);
                mptzx::write_event_csv(ev, result.events);
            }
            return kExitOk;
        }
        return run(name, flags);
    } catch (const mptzx::ConfigError &e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
