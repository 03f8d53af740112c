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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mptzx/circuit_io.h"
#include "mptzx/crossing.h"
#include "mptzx/csv.h"
#include "mptzx/ensemble.h"
#include "mptzx/errors.h"
#include "mptzx/rng.h"
#include "mptzx/scaling.h"
#include "mptzx/zx_build.h"
#include "mptzx/zx_io.h"
#include "mptzx/zx_simplify.h"

#ifndef MPTZX_VERSION
#define MPTZX_VERSION "unknown"
#endif

namespace mptzx {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::vector<std::pair<ExperimentKind, std::string>> kExperimentNames = {
    {ExperimentKind::kMiScan, "mi_scan"},
    {ExperimentKind::kPercScan, "perc_scan"},
    {ExperimentKind::kPhaseDiagram, "phase_diagram"},
    {ExperimentKind::kSlc, "slc"},
    {ExperimentKind::kDistanceStats, "distance_stats"},
    {ExperimentKind::kCollapse, "collapse"},
    {ExperimentKind::kBoundaryFit, "boundary_fit"},
};

std::string hex64(uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

// ---------------------------------------------------------------------------
// Config parsing.

double get_number(const json &j, const std::string &field) {
    if (!j.is_number()) {
        throw ConfigError(field, "expected a number");
    }
    return j.get<double>();
}

size_t get_count(const json &j, const std::string &field) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ConfigError(field, "expected a non-negative integer");
    }
    return j.get<size_t>();
}

std::vector<double> parse_grid(const json &j, const std::string &field) {
    std::vector<double> out;
    if (j.is_array()) {
        for (size_t k = 0; k < j.size(); k++) {
            out.push_back(get_number(j[k], field + "[" + std::to_string(k) + "]"));
        }
    } else if (j.is_number()) {
        out.push_back(j.get<double>());
    } else if (j.is_object()) {
        for (const char *key : {"start", "stop", "step"}) {
            if (!j.contains(key)) {
                throw ConfigError(field + "." + key, "missing");
            }
        }
        double start = get_number(j.at("start"), field + ".start");
        double stop = get_number(j.at("stop"), field + ".stop");
        double step = get_number(j.at("step"), field + ".step");
        if (!(step > 0) || stop < start) {
            throw ConfigError(field, "need step > 0 and stop >= start");
        }
        size_t count = static_cast<size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 100000) {
            throw ConfigError(field, "grid too large");
        }
        for (size_t k = 0; k < count; k++) {
            // Round away accumulated binary noise so grids print cleanly.
            double v = start + static_cast<double>(k) * step;
            out.push_back(std::round(v * 1e12) / 1e12);
        }
    } else {
        throw ConfigError(field, "expected a list, a number or {start, stop, step}");
    }
    return out;
}

void check_probabilities(const std::vector<double> &values, const std::string &field) {
    for (double v : values) {
        if (!(v >= 0 && v <= 1)) {
            throw ConfigError(field, "values must lie in [0, 1]");
        }
    }
}

std::vector<std::pair<double, double>> parse_pairs(const json &j, const std::string &field) {
    if (!j.is_array()) {
        throw ConfigError(field, "expected a list of [a, b] pairs");
    }
    std::vector<std::pair<double, double>> out;
    for (size_t k = 0; k < j.size(); k++) {
        std::string f = field + "[" + std::to_string(k) + "]";
        if (!j[k].is_array() || j[k].size() != 2) {
            throw ConfigError(f, "expected [a, b]");
        }
        out.emplace_back(get_number(j[k][0], f), get_number(j[k][1], f));
    }
    return out;
}

std::string get_string(const json &j, const std::string &field) {
    if (!j.is_string()) {
        throw ConfigError(field, "expected a string");
    }
    return j.get<std::string>();
}

bool needs_model_grid(ExperimentKind kind) {
    return kind != ExperimentKind::kCollapse && kind != ExperimentKind::kBoundaryFit;
}

// ---------------------------------------------------------------------------
// Output staging.

class Outputs {
   public:
    Outputs(fs::path dir, std::string hash, uint64_t master_seed)
        : dir_(std::move(dir)), hash_(std::move(hash)), master_seed_(master_seed) {
    }

    ~Outputs() {
        if (!committed_) {
            for (const auto &f : staged_) {
                std::error_code ec;
                fs::remove(f.first, ec);
            }
        }
    }

    void csv(const std::string &name, CsvTable table) {
        table.comments.insert(table.comments.begin(),
                              " config_hash=" + hash_ + " master_seed=" + std::to_string(master_seed_));
        std::ostringstream ss;
        table.write(ss);
        stage(name, ss.str(), table.rows.size());
    }

    void json_file(const std::string &name, json j) {
        j["config_hash"] = hash_;
        j["master_seed"] = master_seed_;
        size_t rows = j.is_object() ? j.size() : 1;
        stage(name, j.dump(2) + "\n", rows);
    }

    std::vector<OutputFile> commit() {
        for (const auto &[tmp, final_path] : staged_) {
            fs::rename(tmp, final_path);
        }
        committed_ = true;
        return files_;
    }

   private:
    void stage(const std::string &name, const std::string &content, size_t rows) {
        fs::create_directories(dir_);
        fs::path final_path = dir_ / name;
        fs::path tmp = dir_ / (name + ".partial");
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot write " + tmp.string());
            }
            staged_.emplace_back(tmp, final_path);
            out << content;
            if (!out) {
                throw std::runtime_error("write failed for " + tmp.string());
            }
        }
        files_.push_back({name, rows, hex64(fnv1a64(content))});
    }

    fs::path dir_;
    std::string hash_;
    uint64_t master_seed_;
    std::vector<std::pair<fs::path, fs::path>> staged_;
    std::vector<OutputFile> files_;
    bool committed_ = false;
};

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// ---------------------------------------------------------------------------
// Ensembles over grids.

uint64_t stream_seed(const ExperimentConfig &cfg, const std::string &id, size_t n, double p, double r) {
    return derive_seed({cfg.master_seed, fnv1a64(id), static_cast<uint64_t>(n), std::bit_cast<uint64_t>(p),
                        std::bit_cast<uint64_t>(r)});
}

ModelParams model(const ExperimentConfig &cfg, size_t n, double p, double r) {
    ModelParams params;
    params.p = p;
    params.r = r;
    params.n_qubits = n;
    params.depth_layers = cfg.depth_factor * n;
    params.initial_state = cfg.initial_state;
    return params;
}

void report(const ProgressFn &progress, const std::string &text) {
    if (progress) {
        progress(text);
    }
}

std::string point_label(const std::string &id, double p, double r, size_t n) {
    return id + " p=" + format_double(p) + " r=" + format_double(r) + " N=" + std::to_string(n);
}

CsvTable i2_grid(const ExperimentConfig &cfg, const std::string &id, const ProgressFn &progress) {
    CsvTable t;
    t.header = {"r", "N", "p", "M", "i2_mean", "i2_stderr"};
    for (double r : cfg.r_values) {
        for (size_t n : cfg.n_values) {
            for (double p : cfg.p_values) {
                MeanEstimate est = measure_i2_ensemble(model(cfg, n, p, r), cfg.n_realizations,
                                                       stream_seed(cfg, id, n, p, r), cfg.workers);
                t.rows.push_back({format_double(r), std::to_string(n), format_double(p),
                                  std::to_string(cfg.n_realizations), format_double(est.mean),
                                  format_double(est.stderr_)});
                report(progress, point_label(id, p, r, n) + " I2=" + format_double(est.mean));
            }
        }
    }
    return t;
}

struct PercTables {
    CsvTable p_path;
    CsvTable slc;
};

PercTables percolation_grid(const ExperimentConfig &cfg, const std::string &id, const ProgressFn &progress) {
    PercTables t;
    t.p_path.header = {"p", "r", "N", "M", "P_path", "stderr"};
    t.slc.header = {"p", "r", "N", "M", "mean_SLC", "stderr", "mean_largest"};
    for (double r : cfg.r_values) {
        for (size_t n : cfg.n_values) {
            for (double p : cfg.p_values) {
                auto samples = percolation_ensemble(model(cfg, n, p, r), cfg.n_realizations,
                                                    stream_seed(cfg, id, n, p, r), cfg.workers);
                PercolationSummary s = summarize_percolation(samples);
                std::string m = std::to_string(s.count);
                t.p_path.rows.push_back({format_double(p), format_double(r), std::to_string(n), m,
                                         format_double(s.p_path), format_double(s.p_path_err)});
                t.slc.rows.push_back({format_double(p), format_double(r), std::to_string(n), m,
                                      format_double(s.slc.mean), format_double(s.slc.stderr_),
                                      format_double(s.largest.mean)});
                report(progress, point_label(id, p, r, n) + " P_path=" + format_double(s.p_path));
            }
        }
    }
    return t;
}

/// Curves y(x) per N from rows whose `fixed_col` equals `fixed_value`.
CurveSet curves_from(const CsvTable &t, const std::string &x_col, const std::string &y_col, const std::string &err_col,
                     const std::string &fixed_col, double fixed_value) {
    CurveSet curves;
    for (size_t i = 0; i < t.rows.size(); i++) {
        if (t.number(i, fixed_col) != fixed_value) {
            continue;
        }
        curves[t.count(i, "N")].push_back({t.number(i, x_col), t.number(i, y_col), t.number(i, err_col)});
    }
    for (auto &[n, c] : curves) {
        std::sort(c.begin(), c.end(), [](const CurvePoint &a, const CurvePoint &b) { return a.x < b.x; });
    }
    return curves;
}

json crossing_json(const CurveSet &curves) {
    try {
        CrossingEstimate est = find_crossing(curves);
        json pairs = json::array();
        for (const PairCrossing &pc : est.pairs) {
            pairs.push_back({{"n_small", pc.n_small}, {"n_large", pc.n_large}, {"x", pc.x}, {"err", pc.err}});
        }
        return {{"x", est.x}, {"err", est.err}, {"pairs", pairs}};
    } catch (const std::exception &e) {
        return {{"error", e.what()}};
    }
}

json i2_analysis(const ExperimentConfig &cfg, const CsvTable &t) {
    json per_r = json::array();
    for (double r : cfg.r_values) {
        CurveSet curves = curves_from(t, "p", "i2_mean", "i2_stderr", "r", r);
        json entry = {{"r", r}};
        if (curves.size() >= 2) {
            json crossing = crossing_json(curves);
            entry["crossing"] = crossing;
            if (crossing.contains("x")) {
                json scores = json::array();
                for (double nu : cfg.collapse_nus) {
                    CollapseResult c =
                        scaling_collapse(curves, crossing["x"].get<double>(), nu, CollapseMode::kTransition);
                    scores.push_back({{"nu", nu}, {"score", c.score}});
                }
                entry["collapse"] = scores;
            }
        }
        per_r.push_back(entry);
    }
    return {{"experiment", "mi_scan"}, {"per_r", per_r}};
}

json fit_json(const ThresholdFit &f) {
    return {{"N", f.n},
            {"p_c", f.p_c},
            {"p_c_err", f.p_c_err},
            {"temperature", f.temperature},
            {"temperature_scale", f.temperature_scale},
            {"chi2_per_dof", f.chi2_per_dof}};
}

struct PathAnalysis {
    json report;
    std::vector<ThresholdFit> fits;
    std::optional<FssEstimate> fss;
};

PathAnalysis p_path_analysis(const ExperimentConfig &cfg, const CurveSet &curves) {
    PathAnalysis out;
    json per_n = json::array();
    for (const auto &[n, curve] : curves) {
        try {
            ThresholdFit f = fermionic_fit(n, curve, cfg.nu);
            out.fits.push_back(f);
            per_n.push_back(fit_json(f));
        } catch (const FitError &e) {
            per_n.push_back({{"N", n}, {"error", e.what()}});
        }
    }
    json &rep = out.report;
    rep["per_N"] = per_n;
    rep["nu"] = cfg.nu;
    if (out.fits.size() >= 2) {
        bool decreasing = true;
        for (size_t k = 1; k < out.fits.size(); k++) {
            decreasing = decreasing && out.fits[k].p_c < out.fits[k - 1].p_c;
        }
        rep["thresholds_decreasing"] = decreasing;
    }
    try {
        FssEstimate est = extrapolate_threshold(out.fits, cfg.nu, cfg.alpha);
        out.fss = est;
        rep["p_c_inf"] = est.p_c_inf;
        rep["var"] = est.variance;
        rep["half_width"] = est.half_width;
        rep["intercept_err"] = est.intercept_err;
        rep["slope"] = est.slope;
        rep["alpha"] = cfg.alpha;
    } catch (const std::exception &e) {
        rep["extrapolation_error"] = e.what();
    }
    if (out.fits.size() >= 2) {
        std::map<size_t, double> centers;
        CurveSet fitted;
        for (const ThresholdFit &f : out.fits) {
            centers[f.n] = f.p_c;
            fitted[f.n] = curves.at(f.n);
        }
        json scores = json::array();
        for (double nu : cfg.collapse_nus) {
            scores.push_back({{"nu", nu}, {"score", collapse_check(fitted, centers, nu).score}});
        }
        rep["collapse"] = scores;
    }
    if (curves.size() >= 2) {
        rep["crossing"] = crossing_json(curves);
    }
    return out;
}

json slc_analysis(const ExperimentConfig &cfg, const CsvTable &slc) {
    json per_r = json::array();
    for (double r : cfg.r_values) {
        CurveSet curves = curves_from(slc, "p", "mean_SLC", "stderr", "r", r);
        json peaks = json::array();
        std::vector<FssPoint> defined;
        for (const auto &[n, curve] : curves) {
            PeakEstimate pk = quadratic_peak(curve);
            if (pk.defined) {
                peaks.push_back({{"N", n}, {"p_peak", pk.x}, {"height", pk.height}});
                defined.push_back({n, pk.x, 0.0});
            } else {
                peaks.push_back({{"N", n}, {"peak_undefined", true}});
            }
        }
        json entry = {{"r", r}, {"peaks", peaks}};
        if (defined.size() >= 2) {
            bool decreasing = true;
            for (size_t k = 1; k < defined.size(); k++) {
                decreasing = decreasing && defined[k].p_c < defined[k - 1].p_c;
            }
            entry["peak_decreasing"] = decreasing;
        }
        if (defined.size() >= 3) {
            LinearFit lf = peak_scaling_fit(defined, 0.75);
            entry["peak_fit"] = {{"p_c_inf", lf.intercept}, {"C", lf.slope}, {"exponent", 0.75}};
        }
        per_r.push_back(entry);
    }
    return {{"experiment", "slc"}, {"per_r", per_r}};
}

// ---------------------------------------------------------------------------
// Experiments.

void run_mi_scan(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    CsvTable t = i2_grid(cfg, "mi_scan", progress);
    rep = i2_analysis(cfg, t);
    out.csv("mi_scan.csv", std::move(t));
    out.json_file("mi_scan_report.json", rep);
}

void run_perc_scan(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    PercTables t = percolation_grid(cfg, "perc_scan", progress);
    json per_r = json::array();
    for (double r : cfg.r_values) {
        PathAnalysis a = p_path_analysis(cfg, curves_from(t.p_path, "p", "P_path", "stderr", "r", r));
        a.report["r"] = r;
        per_r.push_back(a.report);
    }
    rep = {{"experiment", "perc_scan"}, {"per_r", per_r}};
    out.csv("perc_scan.csv", std::move(t.p_path));
    out.csv("slc.csv", std::move(t.slc));
    out.json_file("perc_scan_report.json", rep);
}

void run_slc(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    PercTables t = percolation_grid(cfg, "slc", progress);
    rep = slc_analysis(cfg, t.slc);
    out.csv("slc.csv", std::move(t.slc));
    out.csv("perc_scan.csv", std::move(t.p_path));
    out.json_file("slc_report.json", rep);
}

void run_phase_diagram(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    CsvTable i2 = i2_grid(cfg, "phase_diagram/i2", progress);
    PercTables perc = percolation_grid(cfg, "phase_diagram/perc", progress);

    CsvTable mi_curve;
    mi_curve.header = {"r", "p_c", "err", "status"};
    CsvTable perc_curve = mi_curve;
    json per_r = json::array();
    for (double r : cfg.r_values) {
        json entry = {{"r", r}};
        CurveSet i2_curves = curves_from(i2, "p", "i2_mean", "i2_stderr", "r", r);
        json crossing = crossing_json(i2_curves);
        entry["mi"] = crossing;
        if (crossing.contains("x")) {
            mi_curve.rows.push_back({format_double(r), format_double(crossing["x"].get<double>()),
                                     format_double(crossing["err"].get<double>()), "ok"});
        } else {
            mi_curve.rows.push_back({format_double(r), "nan", "nan", "no_crossing"});
        }

        PathAnalysis a = p_path_analysis(cfg, curves_from(perc.p_path, "p", "P_path", "stderr", "r", r));
        entry["percolation"] = a.report;
        if (a.fss) {
            perc_curve.rows.push_back({format_double(r), format_double(a.fss->p_c_inf),
                                       format_double(std::sqrt(a.fss->variance)), "extrapolated"});
        } else if (!a.fits.empty()) {
            const ThresholdFit &f = a.fits.back();
            perc_curve.rows.push_back(
                {format_double(r), format_double(f.p_c), format_double(f.p_c_err), "largest_N"});
        } else {
            perc_curve.rows.push_back({format_double(r), "nan", "nan", "no_fit"});
        }
        per_r.push_back(entry);
    }
    rep = {{"experiment", "phase_diagram"}, {"per_r", per_r}};

    size_t n_small = *std::min_element(cfg.n_values.begin(), cfg.n_values.end());
    for (size_t k = 0; k < cfg.sample_points.size(); k++) {
        auto [p, r] = cfg.sample_points[k];
        ModelParams params = model(cfg, n_small, p, r);
        params.seed = realization_seed(stream_seed(cfg, "phase_diagram/sample", n_small, p, r), 0);
        json record = circuit_to_json(sample_circuit(params));
        record["p"] = p;
        record["r"] = r;
        out.json_file("sample_" + std::to_string(k) + ".json", record);
    }
    out.csv("phase_i2.csv", std::move(i2));
    out.csv("phase_ppath.csv", std::move(perc.p_path));
    out.csv("phase_slc.csv", std::move(perc.slc));
    out.csv("phase_mi.csv", std::move(mi_curve));
    out.csv("phase_perc.csv", std::move(perc_curve));
    out.json_file("phase_diagram_report.json", rep);
}

void run_distance_stats(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    CsvTable hist;
    hist.header = {"p", "r", "N", "bin_lo", "bin_hi", "count"};
    CsvTable steps;
    steps.header = {"p", "r", "N", "step", "mean_distance", "count"};
    json points = json::array();
    for (double r : cfg.r_values) {
        for (size_t n : cfg.n_values) {
            for (double p : cfg.p_values) {
                PooledDistanceStats s =
                    pooled_distance_stats(model(cfg, n, p, r), cfg.n_realizations,
                                          stream_seed(cfg, "distance_stats", n, p, r), cfg.workers, cfg.window,
                                          cfg.bins_per_decade);
                std::vector<std::string> key = {format_double(p), format_double(r), std::to_string(n)};
                for (size_t k = 0; k < s.histogram.counts.size(); k++) {
                    auto row = key;
                    row.insert(row.end(), {format_double(s.histogram.edges[k]), format_double(s.histogram.edges[k + 1]),
                                           std::to_string(s.histogram.counts[k])});
                    hist.rows.push_back(std::move(row));
                }
                for (const StepDistance &sd : s.per_step) {
                    auto row = key;
                    row.insert(row.end(), {std::to_string(sd.step), format_double(sd.mean), std::to_string(sd.count)});
                    steps.rows.push_back(std::move(row));
                }
                json tail = std::isnan(s.tail_slope) ? json(nullptr) : json(s.tail_slope);
                points.push_back({{"p", p},
                                  {"r", r},
                                  {"N", n},
                                  {"d_max", s.d_max},
                                  {"window_events", s.window_events},
                                  {"fraction_above_N", s.fraction_above_n},
                                  {"tail_slope", tail}});
                report(progress, point_label("distance_stats", p, r, n) +
                                     " frac(d>N)=" + format_double(s.fraction_above_n));
            }
        }
    }
    rep = {{"experiment", "distance_stats"}, {"window", cfg.window}, {"points", points}};
    out.csv("distance_hist.csv", std::move(hist));
    out.csv("distance_steps.csv", std::move(steps));
    out.json_file("distance_stats_report.json", rep);
}

double delta_of(const std::string &delta, double p, double r) {
    if (delta == "r") {
        return r;
    }
    if (delta == "one_minus_p") {
        return 1 - p;
    }
    return r * (1 - p);
}

void run_collapse(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    const CollapseSettings &c = cfg.collapse;
    CsvTable in = read_csv_file(c.input);
    bool is_i2 = in.has_column("i2_mean");
    std::string y_col = is_i2 ? "i2_mean" : "P_path";
    std::string err_col = is_i2 ? "i2_stderr" : "stderr";
    std::string other = c.scan == "p" ? "r" : "p";

    std::set<double> fixed_values;
    for (size_t i = 0; i < in.rows.size(); i++) {
        fixed_values.insert(in.number(i, other));
    }
    if (fixed_values.empty()) {
        throw ConfigError("collapse.input", "no data rows");
    }
    double fixed = c.fixed.value_or(*fixed_values.begin());
    if (!c.fixed && fixed_values.size() > 1) {
        throw ConfigError("collapse.fixed", "input has several values of " + other + "; choose one");
    }

    CurveSet curves;
    for (size_t i = 0; i < in.rows.size(); i++) {
        if (in.number(i, other) != fixed) {
            continue;
        }
        double p = in.number(i, "p");
        double r = in.number(i, "r");
        double x = c.mode == CollapseMode::kBoundary ? delta_of(c.delta, p, r) : in.number(i, c.scan);
        curves[in.count(i, "N")].push_back({x, in.number(i, y_col), in.number(i, err_col)});
    }
    for (auto &[n, curve] : curves) {
        std::sort(curve.begin(), curve.end(), [](const CurvePoint &a, const CurvePoint &b) { return a.x < b.x; });
    }
    if (curves.empty()) {
        throw ConfigError("collapse.fixed", "no rows with " + other + " = " + format_double(fixed));
    }

    std::vector<double> exponents = c.exponents.empty() ? cfg.collapse_nus : c.exponents;
    CsvTable table;
    table.header = {"exponent", "N", "x_scaled", "y", "err"};
    json scores = json::array();
    json centers_json = json::object();
    std::optional<std::map<size_t, double>> centers;
    double x_c = 0;
    if (c.mode == CollapseMode::kTransition) {
        if (c.x_c) {
            x_c = *c.x_c;
        } else if (is_i2) {
            CrossingEstimate est = find_crossing(curves);
            x_c = est.x;
        } else {
            centers.emplace();
            for (const auto &[n, curve] : curves) {
                (*centers)[n] = fermionic_fit(n, curve, cfg.nu).p_c;
                centers_json[std::to_string(n)] = (*centers)[n];
            }
        }
    }
    double best_score = std::numeric_limits<double>::infinity();
    double best_exponent = 0;
    for (double e : exponents) {
        CollapseResult res = centers ? collapse_check(curves, *centers, e) : scaling_collapse(curves, x_c, e, c.mode);
        for (const CollapsedPoint &pt : res.points) {
            table.rows.push_back({format_double(e), std::to_string(pt.n), format_double(pt.x), format_double(pt.y),
                                  format_double(pt.err)});
        }
        scores.push_back({{"exponent", e}, {"score", res.score}, {"degenerate", res.degenerate}});
        if (res.score < best_score) {
            best_score = res.score;
            best_exponent = e;
        }
        report(progress, "collapse exponent=" + format_double(e) + " score=" + format_double(res.score));
    }
    rep = {{"experiment", "collapse"},
           {"source", is_i2 ? "i2" : "p_path"},
           {"mode", c.mode == CollapseMode::kTransition ? "transition" : "boundary"},
           {"scan", c.scan},
           {"fixed", fixed},
           {"scores", scores},
           {"best_exponent", best_exponent}};
    if (c.mode == CollapseMode::kTransition) {
        if (centers) {
            rep["x_c_per_N"] = centers_json;
        } else {
            rep["x_c"] = x_c;
        }
    } else {
        rep["delta"] = c.delta;
    }
    out.csv("collapse.csv", std::move(table));
    out.json_file("collapse_report.json", rep);
}

void run_boundary_fit(const ExperimentConfig &cfg, Outputs &out, json &rep, const ProgressFn &progress) {
    std::vector<std::pair<double, double>> points = cfg.boundary_points;
    if (!cfg.boundary_input.empty()) {
        // Phase-diagram curves list p_c per r, i.e. points (p_c, r) on the
        // boundary. r = 0 lies on the boundary of the parameter square and
        // is excluded.
        CsvTable in = read_csv_file(cfg.boundary_input);
        for (size_t i = 0; i < in.rows.size(); i++) {
            double r = in.number(i, "r");
            double p = in.number(i, "p_c");
            if (r > 0 && std::isfinite(p) && p <= cfg.boundary_p_max) {
                points.emplace_back(p, r);
            }
        }
    }
    BoundaryFit fit = boundary_exponential_fit(points);
    json pts = json::array();
    for (size_t k = 0; k < points.size(); k++) {
        pts.push_back({{"p", points[k].first}, {"r_c", points[k].second}, {"residual", fit.residuals[k]}});
    }
    rep = {{"experiment", "boundary_fit"},
           {"A", fit.a},
           {"prefactor", fit.prefactor},
           {"rms_residual", fit.rms_residual},
           {"points", pts}};
    report(progress, "boundary fit A=" + format_double(fit.a));
    out.json_file("boundary_fit.json", rep);
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto &[k, name] : kExperimentNames) {
        if (k == kind) {
            return name;
        }
    }
    throw std::invalid_argument("unknown experiment kind");
}

ExperimentKind parse_experiment_kind(const std::string &text) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), '-', '_');
    for (const auto &[k, name] : kExperimentNames) {
        if (name == norm) {
            return k;
        }
    }
    throw std::invalid_argument("unknown experiment '" + text + "'");
}

ExperimentConfig parse_config(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("<root>", "config must be a JSON object");
    }
    static const std::set<std::string> known = {
        "experiment", "p", "r", "n", "realizations", "master_seed", "depth_factor", "initial_state",
        "output_dir", "workers", "nu", "alpha", "window", "bins_per_decade", "collapse_nus", "collapse",
        "boundary", "sample_points"};
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError(key, "unknown field");
        }
    }
    ExperimentConfig cfg;
    if (!j.contains("experiment")) {
        throw ConfigError("experiment", "missing");
    }
    try {
        cfg.experiment = parse_experiment_kind(get_string(j.at("experiment"), "experiment"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError("experiment", e.what());
    }
    if (j.contains("p")) {
        cfg.p_values = parse_grid(j.at("p"), "p");
    }
    if (j.contains("r")) {
        cfg.r_values = parse_grid(j.at("r"), "r");
    }
    if (j.contains("n")) {
        const json &n = j.at("n");
        if (!n.is_array()) {
            throw ConfigError("n", "expected a list of system sizes");
        }
        for (size_t k = 0; k < n.size(); k++) {
            cfg.n_values.push_back(get_count(n[k], "n[" + std::to_string(k) + "]"));
        }
    }
    if (j.contains("realizations")) {
        cfg.n_realizations = get_count(j.at("realizations"), "realizations");
    }
    if (j.contains("master_seed")) {
        cfg.master_seed = j.at("master_seed").is_number_unsigned() ? j.at("master_seed").get<uint64_t>()
                                                                   : get_count(j.at("master_seed"), "master_seed");
    }
    if (j.contains("depth_factor")) {
        cfg.depth_factor = get_count(j.at("depth_factor"), "depth_factor");
    }
    if (j.contains("initial_state")) {
        try {
            cfg.initial_state = parse_initial_state(get_string(j.at("initial_state"), "initial_state"));
        } catch (const std::invalid_argument &e) {
            throw ConfigError("initial_state", e.what());
        }
    }
    if (j.contains("output_dir")) {
        cfg.output_dir = get_string(j.at("output_dir"), "output_dir");
    }
    if (j.contains("workers")) {
        cfg.workers = get_count(j.at("workers"), "workers");
    }
    if (j.contains("nu")) {
        cfg.nu = get_number(j.at("nu"), "nu");
    }
    if (j.contains("alpha")) {
        cfg.alpha = get_number(j.at("alpha"), "alpha");
    }
    if (j.contains("window")) {
        cfg.window = get_number(j.at("window"), "window");
    }
    if (j.contains("bins_per_decade")) {
        cfg.bins_per_decade = get_count(j.at("bins_per_decade"), "bins_per_decade");
    }
    if (j.contains("collapse_nus")) {
        cfg.collapse_nus = parse_grid(j.at("collapse_nus"), "collapse_nus");
    }
    if (j.contains("sample_points")) {
        cfg.sample_points = parse_pairs(j.at("sample_points"), "sample_points");
    }
    if (j.contains("collapse")) {
        const json &c = j.at("collapse");
        if (!c.is_object()) {
            throw ConfigError("collapse", "expected an object");
        }
        if (c.contains("input")) {
            cfg.collapse.input = get_string(c.at("input"), "collapse.input");
        }
        if (c.contains("mode")) {
            std::string mode = get_string(c.at("mode"), "collapse.mode");
            if (mode == "transition") {
                cfg.collapse.mode = CollapseMode::kTransition;
            } else if (mode == "boundary") {
                cfg.collapse.mode = CollapseMode::kBoundary;
            } else {
                throw ConfigError("collapse.mode", "expected \"transition\" or \"boundary\"");
            }
        }
        if (c.contains("exponents")) {
            cfg.collapse.exponents = parse_grid(c.at("exponents"), "collapse.exponents");
        }
        if (c.contains("x_c")) {
            cfg.collapse.x_c = get_number(c.at("x_c"), "collapse.x_c");
        }
        if (c.contains("scan")) {
            cfg.collapse.scan = get_string(c.at("scan"), "collapse.scan");
            if (cfg.collapse.scan != "p" && cfg.collapse.scan != "r") {
                throw ConfigError("collapse.scan", "expected \"p\" or \"r\"");
            }
        }
        if (c.contains("fixed")) {
            cfg.collapse.fixed = get_number(c.at("fixed"), "collapse.fixed");
        }
        if (c.contains("delta")) {
            cfg.collapse.delta = get_string(c.at("delta"), "collapse.delta");
            if (cfg.collapse.delta != "r" && cfg.collapse.delta != "one_minus_p" &&
                cfg.collapse.delta != "r_one_minus_p") {
                throw ConfigError("collapse.delta", "expected \"r\", \"one_minus_p\" or \"r_one_minus_p\"");
            }
        }
    }
    if (j.contains("boundary")) {
        const json &b = j.at("boundary");
        if (!b.is_object()) {
            throw ConfigError("boundary", "expected an object");
        }
        if (b.contains("points")) {
            cfg.boundary_points = parse_pairs(b.at("points"), "boundary.points");
        }
        if (b.contains("input")) {
            cfg.boundary_input = get_string(b.at("input"), "boundary.input");
        }
        if (b.contains("p_max")) {
            cfg.boundary_p_max = get_number(b.at("p_max"), "boundary.p_max");
        }
    }

    // Validation.
    if (needs_model_grid(cfg.experiment)) {
        if (cfg.p_values.empty()) {
            throw ConfigError("p", "grid must be non-empty");
        }
        if (cfg.r_values.empty()) {
            throw ConfigError("r", "grid must be non-empty");
        }
        if (cfg.n_values.empty()) {
            throw ConfigError("n", "size list must be non-empty");
        }
        check_probabilities(cfg.p_values, "p");
        check_probabilities(cfg.r_values, "r");
        bool needs_thirds = cfg.experiment == ExperimentKind::kMiScan || cfg.experiment == ExperimentKind::kPhaseDiagram;
        for (size_t n : cfg.n_values) {
            if (n < 2 || n % 2 != 0) {
                throw ConfigError("n", "sizes must be even and >= 2");
            }
            if (needs_thirds && n % 6 != 0) {
                throw ConfigError("n", "mutual information needs sizes divisible by 6");
            }
        }
        if (cfg.n_realizations < 2) {
            throw ConfigError("realizations", "need at least 2 realizations");
        }
        if (cfg.depth_factor == 0) {
            throw ConfigError("depth_factor", "must be positive");
        }
    }
    if (cfg.experiment == ExperimentKind::kCollapse && cfg.collapse.input.empty()) {
        throw ConfigError("collapse.input", "collapse needs an input CSV");
    }
    if (cfg.experiment == ExperimentKind::kBoundaryFit && cfg.boundary_points.empty() && cfg.boundary_input.empty()) {
        throw ConfigError("boundary", "boundary_fit needs points or an input CSV");
    }
    if (!(cfg.nu > 0)) {
        throw ConfigError("nu", "must be positive");
    }
    if (!(cfg.alpha > 0 && cfg.alpha < 1)) {
        throw ConfigError("alpha", "must lie in (0, 1)");
    }
    if (!(cfg.window > 0 && cfg.window <= 1)) {
        throw ConfigError("window", "must lie in (0, 1]");
    }
    if (cfg.bins_per_decade == 0) {
        throw ConfigError("bins_per_decade", "must be positive");
    }
    if (cfg.workers == 0) {
        cfg.workers = default_workers();
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("--config", "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::parse_error &e) {
        throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

json config_to_json(const ExperimentConfig &cfg) {
    json j = {{"experiment", to_string(cfg.experiment)},
              {"p", cfg.p_values},
              {"r", cfg.r_values},
              {"n", cfg.n_values},
              {"realizations", cfg.n_realizations},
              {"master_seed", cfg.master_seed},
              {"depth_factor", cfg.depth_factor},
              {"initial_state", to_string(cfg.initial_state)},
              {"nu", cfg.nu},
              {"alpha", cfg.alpha},
              {"window", cfg.window},
              {"bins_per_decade", cfg.bins_per_decade},
              {"collapse_nus", cfg.collapse_nus},
              {"sample_points", cfg.sample_points}};
    if (cfg.experiment == ExperimentKind::kCollapse) {
        const CollapseSettings &c = cfg.collapse;
        json cj = {{"input", c.input},
                   {"mode", c.mode == CollapseMode::kTransition ? "transition" : "boundary"},
                   {"exponents", c.exponents},
                   {"scan", c.scan},
                   {"delta", c.delta}};
        if (c.x_c) {
            cj["x_c"] = *c.x_c;
        }
        if (c.fixed) {
            cj["fixed"] = *c.fixed;
        }
        j["collapse"] = cj;
    }
    if (cfg.experiment == ExperimentKind::kBoundaryFit) {
        j["boundary"] = {{"points", cfg.boundary_points}, {"input", cfg.boundary_input}, {"p_max", cfg.boundary_p_max}};
    }
    return j;
}

std::string config_hash(const ExperimentConfig &cfg) {
    return hex64(fnv1a64(config_to_json(cfg).dump()));
}

json RunManifest::to_json() const {
    json files = json::array();
    for (const OutputFile &f : outputs) {
        files.push_back({{"file", f.name}, {"rows", f.rows}, {"content_hash", f.content_hash}});
    }
    return {{"experiment", experiment},
            {"config_hash", config_hash},
            {"code_version", code_version},
            {"master_seed", master_seed},
            {"timestamps", {{"started", started_at}, {"finished", finished_at}}},
            {"outputs", files}};
}

RunManifest run_experiment(const ExperimentConfig &cfg, const ProgressFn &progress) {
    RunManifest manifest;
    manifest.experiment = to_string(cfg.experiment);
    manifest.config_hash = config_hash(cfg);
    manifest.code_version = code_version();
    manifest.master_seed = cfg.master_seed;
    manifest.started_at = utc_now();

    Outputs out(cfg.output_dir, manifest.config_hash, cfg.master_seed);
    json config_json = config_to_json(cfg);
    out.json_file("config.json", config_json);
    json rep;
    switch (cfg.experiment) {
        case ExperimentKind::kMiScan:
            run_mi_scan(cfg, out, rep, progress);
            break;
        case ExperimentKind::kPercScan:
            run_perc_scan(cfg, out, rep, progress);
            break;
        case ExperimentKind::kPhaseDiagram:
            run_phase_diagram(cfg, out, rep, progress);
            break;
        case ExperimentKind::kSlc:
            run_slc(cfg, out, rep, progress);
            break;
        case ExperimentKind::kDistanceStats:
            run_distance_stats(cfg, out, rep, progress);
            break;
        case ExperimentKind::kCollapse:
            run_collapse(cfg, out, rep, progress);
            break;
        case ExperimentKind::kBoundaryFit:
            run_boundary_fit(cfg, out, rep, progress);
            break;
    }
    manifest.report = rep;
    manifest.outputs = out.commit();
    manifest.finished_at = utc_now();

    fs::path path = fs::path(cfg.output_dir) / "manifest.json";
    std::ofstream mf(path);
    if (!mf) {
        throw std::runtime_error("cannot write " + path.string());
    }
    mf << manifest.to_json().dump(2) << "\n";
    return manifest;
}

ReplayStage parse_replay_stage(const std::string &text) {
    if (text == "raw") {
        return ReplayStage::kRaw;
    }
    if (text == "graphlike" || text == "graph_like" || text == "graph-like") {
        return ReplayStage::kGraphLike;
    }
    if (text == "simplified") {
        return ReplayStage::kSimplified;
    }
    throw std::invalid_argument("unknown replay stage '" + text + "' (expected raw, graphlike or simplified)");
}

ReplayResult replay(const json &record, ReplayStage stage, const std::string &expected_hash) {
    if (!expected_hash.empty()) {
        if (!record.is_object() || !record.contains("config_hash") || !record.at("config_hash").is_string()) {
            throw std::invalid_argument("record carries no config_hash to check against " + expected_hash);
        }
        std::string have = record.at("config_hash").get<std::string>();
        if (have != expected_hash) {
            throw std::invalid_argument("record config_hash " + have + " does not match " + expected_hash);
        }
    }
    BrickworkCircuit circuit = circuit_from_json(record);
    ZxDiagram d = diagram_from_circuit(circuit);
    ReplayResult result;
    if (stage == ReplayStage::kGraphLike) {
        RewriteLog log;
        to_graph_like(d, &log);
        result.events = std::move(log.events);
    } else if (stage == ReplayStage::kSimplified) {
        SimplifyOptions options;
        options.telemetry = true;
        result.events = clifford_simplify(d, options).events;
    }
    result.diagram = diagram_to_json(d);
    return result;
}

std::string code_version() {
    return MPTZX_VERSION;
}

}  // namespace mptzx
