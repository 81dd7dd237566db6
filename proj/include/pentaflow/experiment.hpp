#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pentaflow/asymptotics.hpp"
#include "pentaflow/curve.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/fit.hpp"
#include "pentaflow/io.hpp"
#include "pentaflow/manifest.hpp"

namespace pentaflow {

/// Default gate tolerances, overridable per config ("tolerances" object) or
/// per run (--tolerance KEY=VAL). The full table lives in the README.
inline const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> table{
        {"slope_band", 0.3},     // half-width of the accepted slope band
        {"r2_min", 0.98},        // minimum r^2 for claim fits
        {"drift", 1e-8},         // max invariant drift for the invariant command
        {"converge_r2_min", 0.99}, // minimum r^2 for the converge command
        {"figure_gap_keep", 0.25}, // fig4 gaps must stay above this fraction of the first gap
    };
    return table;
}

/// A reproducible experiment: curve, n sweep, evaluation points, tolerance
/// overrides, output directory, seed.
struct ExperimentConfig {
    ThetaFourierCurve curve;
    std::vector<int> n_values;          // empty -> per-command default
    std::vector<double> eval_points;    // fractions x = i/n; used by claim sweeps
    bool all_indices = false;           // "indices": "all"
    std::map<std::string, double> tolerances;
    std::filesystem::path output_dir;
    std::uint64_t seed = 0;
    nlohmann::json raw;                 // canonical form, hashed into the manifest

    double tolerance(const std::string& key) const {
        if (const auto it = tolerances.find(key); it != tolerances.end()) return it->second;
        return default_tolerances().at(key);
    }

    std::string hash() const { return hex64(fnv1a64(raw.dump())); }
};

/// Load an experiment config. A string "curve" is a path resolved relative
/// to the config file; an object is an inline curve spec. output_dir falls
/// back to $PENTAFLOW_OUTPUT_DIR, then to the current directory.
inline ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open experiment config: " + path.string());
    }
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("experiment config " + path.string() + ": " + e.what());
    }

    ExperimentConfig cfg;
    if (!spec.contains("curve")) {
        throw InvalidInput("experiment config: missing \"curve\"");
    }
    nlohmann::json curve_spec;
    if (spec["curve"].is_string()) {
        const std::filesystem::path ref = spec["curve"].get<std::string>();
        const std::filesystem::path resolved =
            ref.is_absolute() ? ref : path.parent_path() / ref;
        cfg.curve = load_curve_config(resolved);
        curve_spec = curve_to_json(cfg.curve);
    } else {
        cfg.curve = curve_from_json(spec["curve"]);
        curve_spec = spec["curve"];
    }

    for (const nlohmann::json& n : spec.value("n_values", nlohmann::json::array())) {
        const int v = n.get<int>();
        if (v < 5) {
            throw InvalidInput("experiment config: every n must be >= 5");
        }
        cfg.n_values.push_back(v);
    }

    if (spec.contains("indices")) {
        if (spec["indices"].is_string()) {
            if (spec["indices"].get<std::string>() != "all") {
                throw InvalidInput("experiment config: \"indices\" must be \"all\" or a list");
            }
            cfg.all_indices = true;
        } else {
            for (const nlohmann::json& v : spec["indices"]) {
                const double x = v.get<double>();
                if (x < 0.0 || x >= 1.0) {
                    throw InvalidInput("experiment config: index fractions must lie in [0, 1)");
                }
                cfg.eval_points.push_back(x);
            }
        }
    }
    if (cfg.eval_points.empty()) {
        cfg.eval_points = {0.25, 0.7};
    }

    for (const auto& [key, value] : spec.value("tolerances", nlohmann::json::object()).items()) {
        if (!default_tolerances().count(key)) {
            throw InvalidInput("experiment config: unknown tolerance \"" + key + "\"");
        }
        cfg.tolerances[key] = value.get<double>();
    }

    if (spec.contains("output_dir")) {
        cfg.output_dir = spec["output_dir"].get<std::string>();
    } else if (const char* env = std::getenv("PENTAFLOW_OUTPUT_DIR"); env && *env) {
        cfg.output_dir = env;
    } else {
        cfg.output_dir = ".";
    }
    cfg.seed = spec.value("seed", std::uint64_t{0});

    nlohmann::json canon = spec;
    canon["curve"] = curve_spec;
    cfg.raw = canon;
    return cfg;
}

enum class Claim { lemma32, lemma34, theorem31, eq4, corollary35 };

inline const char* claim_name(Claim c) {
    switch (c) {
        case Claim::lemma32: return "lemma32";
        case Claim::lemma34: return "lemma34";
        case Claim::theorem31: return "theorem31";
        case Claim::eq4: return "eq4";
        default: return "corollary35";
    }
}

/// Nominal convergence exponent for each claim's residual.
inline double claim_expected_slope(Claim c) {
    switch (c) {
        case Claim::lemma32: return -2.0;
        case Claim::lemma34: return -2.0;
        case Claim::theorem31: return -1.0;
        case Claim::eq4: return -1.0;
        default: return -3.0;
    }
}

struct ClaimFit {
    std::string kind;   // residual family within the claim
    double eval_point;  // x fraction
    ConvergenceFit fit;
    bool passed = false;
};

struct ClaimResult {
    Claim claim = Claim::lemma32;
    std::vector<ClaimFit> fits;
    bool passed = false;                     // all fits inside the band
    std::vector<std::string> files_written;  // relative to output_dir
};

namespace detail {

inline const char* kind_label(ClaimKind k) {
    switch (k) {
        case ClaimKind::coeff_b: return "coeff_b";
        case ClaimKind::coeff_c: return "coeff_c";
        case ClaimKind::t_stability: return "t_stability";
        case ClaimKind::evolution: return "evolution";
        case ClaimKind::p_point: return "p_point";
        default: return "corollary35";
    }
}

inline int nearest_index(double fraction, int n) {
    return static_cast<int>(std::lround(fraction * n)) % n;
}

} // namespace detail

/// Run one claim's residual sweep: for every n and every evaluation point,
/// measure the residual(s), fit ln(residual) vs ln(n) per (kind, point), and
/// compare each slope with the claim's nominal exponent. Writes
/// residuals_<claim>.csv and fit_<claim>.csv into output_dir.
inline ClaimResult run_claim_sweep(const ExperimentConfig& cfg, Claim claim) {
    std::vector<int> ns = cfg.n_values;
    if (ns.empty()) ns = {40, 80, 160, 320};
    std::sort(ns.begin(), ns.end());

    std::filesystem::create_directories(cfg.output_dir);
    ClaimResult result;
    result.claim = claim;

    std::string rows = "kind,n,i,x,residual\n";
    // (kind, eval point) -> (n, residual) series
    std::map<std::pair<std::string, double>, std::vector<std::pair<double, double>>> series;

    for (const int n : ns) {
        for (const double point : cfg.eval_points) {
            const int i = detail::nearest_index(point, n);
            std::vector<AsymptoticsRecord> records;
            switch (claim) {
                case Claim::lemma32: {
                    const auto [b, c] = coefficient_asymptotics(cfg.curve, n, i);
                    records = {b, c};
                    break;
                }
                case Claim::lemma34:
                    records = {t_stability(cfg.curve, n, i)};
                    break;
                case Claim::theorem31:
                    records = {evolution_residual(cfg.curve, n, i, FlowRhs::corrected)};
                    break;
                case Claim::eq4:
                    records = {p_point_residual(cfg.curve, n, i)};
                    break;
                case Claim::corollary35:
                    records = {corollary35_residual(cfg.curve, n, i)};
                    break;
            }
            for (const AsymptoticsRecord& rec : records) {
                const std::string kind = detail::kind_label(rec.kind);
                rows += kind;
                rows += ',' + std::to_string(rec.n);
                rows += ',' + std::to_string(rec.index);
                rows += ',' + format_double(point);
                rows += ',' + format_double(rec.residual);
                rows += '\n';
                series[{kind, point}].emplace_back(static_cast<double>(rec.n), rec.residual);
            }
        }
    }

    const double band = cfg.tolerance("slope_band");
    const double r2_min = cfg.tolerance("r2_min");
    const double target = claim_expected_slope(claim);
    std::string fits = "kind,x,slope,intercept,r_squared,slope_target,band,passed\n";
    result.passed = true;
    for (const auto& [key, pts] : series) {
        ClaimFit cf;
        cf.kind = key.first;
        cf.eval_point = key.second;
        cf.fit = fit_convergence(pts);
        cf.passed = std::abs(cf.fit.slope - target) <= band && cf.fit.r_squared > r2_min;
        result.passed = result.passed && cf.passed;
        fits += cf.kind;
        fits += ',' + format_double(cf.eval_point);
        fits += ',' + format_double(cf.fit.slope);
        fits += ',' + format_double(cf.fit.intercept);
        fits += ',' + format_double(cf.fit.r_squared);
        fits += ',' + format_double(target);
        fits += ',' + format_double(band);
        fits += cf.passed ? ",1\n" : ",0\n";
        result.fits.push_back(std::move(cf));
    }

    const std::string residuals_name = std::string("residuals_") + claim_name(claim) + ".csv";
    const std::string fits_name = std::string("fit_") + claim_name(claim) + ".csv";
    std::ofstream(cfg.output_dir / residuals_name, std::ios::binary) << rows;
    std::ofstream(cfg.output_dir / fits_name, std::ios::binary) << fits;
    result.files_written = {residuals_name, fits_name};
    return result;
}

enum class FigureVariant { fig3, fig4 };

struct FigureResult {
    FigureVariant which = FigureVariant::fig3;
    std::vector<std::pair<int, double>> max_gaps; // (n, max |col2 - col3|)
    bool passed = false;
    std::vector<std::string> files_written;
};

/// Emit the figure tables: one CSV per n plus a max-gap summary.
/// fig3 (corrected RHS) passes when the gaps strictly decrease in n;
/// fig4 (schwartz RHS) passes when every later gap stays above
/// figure_gap_keep times the first one.
inline FigureResult run_figure(const ExperimentConfig& cfg, FigureVariant which) {
    std::vector<int> ns = cfg.n_values;
    if (ns.empty()) ns = {20, 30, 40};
    std::sort(ns.begin(), ns.end());

    std::filesystem::create_directories(cfg.output_dir);
    FigureResult result;
    result.which = which;
    const FlowRhs rhs = which == FigureVariant::fig3 ? FlowRhs::corrected : FlowRhs::schwartz;
    const char* tag = which == FigureVariant::fig3 ? "fig3" : "fig4";

    for (const int n : ns) {
        const std::vector<FigureRow> rows = figure_data(cfg.curve, n, rhs);
        double gap = 0.0;
        std::string csv = "x,n2_mapped_norm,n2_predicted_norm\n";
        for (const FigureRow& row : rows) {
            gap = std::max(gap, std::abs(row.mapped_norm - row.predicted_norm));
            csv += format_double(row.x);
            csv += ',' + format_double(row.mapped_norm);
            csv += ',' + format_double(row.predicted_norm);
            csv += '\n';
        }
        const std::string name = std::string("figure_") + tag + "_n" + std::to_string(n) + ".csv";
        std::ofstream(cfg.output_dir / name, std::ios::binary) << csv;
        result.files_written.push_back(name);
        result.max_gaps.emplace_back(n, gap);
    }

    std::string summary = "n,max_gap\n";
    for (const auto& [n, gap] : result.max_gaps) {
        summary += std::to_string(n) + ',' + format_double(gap) + '\n';
    }
    const std::string summary_name = std::string("figure_") + tag + "_summary.csv";
    std::ofstream(cfg.output_dir / summary_name, std::ios::binary) << summary;
    result.files_written.push_back(summary_name);

    if (which == FigureVariant::fig3) {
        result.passed = true;
        for (std::size_t k = 1; k < result.max_gaps.size(); ++k) {
            result.passed = result.passed &&
                            result.max_gaps[k].second < result.max_gaps[k - 1].second;
        }
    } else {
        result.passed = !result.max_gaps.empty();
        const double floor = cfg.tolerance("figure_gap_keep") * result.max_gaps.front().second;
        for (std::size_t k = 1; k < result.max_gaps.size(); ++k) {
            result.passed = result.passed && result.max_gaps[k].second > floor;
        }
    }
    return result;
}

/// Stamp a manifest for a finished run.
inline RunManifest make_manifest(const ExperimentConfig& cfg,
                                 const std::vector<std::string>& files,
                                 double duration_seconds) {
    RunManifest manifest;
    manifest.config_hash = cfg.hash();
    manifest.duration_seconds = duration_seconds;
    for (const std::string& name : files) {
        manifest.add_file(cfg.output_dir, name);
    }
    return manifest;
}

} // namespace pentaflow
