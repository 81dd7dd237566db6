// pentaflow: experiments with the pentagram map on convex polygons.
//
// Subcommands: map, invariant, flow, figure, converge.
// Exit codes: 0 success, 1 input error, 2 geometric degeneracy,
//             3 claim-check failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentaflow/pentaflow.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDegeneracy = 2;
constexpr int kClaimFailure = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::filesystem::path fallback_output_dir() {
    if (const char* env = std::getenv("PENTAFLOW_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& specs) {
    std::map<std::string, double> out;
    for (const std::string& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw pentaflow::InvalidInput("--tolerance expects KEY=VAL, got `" + s + "`");
        }
        const std::string key = s.substr(0, eq);
        if (!pentaflow::default_tolerances().count(key)) {
            throw pentaflow::InvalidInput("unknown tolerance `" + key + "`");
        }
        out[key] = std::stod(s.substr(eq + 1));
    }
    return out;
}

double tolerance_or_default(const std::map<std::string, double>& overrides, const std::string& key) {
    if (const auto it = overrides.find(key); it != overrides.end()) return it->second;
    return pentaflow::default_tolerances().at(key);
}

void write_single_file_manifest(const std::filesystem::path& target,
                                const nlohmann::json& effective_config, double duration) {
    pentaflow::RunManifest manifest;
    manifest.config_hash = pentaflow::hex64(pentaflow::fnv1a64(effective_config.dump()));
    manifest.duration_seconds = duration;
    const std::filesystem::path dir =
        target.has_parent_path() ? target.parent_path() : std::filesystem::path(".");
    manifest.add_file(dir, target.filename().string());
    manifest.write(dir / (target.filename().string() + ".manifest.json"));
}

struct MapArgs {
    std::string input;
    std::string output;
    int iterations = 1;
};

int run_map(const MapArgs& args) {
    const auto start = Clock::now();
    pentaflow::Polygon poly = pentaflow::read_polygon_csv(args.input);
    for (int k = 0; k < args.iterations; ++k) {
        try {
            poly = pentaflow::pentagram_map(poly);
        } catch (const pentaflow::DegeneracyError& e) {
            std::cerr << "error: degeneracy at iteration " << (k + 1) << ": " << e.what() << "\n";
            return kDegeneracy;
        }
    }
    pentaflow::write_polygon_csv(args.output, poly);
    write_single_file_manifest(args.output,
                               {{"command", "map"},
                                {"input", args.input},
                                {"iterations", args.iterations}},
                               seconds_since(start));
    return kOk;
}

struct InvariantArgs {
    std::string input;
    int iterations = 5;
    std::vector<std::string> tolerances;
    int perturb_step = -1; // test hook: nudge vertex 0 after this many maps
};

int run_invariant(const InvariantArgs& args) {
    const auto start = Clock::now();
    const auto tol = parse_tolerances(args.tolerances);
    const double drift_tol = tolerance_or_default(tol, "drift");

    pentaflow::Polygon poly = pentaflow::read_polygon_csv(args.input);
    const double f0 = pentaflow::invariant_f(poly).f_signed;
    std::cout << "f = " << pentaflow::format_double(f0) << "\n";
    std::cout << "step,f,drift\n";

    double max_drift = 0.0;
    for (int k = 1; k <= args.iterations; ++k) {
        try {
            poly = pentaflow::pentagram_map(poly);
        } catch (const pentaflow::DegeneracyError& e) {
            std::cerr << "error: degeneracy at iteration " << k << ": " << e.what() << "\n";
            return kDegeneracy;
        }
        if (args.perturb_step == k) {
            std::vector<pentaflow::Point2> verts = poly.vertices();
            verts[0] += pentaflow::Vec2{0.01 * poly.diameter(), 0.0};
            poly = pentaflow::Polygon(std::move(verts));
        }
        const double fk = pentaflow::invariant_f(poly).f_signed;
        const double drift = std::abs(fk / f0 - 1.0);
        max_drift = std::max(max_drift, drift);
        std::cout << k << ',' << pentaflow::format_double(fk) << ','
                  << pentaflow::format_double(drift) << "\n";
    }

    pentaflow::RunManifest manifest;
    manifest.config_hash = pentaflow::hex64(pentaflow::fnv1a64(
        nlohmann::json({{"command", "invariant"},
                        {"input", args.input},
                        {"iterations", args.iterations},
                        {"drift", drift_tol}})
            .dump()));
    manifest.duration_seconds = seconds_since(start);
    manifest.write(fallback_output_dir() / "invariant.manifest.json");

    if (max_drift >= drift_tol) {
        std::cerr << "invariant drift " << pentaflow::format_double(max_drift)
                  << " exceeds tolerance " << pentaflow::format_double(drift_tol) << "\n";
        return kClaimFailure;
    }
    return kOk;
}

struct FlowArgs {
    std::string config;
    std::string claim;
    std::vector<std::string> tolerances;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int run_flow(const FlowArgs& args) {
    const auto start = Clock::now();
    static const std::map<std::string, pentaflow::Claim> claims{
        {"lemma32", pentaflow::Claim::lemma32},
        {"lemma34", pentaflow::Claim::lemma34},
        {"theorem31", pentaflow::Claim::theorem31},
        {"eq4", pentaflow::Claim::eq4},
        {"corollary35", pentaflow::Claim::corollary35},
    };
    const auto it = claims.find(args.claim);
    if (it == claims.end()) {
        throw pentaflow::InvalidInput("unknown claim `" + args.claim + "`");
    }

    pentaflow::ExperimentConfig cfg = pentaflow::load_experiment_config(args.config);
    for (const auto& [key, value] : parse_tolerances(args.tolerances)) cfg.tolerances[key] = value;
    if (args.seed_set) cfg.seed = args.seed;

    const pentaflow::ClaimResult result = pentaflow::run_claim_sweep(cfg, it->second);
    for (const pentaflow::ClaimFit& fit : result.fits) {
        std::cout << fit.kind << " @ x=" << pentaflow::format_double(fit.eval_point)
                  << ": slope=" << pentaflow::format_double(fit.fit.slope)
                  << " r2=" << pentaflow::format_double(fit.fit.r_squared)
                  << (fit.passed ? " PASS" : " FAIL") << "\n";
    }
    pentaflow::make_manifest(cfg, result.files_written, seconds_since(start))
        .write(cfg.output_dir / "manifest.json");
    return result.passed ? kOk : kClaimFailure;
}

struct FigureArgs {
    std::string config;
    std::string which;
    std::vector<std::string> tolerances;
};

int run_figure(const FigureArgs& args) {
    const auto start = Clock::now();
    pentaflow::FigureVariant which;
    if (args.which == "fig3") {
        which = pentaflow::FigureVariant::fig3;
    } else if (args.which == "fig4") {
        which = pentaflow::FigureVariant::fig4;
    } else {
        throw pentaflow::InvalidInput("--which must be fig3 or fig4, got `" + args.which + "`");
    }

    pentaflow::ExperimentConfig cfg = pentaflow::load_experiment_config(args.config);
    for (const auto& [key, value] : parse_tolerances(args.tolerances)) cfg.tolerances[key] = value;

    const pentaflow::FigureResult result = pentaflow::run_figure(cfg, which);
    for (const auto& [n, gap] : result.max_gaps) {
        std::cout << "n=" << n << " max_gap=" << pentaflow::format_double(gap) << "\n";
    }
    pentaflow::make_manifest(cfg, result.files_written, seconds_since(start))
        .write(cfg.output_dir / "manifest.json");
    return result.passed ? kOk : kClaimFailure;
}

struct ConvergeArgs {
    std::string input;
    std::string output;
    int steps = 30;
    std::vector<std::string> tolerances;
};

int run_converge(const ConvergeArgs& args) {
    const auto start = Clock::now();
    const auto tol = parse_tolerances(args.tolerances);
    const double r2_min = tolerance_or_default(tol, "converge_r2_min");

    const pentaflow::Polygon poly = pentaflow::read_polygon_csv(args.input);
    const pentaflow::IterationTrace trace = pentaflow::iterate_and_measure(poly, args.steps);
    if (trace.truncated && trace.steps_completed < 5) {
        std::cerr << "error: degeneracy truncated the trace after " << trace.steps_completed
                  << " steps\n";
        return kDegeneracy;
    }

    std::cout << "steps_completed = " << trace.steps_completed << "\n";
    std::cout << "log_diameter_slope = " << pentaflow::format_double(trace.log_diameter_slope)
              << "\n";
    std::cout << "r_squared = " << pentaflow::format_double(trace.r_squared) << "\n";

    if (!args.output.empty()) {
        std::string csv = "step,diameter,invariant_drift\n";
        for (std::size_t k = 0; k < trace.diameter.size(); ++k) {
            csv += std::to_string(k);
            csv += ',' + pentaflow::format_double(trace.diameter[k]);
            csv += ',' + pentaflow::format_double(trace.invariant_drift[k]);
            csv += '\n';
        }
        std::ofstream(args.output, std::ios::binary) << csv;
        write_single_file_manifest(args.output,
                                   {{"command", "converge"},
                                    {"input", args.input},
                                    {"steps", args.steps}},
                                   seconds_since(start));
    }
    return trace.r_squared > r2_min ? kOk : kClaimFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pentagram-map laboratory: iterate polygons, check the invariant, "
                 "and measure the limiting-flow asymptotics"};
    app.require_subcommand(1);

    MapArgs map_args;
    CLI::App* map_cmd = app.add_subcommand("map", "apply T^k to a polygon CSV");
    map_cmd->add_option("--input", map_args.input, "polygon CSV")->required();
    map_cmd->add_option("--output", map_args.output, "output polygon CSV")->required();
    map_cmd->add_option("--iterations", map_args.iterations, "number of map applications")
        ->check(CLI::NonNegativeNumber);

    InvariantArgs inv_args;
    CLI::App* inv_cmd = app.add_subcommand("invariant", "print f(V) and its drift under T");
    inv_cmd->add_option("--input", inv_args.input, "polygon CSV")->required();
    inv_cmd->add_option("--iterations", inv_args.iterations, "number of map applications")
        ->check(CLI::NonNegativeNumber);
    inv_cmd->add_option("--tolerance", inv_args.tolerances, "KEY=VAL override (drift=...)");
    inv_cmd->add_option("--perturb-step", inv_args.perturb_step,
                        "test hook: perturb vertex 0 after this step")
        ->group(""); // hidden

    FlowArgs flow_args;
    CLI::App* flow_cmd = app.add_subcommand("flow", "residual sweep + exponent fit for a claim");
    flow_cmd->add_option("--config", flow_args.config, "experiment config JSON")->required();
    flow_cmd->add_option("--claim", flow_args.claim,
                         "lemma32|lemma34|theorem31|eq4|corollary35")
        ->required();
    flow_cmd->add_option("--tolerance", flow_args.tolerances, "KEY=VAL override");
    flow_cmd->add_option("--seed", flow_args.seed, "seed recorded in the manifest")
        ->each([&flow_args](const std::string&) { flow_args.seed_set = true; });

    FigureArgs fig_args;
    CLI::App* fig_cmd = app.add_subcommand("figure", "emit the figure tables for one variant");
    fig_cmd->add_option("--config", fig_args.config, "experiment config JSON")->required();
    fig_cmd->add_option("--which", fig_args.which, "fig3|fig4")->required();
    fig_cmd->add_option("--tolerance", fig_args.tolerances, "KEY=VAL override");

    ConvergeArgs conv_args;
    CLI::App* conv_cmd = app.add_subcommand("converge", "iterate T and fit diameter decay");
    conv_cmd->add_option("--input", conv_args.input, "polygon CSV")->required();
    conv_cmd->add_option("--steps", conv_args.steps, "iterations to attempt")
        ->check(CLI::PositiveNumber);
    conv_cmd->add_option("--output", conv_args.output, "trace CSV path");
    conv_cmd->add_option("--tolerance", conv_args.tolerances, "KEY=VAL override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (map_cmd->parsed()) return run_map(map_args);
        if (inv_cmd->parsed()) return run_invariant(inv_args);
        if (flow_cmd->parsed()) return run_flow(flow_args);
        if (fig_cmd->parsed()) return run_figure(fig_args);
        if (conv_cmd->parsed()) return run_converge(conv_args);
    } catch (const pentaflow::DegeneracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDegeneracy;
    } catch (const pentaflow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
