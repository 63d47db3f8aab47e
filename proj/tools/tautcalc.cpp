// tautcalc: invariant tables, verification suites and generating functions for
// tautological bundles on Hilbert schemes of points.

#include "taut/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr const char* kRangeHelp =
    "Ranges are inclusive: \"a..b\" or a single value \"a\". For --k and --l the upper "
    "bound may be the letter n, e.g. \"0..n\", meaning the n of the current row. Cells "
    "with k > n or l > n are skipped.";

} // namespace

int main(int argc, char** argv) {
    using namespace taut::cli;

    CLI::App app{"Exact invariants of tautological bundles on Hilbert schemes of points"};
    app.footer(kRangeHelp);
    app.require_subcommand(1);

    JobSpec job;
    std::string n_text = "1..4", k_text = "0..n", l_text = "0..n";
    std::string config_path;

    auto* table = app.add_subcommand("table", "Compute one row per (formula, n, k, l) cell");
    table->footer(kRangeHelp);
    table->add_option("--formula,-f", job.formulas, "Formula id(s); repeatable")->required();
    table->add_option("--surface", job.surface_path, "Surface description (JSON)");
    table->add_option("--curve", job.curve_path, "Curve description (JSON)");
    table->add_option("--n", n_text, "Range of n")->capture_default_str();
    table->add_option("--k", k_text, "Range of k (upper bound may be n)")->capture_default_str();
    table->add_option("--l", l_text, "Range of l (upper bound may be n)")->capture_default_str();
    table->add_option("--E", job.E, "Bundle name for E")->capture_default_str();
    table->add_option("--F", job.F, "Bundle name for F")->capture_default_str();
    table->add_option("--K", job.K, "Bundle name for K")->capture_default_str();
    table->add_option("--L", job.L, "Bundle name for L")->capture_default_str();
    table->add_option("--format", job.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--out,-o", job.out, "Output file (default stdout)");
    table->add_option("--workers,-j", job.workers, "Worker threads")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a property suite and print JSON verdicts");
    verify->add_option("--suite", job.suite, "appendix, whom_oracle, tensor_euler, graded_powers, orbits or all")
        ->required();
    verify->add_option("--seed", job.verify_params.seed, "Random seed")->capture_default_str();
    verify->add_option("--nmax", job.verify_params.nmax, "Largest n for appendix and tensor_euler")
        ->capture_default_str();
    verify->add_option("--n", job.verify_params.n, "Largest n for whom_oracle and orbits")->capture_default_str();
    verify->add_option("--families", job.verify_params.families, "Random table families / chi-inputs")
        ->capture_default_str();
    verify->add_option("--quadruples", job.verify_params.quadruples, "Random chi-quadruples")
        ->capture_default_str();
    verify->add_option("--samples", job.verify_params.samples, "Random graded spaces")->capture_default_str();
    verify->add_option("--out,-o", job.out, "Output file (default stdout)");
    verify->add_option("--workers,-j", job.workers, "Worker threads")->capture_default_str();

    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--kind", job.series_kind, "bichar, bichar_product or tensor_euler")->capture_default_str();
    series->add_option("--surface", job.surface_path, "Surface description (JSON)")->required();
    series->add_option("--nmax", job.nmax, "Truncation: Q^0..Q^nmax")->capture_default_str();
    series->add_option("--F", job.F, "Bundle name for F")->capture_default_str();
    series->add_option("--K", job.K, "Bundle name for K")->capture_default_str();
    series->add_option("--L", job.L, "Bundle name for L")->capture_default_str();
    series->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    series->add_option("--out,-o", job.out, "Output file (default stdout)");

    auto* run = app.add_subcommand("run", "Execute the jobs listed in a config file");
    run->add_option("--config", config_path, "Config with surface/curve data and a jobs array")->required();
    run->add_option("--workers,-j", job.workers, "Default worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) {
            job.command = "table";
            job.n = parse_range(n_text, false);
            job.k = parse_range(k_text, true);
            job.l = parse_range(l_text, true);
            const auto cfg = load_geometry(job.surface_path, job.curve_path);
            return emit(run_table(cfg, job), job.out);
        }
        if (verify->parsed()) {
            job.command = "verify";
            return emit(run_verify(job), job.out);
        }
        if (series->parsed()) {
            job.command = "series";
            if (job.format == "csv") job.format = "json";
            const auto cfg = load_geometry(job.surface_path, "");
            return emit(run_series(cfg, job), job.out);
        }
        const auto cfg = taut::load_config(config_path);
        return emit(run_jobs(cfg, job.workers), "");
    } catch (const taut::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const taut::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
