#pragma once

// Batch commands behind the tautcalc tool. Each command returns its rendered
// output and an exit code instead of writing to the terminal.

#include "taut/geometry.hpp"
#include "taut/report.hpp"
#include "taut/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace taut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConsistency = 1;
inline constexpr int kExitUsage = 2;

// Inclusive range "a..b" or a single value "a". The upper bound "n" means the
// n of the current row (only for the k and l ranges).
struct Range {
    int lo = 0;
    int hi = 0;
    bool hi_is_n = false;

    std::vector<int> values(int n) const;
};

Range parse_range(const std::string& text, bool allow_n);

struct JobSpec {
    std::string command = "table";  // table | verify | series
    std::vector<std::string> formulas;
    std::string surface_path;
    std::string curve_path;
    Range n{1, 4, false};
    Range k{0, 0, true};
    Range l{0, 0, true};
    std::string format = "csv";     // csv | json (series: json | text)
    std::string out;
    std::uint64_t seed = verify::kDefaultSeed;
    unsigned workers = 1;
    std::string E = "O", F = "O", K = "O", L = "O";
    std::string suite;
    verify::Params verify_params;
    std::string series_kind = "bichar";
    int nmax = 6;
};

// Keys as on the command line: "formula" (string or array), "n", "k", "l",
// "format", "out", "seed", "workers", "E", "F", "K", "L", "suite", "nmax", ...
JobSpec jobspec_from_json(const nlohmann::json& j);

struct Outcome {
    int exit_code = kExitOk;
    std::string output;            // rendered CSV/JSON
    std::vector<std::string> log;  // diagnostics for stderr
};

// Formula ids accepted by `table`.
const std::vector<std::string>& table_formulas();

// Builds the rows without rendering. Throws InputError / ConsistencyError.
std::vector<InvariantReport> table_rows(const GeometryConfig& cfg, const JobSpec& job);

Outcome run_table(const GeometryConfig& cfg, const JobSpec& job);
Outcome run_verify(const JobSpec& job);
Outcome run_series(const GeometryConfig& cfg, const JobSpec& job);
// Runs cfg.jobs in order; the exit code is the largest one seen.
Outcome run_jobs(const GeometryConfig& cfg, unsigned workers);

// Reads a geometry file. A file without "surface"/"curve"/"jobs" keys is taken
// as a bare surface (as_surface) or curve description.
GeometryConfig load_geometry(const std::string& surface_path, const std::string& curve_path);

// Writes outcome.output to path (or stdout when empty) and the log to stderr.
int emit(const Outcome& outcome, const std::string& path);

} // namespace taut::cli
