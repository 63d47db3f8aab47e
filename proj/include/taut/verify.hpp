#pragma once

// Property suites that compare every closed formula against an independent route.
// Each suite returns a machine-readable verdict; the CLI `verify` command and the
// acceptance tests both drive these.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace taut::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct Params {
    std::uint64_t seed = kDefaultSeed;
    int nmax = 6;        // appendix / tensor_euler: largest n
    int n = 4;           // whom_oracle / orbits: largest n
    int families = 20;   // random table families or χ-inputs
    int quadruples = 50; // random χ-quadruples for the appendix suite
    int samples = 100;   // random graded spaces for graded_powers
    unsigned workers = 1;
};

struct PropertyResult {
    explicit PropertyResult(std::string property) : name(std::move(property)) {}

    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    nlohmann::json counterexample;  // first failing case, smallest first
    nlohmann::json transcript;      // optional per-case log

    // Records one case; keeps only the first failure.
    void record(bool ok, const nlohmann::json& input);
};

struct SuiteResult {
    std::string suite;
    Params params;
    std::vector<PropertyResult> properties;

    bool pass() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws InputError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const Params& params);

} // namespace taut::verify
