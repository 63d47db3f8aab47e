#include "taut/cli.hpp"
#include "taut/formulas.hpp"

#include <doctest.h>

#include <algorithm>

#include <string>

using namespace taut;
using namespace taut::cli;

namespace {

const std::string kConfigs = TAUT_CONFIG_DIR;

JobSpec table_job(std::vector<std::string> formulas) {
    JobSpec j;
    j.formulas = std::move(formulas);
    return j;
}

const InvariantReport* find_row(const std::vector<InvariantReport>& rows, const std::string& id, int n, int k,
                                int l) {
    for (const auto& r : rows) {
        if (r.formula_id == id && r.n == n && r.k == k && r.l == l) return &r;
    }
    return nullptr;
}

} // namespace

TEST_CASE("ranges") {
    CHECK(parse_range("1..4", false).values(0) == std::vector<int>{1, 2, 3, 4});
    CHECK(parse_range("3", false).values(0) == std::vector<int>{3});
    CHECK(parse_range("0..n", true).values(2) == std::vector<int>{0, 1, 2});
    CHECK(parse_range("1..n", true).values(0).empty());
    CHECK_THROWS_AS(parse_range("0..n", false), InputError);
    CHECK_THROWS_AS(parse_range("4..1", false), InputError);
    CHECK_THROWS_AS(parse_range("a..b", false), InputError);
}

TEST_CASE("table on the K3 fixture") {
    const auto cfg = load_geometry(kConfigs + "/k3.json", "");
    auto job = table_job({"Extwedgewedge"});
    job.n = parse_range("1..4", false);
    const auto rows = table_rows(cfg, job);
    const auto* cell = find_row(rows, "Extwedgewedge", 1, 1, 1);
    REQUIRE(cell != nullptr);
    CHECK(cell->euler == bichar_closed({1, 1, 1, 2, 2, 2, 2}));
    CHECK(cell->euler == 2);
    for (const auto& r : rows) CHECK(r.all_checks_pass());
    std::size_t cells = 0;
    for (int n = 1; n <= 4; ++n) cells += static_cast<std::size_t>((n + 1) * (n + 1));
    CHECK(rows.size() == cells);

    const auto rank3 = table_rows(cfg, table_job({"rank3_check"}));
    REQUIRE(rank3.size() == 1);
    CHECK(rank3[0].euler == rank3_check(2, -20).value);
    CHECK(rank3[0].extra.at("naive_value") == 1);
}

TEST_CASE("euler-only mode without tables") {
    const auto cfg = load_geometry(kConfigs + "/k3.json", "");
    auto job = table_job({"ExtEF"});
    job.E = "C";
    job.F = "H";
    job.n = parse_range("1..3", false);
    const auto rows = table_rows(cfg, job);
    for (const auto& r : rows) {
        CHECK_FALSE(r.graded.has_value());
        CHECK(std::find(r.flags.begin(), r.flags.end(), "euler_only") != r.flags.end());
        CHECK(r.all_checks_pass());
    }
}

TEST_CASE("curve table") {
    const auto cfg = load_geometry("", kConfigs + "/genus0_curve.json");
    auto job = table_job({"curve_bichar"});
    job.n = parse_range("1..3", false);
    const auto rows = table_rows(cfg, job);
    const auto* n2 = find_row(rows, "curve_bichar", 2, 0, 0);
    REQUIRE(n2 != nullptr);
    CHECK(n2->euler == curve_bichar(2, 1, 1, 1, 1));
    CHECK(n2->extra.at("surface_value") == 2);
}

TEST_CASE("every formula id runs on the fixtures") {
    auto cfg = load_geometry(kConfigs + "/p2.json", kConfigs + "/genus0_curve.json");
    auto job = table_job(table_formulas());
    job.L = "H";
    job.n = parse_range("1..3", false);
    const auto out = run_table(cfg, job);
    CHECK(out.exit_code == kExitOk);
    for (const auto& id : table_formulas()) CHECK(out.output.find("\n" + id + ",") != std::string::npos);
}

TEST_CASE("csv and json carry the same values") {
    const auto cfg = load_geometry(kConfigs + "/k3.json", "");
    auto job = table_job({"tensor_euler_terms", "bichar_series"});
    job.L = "H";
    job.n = parse_range("1..3", false);
    const auto csv = run_table(cfg, job);
    job.format = "json";
    const auto json = run_table(cfg, job);
    REQUIRE(csv.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.output);
    std::vector<std::string> lines;
    for (std::size_t pos = 0, next; (next = csv.output.find('\n', pos)) != std::string::npos; pos = next + 1)
        lines.push_back(csv.output.substr(pos, next - pos));
    REQUIRE(lines.size() == doc["reports"].size() + 1);
    std::size_t i = 1;
    for (const auto& r : doc["reports"]) {
        std::string graded;
        if (!r["graded"].is_null()) graded = graded_from_json(r["graded"]).to_compact();
        const std::string prefix = r["formula_id"].get<std::string>() + "," + r["n"].dump() + "," + r["k"].dump() +
                                   "," + r["l"].dump() + "," + r["euler"].dump() + "," + graded + ",";
        CHECK(lines[i++].starts_with(prefix));
    }
}

TEST_CASE("exit codes") {
    const auto cfg = load_geometry(kConfigs + "/k3.json", "");
    CHECK(run_table(cfg, table_job({"unknown_formula"})).exit_code == kExitUsage);
    CHECK(run_table(load_geometry("", kConfigs + "/genus0_curve.json"), table_job({"ExtEF"})).exit_code ==
          kExitUsage);
    auto missing = table_job({"ExtEF"});
    missing.E = "nope";
    const auto out = run_table(cfg, missing);
    CHECK(out.exit_code == kExitUsage);
    CHECK_FALSE(out.log.empty());

    JobSpec verify;
    verify.suite = "nope";
    CHECK(run_verify(verify).exit_code == kExitUsage);
    CHECK_THROWS_AS(load_geometry(kConfigs + "/does_not_exist.json", ""), InputError);

    const auto bad_gram = config_from_json(nlohmann::json::parse(R"({"jobs": [{"command": "frobnicate"}]})"));
    CHECK(run_jobs(bad_gram, 1).exit_code == kExitUsage);
}

TEST_CASE("worker count does not change output") {
    const auto cfg = load_geometry(kConfigs + "/k3.json", "");
    auto job = table_job({"Extwedgewedge", "ExtEF", "cohwedge"});
    job.n = parse_range("1..4", false);
    job.workers = 1;
    const auto a = run_table(cfg, job);
    job.workers = 3;
    const auto b = run_table(cfg, job);
    CHECK(a.output == b.output);

    JobSpec v;
    v.suite = "whom_oracle";
    v.verify_params.n = 3;
    v.verify_params.families = 5;
    v.workers = 1;
    const auto va = run_verify(v);
    v.workers = 3;
    const auto vb = run_verify(v);
    CHECK(va.exit_code == 0);
    CHECK(va.output == vb.output);
}

TEST_CASE("jobs from a config") {
    const auto j = nlohmann::json::parse(R"({"formula": ["ExtEF"], "n": "1..2", "k": "0..n", "format": "json",
                                             "seed": 7, "E": "H"})");
    const auto spec = jobspec_from_json(j);
    CHECK(spec.formulas == std::vector<std::string>{"ExtEF"});
    CHECK(spec.n.hi == 2);
    CHECK(spec.k.hi_is_n);
    CHECK(spec.format == "json");
    CHECK(spec.verify_params.seed == 7);
    CHECK(spec.E == "H");
    CHECK_THROWS_AS(jobspec_from_json(nlohmann::json::parse(R"({"n": [1]})")), InputError);
}
