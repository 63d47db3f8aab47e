#include "taut/cli.hpp"

#include "taut/formulas.hpp"
#include "taut/oracle.hpp"
#include "taut/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <tuple>

namespace taut::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw InputError(what + ": \"" + text + "\" is not an integer");
    return value;
}

} // namespace

std::vector<int> Range::values(int n) const {
    const int top = hi_is_n ? n : hi;
    std::vector<int> out;
    for (int i = lo; i <= top; ++i) out.push_back(i);
    return out;
}

Range parse_range(const std::string& text, bool allow_n) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(text, "range");
        return {v, v, false};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r;
    r.lo = parse_int(lo, "range \"" + text + "\"");
    if (hi == "n") {
        if (!allow_n) throw InputError("range \"" + text + "\": upper bound n is only allowed for k and l");
        r.hi_is_n = true;
        r.hi = r.lo;
    } else {
        r.hi = parse_int(hi, "range \"" + text + "\"");
        if (r.hi < r.lo) throw InputError("range \"" + text + "\" is empty");
    }
    if (r.lo < 0) throw InputError("range \"" + text + "\": bounds must be non-negative");
    return r;
}

JobSpec jobspec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("jobs[]: each job must be an object");
    JobSpec s;
    auto str = [&](const char* key, std::string& dst) {
        if (!j.contains(key)) return;
        if (!j.at(key).is_string()) throw InputError(std::string("job.") + key + ": expected a string");
        dst = j.at(key).get<std::string>();
    };
    auto num = [&](const char* key, auto& dst) {
        if (!j.contains(key)) return;
        if (!j.at(key).is_number_integer()) throw InputError(std::string("job.") + key + ": expected an integer");
        dst = j.at(key).get<std::remove_reference_t<decltype(dst)>>();
    };
    auto range = [&](const char* key, Range& dst, bool allow_n) {
        if (!j.contains(key)) return;
        const auto& v = j.at(key);
        if (v.is_number_integer()) dst = {v.get<int>(), v.get<int>(), false};
        else if (v.is_string()) dst = parse_range(v.get<std::string>(), allow_n);
        else throw InputError(std::string("job.") + key + ": expected a range string");
    };
    str("command", s.command);
    if (j.contains("formula")) {
        const auto& f = j.at("formula");
        if (f.is_string()) s.formulas = {f.get<std::string>()};
        else if (f.is_array()) s.formulas = f.get<std::vector<std::string>>();
        else throw InputError("job.formula: expected a string or an array of strings");
    }
    range("n", s.n, false);
    range("k", s.k, true);
    range("l", s.l, true);
    str("format", s.format);
    str("out", s.out);
    num("seed", s.seed);
    num("workers", s.workers);
    str("E", s.E);
    str("F", s.F);
    str("K", s.K);
    str("L", s.L);
    str("suite", s.suite);
    str("kind", s.series_kind);
    num("nmax", s.nmax);
    s.verify_params.seed = s.seed;
    s.verify_params.nmax = s.nmax;
    num("families", s.verify_params.families);
    num("quadruples", s.verify_params.quadruples);
    num("samples", s.verify_params.samples);
    if (j.contains("n") && j.at("n").is_number_integer()) s.verify_params.n = j.at("n").get<int>();
    return s;
}

const std::vector<std::string>& table_formulas() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (auto t : kAllVariants) v.emplace_back(variant_name(t));
        for (const char* s : {"w_hom", "bichar_closed", "bichar_series", "bichar_product", "tensor_euler_closed",
                              "tensor_euler_terms", "tensor_euler_series", "curve_bichar", "rank3_check"}) {
            v.emplace_back(s);
        }
        return v;
    }();
    return ids;
}

// ---------------------------------------------------------------------------
// table

namespace {

struct Cell {
    std::string formula;
    int n, k, l;
};

const SurfaceData& need_surface(const GeometryConfig& cfg, const std::string& formula) {
    if (!cfg.surface) throw InputError("formula " + formula + " needs a surface (--surface)");
    return *cfg.surface;
}

const CurveData& need_curve(const GeometryConfig& cfg, const std::string& formula) {
    if (!cfg.curve) throw InputError("formula " + formula + " needs a curve (--curve)");
    return *cfg.curve;
}

// Line bundle class behind each table key of the formula layer.
LineBundleClass class_for(const SurfaceData& s, const JobSpec& job, const std::string& key) {
    const auto E = s.bundle(job.E), F = s.bundle(job.F), K = s.bundle(job.K), L = s.bundle(job.L);
    if (key == "O") return s.zero_class();
    if (key == "F") return F;
    if (key == "L") return L;
    if (key == "K") return K;
    if (key == "Evee") return -E;
    if (key == "Lvee") return -L;
    if (key == "Kvee") return -K;
    if (key == "Hom(E,F)") return F - E;
    if (key == "Hom(E,L)") return L - E;
    if (key == "Hom(L,F)") return F - L;
    if (key == "Hom(K,L)") return L - K;
    throw InputError("unknown table key " + key);
}

struct BicharArgs {
    std::string K, L;
    int k, l;
};

// The same cell read as χ(∧^k K^[n], ∧^l L^[n]) for line bundles K, L.
BicharArgs bichar_reading(TautVariant v, const JobSpec& job, int k, int l) {
    switch (v) {
    case TautVariant::cohF: return {"O", job.F, 0, 1};
    case TautVariant::cohEvee: return {job.E, "O", 1, 0};
    case TautVariant::ExtEF: return {job.E, job.F, 1, 1};
    case TautVariant::cohwedge: return {"O", job.L, 0, k};
    case TautVariant::ExtEwedge: return {job.E, job.L, 1, k};
    case TautVariant::ExtwedgeF: return {job.L, job.F, k, 1};
    case TautVariant::Extwedgewedge: return {job.K, job.L, k, l};
    }
    return {};
}

ChiQuadruple quadruple(const SurfaceData& s, const std::string& K, const std::string& L) {
    const auto k = s.bundle(K), l = s.bundle(L);
    return {chi_pair(s, k, l), rr_chi(s, -k), rr_chi(s, l), s.chi_O};
}

nlohmann::json quadruple_json(const ChiQuadruple& q) {
    return {{"chi_KL", int_to_json(q.chi_KL)},
            {"chi_Kdual", int_to_json(q.chi_Kdual)},
            {"chi_L", int_to_json(q.chi_L)},
            {"chi_O", int_to_json(q.chi_O)}};
}

class TableRunner {
public:
    TableRunner(const GeometryConfig& cfg, const JobSpec& job) : cfg_(cfg), job_(job) {}

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (const auto& f : job_.formulas) {
            const auto variant = parse_variant(f);
            const bool known = variant || std::find(table_formulas().begin(), table_formulas().end(), f) !=
                                              table_formulas().end();
            if (!known) throw InputError("unknown formula \"" + f + "\"");
            if (f == "rank3_check") {
                out.push_back({f, 2, 0, 0});
                continue;
            }
            bool uses_k = true, uses_l = true;
            int n_min = 0;
            if (variant) {
                uses_k = variant_uses_k(*variant);
                uses_l = variant_uses_l(*variant);
                n_min = 1;
            } else if (f.starts_with("tensor_euler")) {
                uses_l = false;
            } else if (f == "curve_bichar") {
                uses_k = uses_l = false;
                n_min = 1;
            }
            for (int n : job_.n.values(0)) {
                if (n < n_min) continue;
                const auto ks = uses_k ? job_.k.values(n) : std::vector<int>{0};
                const auto ls = uses_l ? job_.l.values(n) : std::vector<int>{0};
                for (int k : ks) {
                    for (int l : ls) {
                        if (k <= n && l <= n) out.push_back({f, n, k, l});
                    }
                }
            }
        }
        if (out.empty()) throw InputError("table: the n/k/l ranges select no cells");
        return out;
    }

    // Shared series, built once before the cells are evaluated.
    void prepare(const std::vector<Cell>& cells) {
        int n_max = 0;
        bool bichar = false, tensor = false;
        for (const auto& c : cells) {
            n_max = std::max(n_max, c.n);
            bichar |= c.formula.starts_with("bichar");
            tensor |= c.formula.starts_with("tensor_euler");
        }
        if (bichar) {
            const auto& s = need_surface(cfg_, "bichar_*");
            quad_ = quadruple(s, job_.K, job_.L);
            bichar_series_ = bichar_series(quad_, n_max);
            bichar_product_ = bichar_product(quad_, n_max);
        }
        if (tensor) {
            const auto& s = need_surface(cfg_, "tensor_euler_*");
            chi_FLp_ = chi_tensor_powers(s, s.bundle(job_.F), s.bundle(job_.L), n_max);
            chi_L_ = rr_chi(s, s.bundle(job_.L));
            tensor_series_ = tensor_euler_series([this](int p) { return chi_FLp_.at(p); }, chi_L_, s.chi_O, n_max,
                                                 n_max);
        }
    }

    InvariantReport evaluate(const Cell& c) const {
        InvariantReport r;
        r.formula_id = c.formula;
        r.n = c.n;
        r.k = c.k;
        r.l = c.l;
        if (auto v = parse_variant(c.formula)) variant(*v, c, r);
        else if (c.formula == "w_hom") whom(c, r);
        else if (c.formula.starts_with("bichar")) bichar(c, r);
        else if (c.formula.starts_with("tensor_euler")) tensor(c, r);
        else if (c.formula == "curve_bichar") curve(c, r);
        else if (c.formula == "rank3_check") rank3(r);
        validate(r);
        return r;
    }

private:
    void variant(TautVariant v, const Cell& c, InvariantReport& r) const {
        const auto& s = need_surface(cfg_, c.formula);
        const auto keys = required_tables(v, c.n, c.k, c.l);
        TableSet tables;
        ChiSet chis;
        nlohmann::json chi_json = nlohmann::json::object();
        for (const auto& key : keys) {
            const auto cls = class_for(s, job_, key);
            chis[key] = rr_chi(s, cls);
            chi_json[key] = int_to_json(chis[key]);
            if (auto t = s.table_for(cls)) tables[key] = *t;
        }
        const Int rr_value = taut_formula_euler(v, c.n, c.k, c.l, chis);
        const bool graded = tables.size() == keys.size();
        r.inputs = {{"mode", graded ? "graded" : "euler"}, {"chi", chi_json}};
        r.flags = taut_flags(v, c.n, c.k, c.l);
        if (graded) {
            r.graded = taut_formula(v, c.n, c.k, c.l, tables);
            r.euler = euler(*r.graded);
            r.cross_checks.push_back({"euler_rr", r.euler == rr_value});
            if (c.n <= kOracleMaxN) {
                const auto sub = substitution(v, c.n, c.k, c.l);
                const WHomInput in{c.n, sub.e, sub.f, tables.at(sub.A), tables.at(sub.B), tables.at(sub.C),
                                   tables.at(sub.D)};
                r.cross_checks.push_back({"oracle_w_hom", oracle::oracle_w_hom(in) == *r.graded});
            }
        } else {
            r.euler = rr_value;
            r.flags.push_back("euler_only");
        }
        const auto b = bichar_reading(v, job_, c.k, c.l);
        const auto q = quadruple(s, b.K, b.L);
        r.cross_checks.push_back(
            {"bichar_closed", bichar_closed({c.n, b.k, b.l, q.chi_KL, q.chi_Kdual, q.chi_L, q.chi_O}) == r.euler});
    }

    void whom(const Cell& c, InvariantReport& r) const {
        const auto& s = need_surface(cfg_, c.formula);
        TableSet t;
        for (const char* key : {"Hom(E,F)", "Evee", "F", "O"}) {
            auto table = s.table_for(class_for(s, job_, key));
            if (!table) throw InputError("w_hom needs a cohomology table for " + std::string(key));
            t[key] = *table;
        }
        const WHomInput in{c.n, c.k, c.l, t["Hom(E,F)"], t["Evee"], t["F"], t["O"]};
        r.inputs = {{"e", c.k}, {"f", c.l}, {"A", to_json(in.A)}, {"B", to_json(in.B)}, {"C", to_json(in.C)},
                    {"D", to_json(in.D)}};
        r.graded = w_hom(in);
        r.euler = euler(*r.graded);
        r.cross_checks.push_back(
            {"w_hom_euler", w_hom_euler(c.n, c.k, c.l, euler(in.A), euler(in.B), euler(in.C), euler(in.D)) ==
                                r.euler});
        if (c.n <= kOracleMaxN) r.cross_checks.push_back({"oracle_w_hom", oracle::oracle_w_hom(in) == *r.graded});
    }

    void bichar(const Cell& c, InvariantReport& r) const {
        const Exponents ex = bichar_exponents(c.n, c.k, c.l);
        const Rational sign = (c.k + c.l) % 2 == 0 ? 1 : -1;
        const Rational from_series = sign * bichar_series_.coeff(ex);
        const Rational from_product = sign * bichar_product_.coeff(ex);
        const Int closed = bichar_closed({c.n, c.k, c.l, quad_.chi_KL, quad_.chi_Kdual, quad_.chi_L, quad_.chi_O});
        r.inputs = quadruple_json(quad_);
        const std::vector<std::pair<std::string, Rational>> all = {
            {"bichar_closed", Rational(closed)}, {"bichar_series", from_series}, {"bichar_product", from_product}};
        Rational value;
        for (const auto& [id, x] : all) {
            if (id == c.formula) value = x;
        }
        if (value.get_den() != 1) throw ConsistencyError(c.formula + ": non-integral coefficient " + value.get_str());
        r.euler = value.get_num();
        for (const auto& [id, x] : all) {
            if (id != c.formula) r.cross_checks.push_back({id, x == value});
        }
    }

    void tensor(const Cell& c, InvariantReport& r) const {
        const auto& s = *cfg_.surface;
        const std::span<const Int> chis(chi_FLp_.data(), static_cast<std::size_t>(c.k) + 1);
        const Int closed = tensor_euler_closed(c.n, c.k, chis, chi_L_, s.chi_O);
        const auto terms = tensor_euler_terms(c.n, c.k, chis, chi_L_, s.chi_O);
        const Int alt = alternating_sum(terms);
        const Rational coeff = tensor_series_.coeff({c.n, c.k, 0, 0});
        nlohmann::json chi_json = nlohmann::json::array();
        for (const auto& x : chis) chi_json.push_back(int_to_json(x));
        r.inputs = {{"chi_FLp", chi_json}, {"chi_L", int_to_json(chi_L_)}, {"chi_O", int_to_json(s.chi_O)}};
        const std::vector<std::pair<std::string, Rational>> all = {{"tensor_euler_closed", Rational(closed)},
                                                                   {"tensor_euler_terms", Rational(alt)},
                                                                   {"tensor_euler_series", coeff}};
        Rational value;
        for (const auto& [id, x] : all) {
            if (id == c.formula) value = x;
        }
        if (value.get_den() != 1) throw ConsistencyError(c.formula + ": non-integral coefficient " + value.get_str());
        r.euler = value.get_num();
        for (const auto& [id, x] : all) {
            if (id != c.formula) r.cross_checks.push_back({id, x == value});
        }
        if (c.formula == "tensor_euler_terms") {
            nlohmann::json table = nlohmann::json::array();
            for (const auto& t : terms) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& x : t.contributions) row.push_back(int_to_json(x));
                table.push_back(row);
            }
            r.extra["terms"] = table;
        }
    }

    void curve(const Cell& c, InvariantReport& r) const {
        const auto& cd = need_curve(cfg_, c.formula);
        const auto E = cd.bundle(job_.E), F = cd.bundle(job_.F);
        const Int chi_EF = curve_chi_pair(cd, E, F);
        const Int chi_Edual = curve_chi_dual(cd, E);
        const Int chi_F = curve_chi(cd, F);
        const Int chi_OC = curve_chi(cd, CurveBundle{1, 0});
        r.inputs = {{"chi_EF", int_to_json(chi_EF)},
                    {"chi_Edual", int_to_json(chi_Edual)},
                    {"chi_F", int_to_json(chi_F)},
                    {"chi_O", int_to_json(chi_OC)}};
        r.euler = curve_bichar(c.n, chi_EF, chi_Edual, chi_F, chi_OC);
        // The surface formula fed the same Euler numbers, for comparison.
        const ChiSet chis = {{"Hom(E,F)", chi_EF}, {"Evee", chi_Edual}, {"F", chi_F}, {"O", chi_OC}};
        r.extra["surface_value"] = int_to_json(taut_formula_euler(TautVariant::ExtEF, c.n, 1, 1, chis));
    }

    void rank3(InvariantReport& r) const {
        const auto& s = need_surface(cfg_, "rank3_check");
        if (!s.chi_Omega) throw InputError("surface.chi_Omega: required by rank3_check");
        const auto res = rank3_check(s.chi_O, *s.chi_Omega);
        r.inputs = {{"chi_O", int_to_json(s.chi_O)}, {"chi_Omega", int_to_json(*s.chi_Omega)}};
        r.euler = res.value;
        r.extra["naive_value"] = int_to_json(res.naive_value);
    }

    static constexpr int kOracleMaxN = 6;

    const GeometryConfig& cfg_;
    const JobSpec& job_;
    ChiQuadruple quad_;
    TruncSeries bichar_series_{make_orders(1)};
    TruncSeries bichar_product_{make_orders(1)};
    std::vector<Int> chi_FLp_;
    Int chi_L_;
    TruncSeries tensor_series_{make_orders(1)};
};

nlohmann::json table_meta(const JobSpec& job) {
    return {{"command", "table"},
            {"formulas", job.formulas},
            {"bundles", {{"E", job.E}, {"F", job.F}, {"K", job.K}, {"L", job.L}}}};
}

template <class Fn>
Outcome guarded(Fn&& fn) {
    Outcome out;
    try {
        out = fn();
    } catch (const ConsistencyError& e) {
        out.exit_code = kExitConsistency;
        out.log.push_back(std::string("consistency failure: ") + e.what());
    } catch (const InputError& e) {
        out.exit_code = kExitUsage;
        out.log.push_back(std::string("error: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        out.exit_code = kExitUsage;
        out.log.push_back(std::string("error: ") + e.what());
    }
    return out;
}

} // namespace

std::vector<InvariantReport> table_rows(const GeometryConfig& cfg, const JobSpec& job) {
    TableRunner runner(cfg, job);
    const auto cells = runner.cells();
    runner.prepare(cells);
    std::vector<InvariantReport> rows(cells.size());
    parallel_for(cells.size(), job.workers, [&](std::size_t i) { rows[i] = runner.evaluate(cells[i]); });
    std::sort(rows.begin(), rows.end(), [](const InvariantReport& a, const InvariantReport& b) {
        return std::tie(a.formula_id, a.n, a.k, a.l) < std::tie(b.formula_id, b.n, b.k, b.l);
    });
    return rows;
}

Outcome run_table(const GeometryConfig& cfg, const JobSpec& job) {
    return guarded([&] {
        if (job.format != "csv" && job.format != "json") throw InputError("format must be csv or json");
        if (job.formulas.empty()) throw InputError("table needs at least one --formula");
        Outcome out;
        for (const auto& w : cfg.warnings) out.log.push_back("warning: " + w);
        const auto rows = table_rows(cfg, job);
        out.output = job.format == "csv" ? render_csv(rows) : render_json(rows, table_meta(job));
        for (const auto& r : rows) {
            if (!r.all_checks_pass()) {
                out.exit_code = kExitConsistency;
                out.log.push_back("cross-check failed: " + to_csv_row(r));
            }
        }
        return out;
    });
}

// ---------------------------------------------------------------------------
// verify

Outcome run_verify(const JobSpec& job) {
    return guarded([&] {
        std::vector<std::string> suites;
        if (job.suite == "all") suites = verify::suite_names();
        else if (std::find(verify::suite_names().begin(), verify::suite_names().end(), job.suite) !=
                 verify::suite_names().end())
            suites = {job.suite};
        else throw InputError("unknown suite \"" + job.suite + "\"");

        verify::Params params = job.verify_params;
        params.workers = job.workers;
        Outcome out;
        out.log.push_back("seed = " + std::to_string(params.seed));
        nlohmann::json results = nlohmann::json::array();
        bool pass = true;
        for (const auto& name : suites) {
            const auto res = verify::run_suite(name, params);
            pass = pass && res.pass();
            for (const auto& p : res.properties) {
                out.log.push_back(name + "/" + p.name + ": " + (p.pass ? "pass" : "FAIL") + " (" +
                                  std::to_string(p.cases) + " cases)");
                if (!p.pass) out.log.push_back("  counterexample: " + p.counterexample.dump());
            }
            results.push_back(res.to_json());
        }
        const nlohmann::json doc = {{"seed", params.seed}, {"pass", pass}, {"suites", results}};
        out.output = doc.dump(2) + '\n';
        out.exit_code = pass ? kExitOk : kExitConsistency;
        return out;
    });
}

// ---------------------------------------------------------------------------
// series

Outcome run_series(const GeometryConfig& cfg, const JobSpec& job) {
    return guarded([&] {
        if (job.nmax < 0) throw InputError("nmax must be non-negative");
        const auto& s = need_surface(cfg, "series");
        TruncSeries series(make_orders(1));
        nlohmann::json inputs;
        if (job.series_kind == "bichar" || job.series_kind == "bichar_product") {
            const auto q = quadruple(s, job.K, job.L);
            series = job.series_kind == "bichar" ? bichar_series(q, job.nmax) : bichar_product(q, job.nmax);
            inputs = quadruple_json(q);
        } else if (job.series_kind == "tensor_euler") {
            const auto chis = chi_tensor_powers(s, s.bundle(job.F), s.bundle(job.L), job.nmax);
            const Int chi_L = rr_chi(s, s.bundle(job.L));
            series = tensor_euler_series([&](int p) { return chis.at(p); }, chi_L, s.chi_O, job.nmax, job.nmax);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& x : chis) arr.push_back(int_to_json(x));
            inputs = {{"chi_FLp", arr}, {"chi_L", int_to_json(chi_L)}, {"chi_O", int_to_json(s.chi_O)}};
        } else {
            throw InputError("unknown series kind \"" + job.series_kind + "\" (bichar, bichar_product, tensor_euler)");
        }
        Outcome out;
        if (job.format == "text") {
            out.output = series.to_string();
        } else if (job.format == "json") {
            const nlohmann::json doc = {
                {"kind", job.series_kind}, {"nmax", job.nmax}, {"inputs", inputs}, {"series", to_json(series)}};
            out.output = doc.dump(2) + '\n';
        } else {
            throw InputError("series format must be json or text");
        }
        return out;
    });
}

// ---------------------------------------------------------------------------

Outcome run_jobs(const GeometryConfig& cfg, unsigned workers) {
    Outcome all;
    if (cfg.jobs.empty()) {
        all.exit_code = kExitUsage;
        all.log.push_back("error: config.jobs: no jobs to run");
        return all;
    }
    for (std::size_t i = 0; i < cfg.jobs.size(); ++i) {
        Outcome one = guarded([&] {
            JobSpec job = jobspec_from_json(cfg.jobs[i]);
            if (!cfg.jobs[i].contains("workers")) job.workers = workers;
            Outcome o;
            if (job.command == "table") o = run_table(cfg, job);
            else if (job.command == "verify") o = run_verify(job);
            else if (job.command == "series") o = run_series(cfg, job);
            else throw InputError("jobs[" + std::to_string(i) + "].command: unknown command \"" + job.command + "\"");
            if (!job.out.empty()) {
                std::ofstream f(job.out, std::ios::binary);
                if (!f) throw InputError("jobs[" + std::to_string(i) + "].out: cannot write " + job.out);
                f << o.output;
                o.output.clear();
            }
            return o;
        });
        all.exit_code = std::max(all.exit_code, one.exit_code);
        all.output += one.output;
        for (auto& line : one.log) all.log.push_back("jobs[" + std::to_string(i) + "] " + line);
    }
    return all;
}

GeometryConfig load_geometry(const std::string& surface_path, const std::string& curve_path) {
    auto read = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        try {
            return nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(path + ": " + e.what());
        }
    };
    auto wrapped = [&](const std::string& path, const char* key) {
        nlohmann::json j = read(path);
        if (j.is_object() && (j.contains("surface") || j.contains("curve") || j.contains("jobs"))) return j;
        return nlohmann::json{{key, j}};
    };
    nlohmann::json merged = nlohmann::json::object();
    if (!surface_path.empty()) {
        const auto j = wrapped(surface_path, "surface");
        if (j.contains("surface")) merged["surface"] = j["surface"];
        if (j.contains("curve")) merged["curve"] = j["curve"];
    }
    if (!curve_path.empty()) {
        const auto j = wrapped(curve_path, "curve");
        if (j.contains("curve")) merged["curve"] = j["curve"];
    }
    return config_from_json(merged);
}

int emit(const Outcome& outcome, const std::string& path) {
    for (const auto& line : outcome.log) std::cerr << line << '\n';
    if (path.empty()) {
        std::cout << outcome.output;
        std::cout.flush();
        return outcome.exit_code;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path << '\n';
        return kExitUsage;
    }
    f << outcome.output;
    return outcome.exit_code;
}

} // namespace taut::cli
