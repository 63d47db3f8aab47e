#include "taut/verify.hpp"

#include "taut/formulas.hpp"
#include "taut/oracle.hpp"
#include "taut/parallel.hpp"
#include "taut/report.hpp"

#include <algorithm>
#include <random>

namespace taut::verify {

void PropertyResult::record(bool ok, const nlohmann::json& input) {
    ++cases;
    if (!ok && pass) {
        pass = false;
        counterexample = input;
    }
}

bool SuiteResult::pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

nlohmann::json SuiteResult::to_json() const {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : properties) {
        nlohmann::json j = {{"property", p.name}, {"pass", p.pass}, {"cases", p.cases}};
        if (!p.pass) j["counterexample"] = p.counterexample;
        if (!p.transcript.is_null()) j["transcript"] = p.transcript;
        props.push_back(std::move(j));
    }
    return {
        {"suite", suite},
        {"pass", pass()},
        {"params",
         {{"seed", params.seed},
          {"nmax", params.nmax},
          {"n", params.n},
          {"families", params.families},
          {"quadruples", params.quadruples},
          {"samples", params.samples}}},
        {"properties", props},
    };
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GradedDim random_graded(Rng& rng, int max_total, int min_deg, int max_deg) {
    const int total = uniform(rng, 0, max_total);
    GradedDim::Dims dims;
    for (int i = 0; i < total; ++i) dims[uniform(rng, min_deg, max_deg)] += 1;
    return GradedDim(dims);
}

nlohmann::json ints(const std::vector<Int>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : v) j.push_back(int_to_json(x));
    return j;
}

// ---------------------------------------------------------------------------

SuiteResult appendix(const Params& p) {
    SuiteResult out{"appendix", p, {}};

    {
        PropertyResult r{"exp_harmonic_is_geometric"};
        const int order = std::max(p.nmax, 10) + 1;
        const Orders orders = make_orders(order);
        TruncSeries arg(orders);
        TruncSeries geometric(orders);
        geometric += TruncSeries::constant(1, orders);
        for (int j = 1; j < order; ++j) {
            arg += TruncSeries::monomial(Rational(1, j), {j, 0, 0, 0}, orders);
            geometric += TruncSeries::monomial(1, {j, 0, 0, 0}, orders);
        }
        r.record(exp(arg) == geometric, {{"order", order}});
        r.record(log(geometric) == arg, {{"order", order}, {"direction", "log"}});
        out.properties.push_back(std::move(r));
    }

    {
        PropertyResult sign{"s_equals_signed_lambda_of_negative"};
        PropertyResult binom{"binomial_coefficients_are_lambda"};
        PropertyResult neg{"negative_binomial_coefficients_are_s"};
        const Orders orders = make_orders(11);
        const TruncSeries one = TruncSeries::constant(1, orders);
        const TruncSeries q = TruncSeries::monomial(1, {1, 0, 0, 0}, orders);
        for (int chi = -6; chi <= 6; ++chi) {
            const TruncSeries plus = int_pow(one + q, chi);
            const TruncSeries minus = int_pow(one - q, -chi);
            for (int k = 0; k <= 10; ++k) {
                const nlohmann::json input = {{"chi", chi}, {"k", k}};
                const Int lam_neg = lambda_scalar(k, Int(-chi));
                sign.record(s_scalar(k, chi) == (k % 2 == 0 ? lam_neg : Int(-lam_neg)), input);
                binom.record(plus.coeff({k, 0, 0, 0}) == Rational(lambda_scalar(k, chi)), input);
                neg.record(minus.coeff({k, 0, 0, 0}) == Rational(s_scalar(k, chi)), input);
            }
        }
        out.properties.push_back(std::move(sign));
        out.properties.push_back(std::move(binom));
        out.properties.push_back(std::move(neg));
    }

    {
        PropertyResult three_way{"exp_series_equals_product_equals_closed_sum"};
        PropertyResult integral{"exp_series_coefficients_integral"};
        Rng rng(p.seed);
        std::vector<ChiQuadruple> quads;
        for (int q = 0; q < p.quadruples; ++q) {
            quads.push_back({uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6), uniform(rng, -6, 6)});
        }
        struct Outcome {
            bool integral = true;
            std::vector<std::pair<nlohmann::json, bool>> cells;
        };
        std::vector<Outcome> outcomes(quads.size());
        parallel_for(quads.size(), p.workers, [&](std::size_t qi) {
            const auto& chi = quads[qi];
            const TruncSeries series = bichar_series(chi, p.nmax);
            const TruncSeries product = bichar_product(chi, p.nmax);
            outcomes[qi].integral = series.is_integral();
            for (int n = 0; n <= p.nmax; ++n) {
                for (int k = 0; k <= n; ++k) {
                    for (int l = 0; l <= n; ++l) {
                        const Exponents ex = bichar_exponents(n, k, l);
                        const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
                        const Rational a = sign * series.coeff(ex);
                        const Rational b = sign * product.coeff(ex);
                        const Int c = bichar_closed({n, k, l, chi.chi_KL, chi.chi_Kdual, chi.chi_L, chi.chi_O});
                        const bool ok = a == b && b == Rational(c);
                        outcomes[qi].cells.emplace_back(
                            nlohmann::json{{"chi_KL", int_to_json(chi.chi_KL)},
                                           {"chi_Kdual", int_to_json(chi.chi_Kdual)},
                                           {"chi_L", int_to_json(chi.chi_L)},
                                           {"chi_O", int_to_json(chi.chi_O)},
                                           {"n", n},
                                           {"k", k},
                                           {"l", l},
                                           {"series", a.get_str()},
                                           {"product", b.get_str()},
                                           {"closed", c.get_str()}},
                            ok);
                    }
                }
            }
        });
        for (std::size_t qi = 0; qi < quads.size(); ++qi) {
            const auto& chi = quads[qi];
            integral.record(outcomes[qi].integral, {{"chi_KL", int_to_json(chi.chi_KL)},
                                                    {"chi_Kdual", int_to_json(chi.chi_Kdual)},
                                                    {"chi_L", int_to_json(chi.chi_L)},
                                                    {"chi_O", int_to_json(chi.chi_O)}});
            for (const auto& [input, ok] : outcomes[qi].cells) three_way.record(ok, input);
        }
        out.properties.push_back(std::move(three_way));
        out.properties.push_back(std::move(integral));
    }
    return out;
}

// ---------------------------------------------------------------------------

SuiteResult whom_oracle(const Params& p) {
    SuiteResult out{"whom_oracle", p, {}};
    Rng rng(p.seed);
    struct Family {
        GradedDim A, B, C, D;
    };
    std::vector<Family> families;
    for (int i = 0; i < p.families; ++i) {
        families.push_back({random_graded(rng, 3, 0, 2), random_graded(rng, 3, 0, 2), random_graded(rng, 3, 0, 2),
                            random_graded(rng, 3, 0, 2)});
    }
    struct Case {
        int n, e, f;
        std::size_t family;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= p.n; ++n) {
        for (int e = 0; e <= n; ++e) {
            for (int f = 0; f <= n; ++f) {
                for (std::size_t fam = 0; fam < families.size(); ++fam) cases.push_back({n, e, f, fam});
            }
        }
    }
    struct Outcome {
        bool oracle_ok = false;
        bool euler_ok = false;
        bool symmetric_ok = false;
        nlohmann::json input;
    };
    std::vector<Outcome> outcomes(cases.size());
    parallel_for(cases.size(), p.workers, [&](std::size_t i) {
        const auto& c = cases[i];
        const auto& fam = families[c.family];
        const WHomInput in{c.n, c.e, c.f, fam.A, fam.B, fam.C, fam.D};
        const GradedDim closed = w_hom(in);
        const GradedDim averaged = oracle::oracle_w_hom(in);
        const GradedDim swapped = w_hom({c.n, c.f, c.e, fam.A, fam.C, fam.B, fam.D});
        auto& o = outcomes[i];
        o.oracle_ok = closed == averaged;
        o.euler_ok = euler(closed) == w_hom_euler(c.n, c.e, c.f, euler(fam.A), euler(fam.B), euler(fam.C),
                                                  euler(fam.D));
        o.symmetric_ok = closed == swapped;
        o.input = {{"n", c.n},
                   {"e", c.e},
                   {"f", c.f},
                   {"A", to_json(fam.A)},
                   {"B", to_json(fam.B)},
                   {"C", to_json(fam.C)},
                   {"D", to_json(fam.D)},
                   {"w_hom", to_json(closed)},
                   {"oracle", to_json(averaged)}};
    });
    PropertyResult oracle_eq{"w_hom_equals_group_average"};
    PropertyResult euler_eq{"euler_of_w_hom_equals_scalar_sum"};
    PropertyResult sym{"w_hom_symmetric_under_source_target_swap"};
    for (const auto& o : outcomes) {
        oracle_eq.record(o.oracle_ok, o.input);
        euler_eq.record(o.euler_ok, o.input);
        sym.record(o.symmetric_ok, o.input);
    }
    out.properties.push_back(std::move(oracle_eq));
    out.properties.push_back(std::move(euler_eq));
    out.properties.push_back(std::move(sym));
    return out;
}

// ---------------------------------------------------------------------------

struct TensorInput {
    std::string label;
    std::vector<Int> chi_FLp;
    Int chi_L, chi_O;
};

std::vector<TensorInput> tensor_inputs(const Params& p) {
    std::vector<TensorInput> out;
    const auto len = static_cast<std::size_t>(p.nmax) + 1;
    // K3 with F = O and L of square 4: χ(pL) = 2 + 2p².
    {
        TensorInput k3{"k3_F=O_L^2=4", {}, 4, 2};
        for (std::size_t q = 0; q < len; ++q) k3.chi_FLp.push_back(Int(2 + 2 * static_cast<long>(q * q)));
        out.push_back(std::move(k3));
        out.push_back({"k3_trivial", std::vector<Int>(len, Int(2)), 2, 2});
    }
    // P² with F = O and L = O(1): χ(O(p)) = (p+1)(p+2)/2.
    {
        TensorInput p2{"p2_F=O_L=H", {}, 3, 1};
        for (std::size_t q = 0; q < len; ++q) p2.chi_FLp.push_back(Int(static_cast<long>((q + 1) * (q + 2) / 2)));
        out.push_back(std::move(p2));
    }
    Rng rng(p.seed);
    for (int i = 0; i < p.families; ++i) {
        TensorInput r{"random_" + std::to_string(i), {}, uniform(rng, -6, 6), uniform(rng, -6, 6)};
        for (std::size_t q = 0; q < len; ++q) r.chi_FLp.push_back(uniform(rng, -20, 20));
        out.push_back(std::move(r));
    }
    return out;
}

SuiteResult tensor_euler(const Params& p) {
    SuiteResult out{"tensor_euler", p, {}};
    PropertyResult terms_eq{"term_table_alternating_sum_equals_closed"};
    PropertyResult series_eq{"series_coefficient_equals_closed"};
    for (const auto& in : tensor_inputs(p)) {
        const TruncSeries series = tensor_euler_series([&](int q) { return in.chi_FLp.at(q); }, in.chi_L, in.chi_O,
                                                       p.nmax, p.nmax);
        for (int n = 0; n <= p.nmax; ++n) {
            for (int k = 0; k <= n; ++k) {
                nlohmann::json input = {{"inputs", in.label}, {"chi_FLp", ints(in.chi_FLp)},
                                        {"chi_L", int_to_json(in.chi_L)}, {"chi_O", int_to_json(in.chi_O)},
                                        {"n", n}, {"k", k}};
                const Int closed = tensor_euler_closed(n, k, in.chi_FLp, in.chi_L, in.chi_O);
                const Int alt = alternating_sum(tensor_euler_terms(n, k, in.chi_FLp, in.chi_L, in.chi_O));
                const Rational coeff = series.coeff({n, k, 0, 0});
                input["closed"] = closed.get_str();
                input["terms"] = alt.get_str();
                input["series"] = coeff.get_str();
                terms_eq.record(alt == closed, input);
                series_eq.record(coeff == Rational(closed), input);
            }
        }
    }
    out.properties.push_back(std::move(terms_eq));
    out.properties.push_back(std::move(series_eq));
    return out;
}

// ---------------------------------------------------------------------------

// Every graded space with total dimension <= max_total and degrees in [lo, hi].
void all_graded(int max_total, int lo, int hi, std::vector<GradedDim>& out) {
    GradedDim::Dims dims;
    auto rec = [&](auto&& self, int degree, int remaining) -> void {
        if (degree > hi) {
            out.emplace_back(dims);
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            if (m > 0) dims[degree] = m;
            else dims.erase(degree);
            self(self, degree + 1, remaining - m);
        }
        dims.erase(degree);
    };
    rec(rec, lo, max_total);
}

SuiteResult graded_powers(const Params& p) {
    SuiteResult out{"graded_powers", p, {}};
    PropertyResult sym_eq{"sym_power_equals_basis_enumeration"};
    PropertyResult wedge_eq{"wedge_power_equals_basis_enumeration"};
    std::vector<GradedDim> domain;
    all_graded(oracle::kMaxEnumerationDim, -2, 3, domain);
    std::vector<std::array<bool, 2>> ok(domain.size() * (oracle::kMaxEnumerationPower + 1));
    parallel_for(domain.size(), p.workers, [&](std::size_t i) {
        for (int k = 0; k <= oracle::kMaxEnumerationPower; ++k) {
            ok[i * (oracle::kMaxEnumerationPower + 1) + k] = {
                sym_power(k, domain[i]) == oracle::oracle_sym_wedge(oracle::PowerKind::sym, k, domain[i]),
                wedge_power(k, domain[i]) == oracle::oracle_sym_wedge(oracle::PowerKind::wedge, k, domain[i])};
        }
    });
    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (int k = 0; k <= oracle::kMaxEnumerationPower; ++k) {
            const auto& r = ok[i * (oracle::kMaxEnumerationPower + 1) + k];
            const nlohmann::json input = {{"V", to_json(domain[i])}, {"k", k}};
            sym_eq.record(r[0], input);
            wedge_eq.record(r[1], input);
        }
    }

    PropertyResult sym_euler{"euler_of_sym_power_is_s"};
    PropertyResult wedge_euler{"euler_of_wedge_power_is_lambda"};
    PropertyResult additive{"powers_of_direct_sums_split"};
    Rng rng(p.seed);
    for (int s = 0; s < p.samples; ++s) {
        const GradedDim v = random_graded(rng, 10, -3, 4);
        const GradedDim w = random_graded(rng, 4, -1, 2);
        const Int chi = euler(v);
        for (int k = 0; k <= 8; ++k) {
            const nlohmann::json input = {{"V", to_json(v)}, {"W", to_json(w)}, {"k", k}};
            sym_euler.record(euler(sym_power(k, v)) == s_scalar(k, chi), input);
            wedge_euler.record(euler(wedge_power(k, v)) == lambda_scalar(k, chi), input);
            if (k <= 5) {
                GradedDim sym_split, wedge_split;
                for (int i = 0; i <= k; ++i) {
                    sym_split = direct_sum(sym_split, tensor(sym_power(i, v), sym_power(k - i, w)));
                    wedge_split = direct_sum(wedge_split, tensor(wedge_power(i, v), wedge_power(k - i, w)));
                }
                const GradedDim vw = direct_sum(v, w);
                additive.record(sym_power(k, vw) == sym_split && wedge_power(k, vw) == wedge_split, input);
            }
        }
    }
    out.properties.push_back(std::move(sym_eq));
    out.properties.push_back(std::move(wedge_eq));
    out.properties.push_back(std::move(sym_euler));
    out.properties.push_back(std::move(wedge_euler));
    out.properties.push_back(std::move(additive));
    return out;
}

// ---------------------------------------------------------------------------

using Census = std::map<std::vector<int>, std::uint64_t>;

Census symmetric_group_census(int m) {
    std::vector<oracle::Permutation> all;
    oracle::Permutation sigma(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) sigma[i] = i;
    do {
        all.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return oracle::cycle_type_census(all);
}

// Cycle-type census of S_a × S_b × ... from the censuses of the factors.
Census product_census(const std::vector<int>& factors) {
    Census acc{{{}, 1}};
    for (int m : factors) {
        Census next;
        for (const auto& [ta, ca] : acc) {
            for (const auto& [tb, cb] : symmetric_group_census(m)) {
                std::vector<int> t = ta;
                t.insert(t.end(), tb.begin(), tb.end());
                std::sort(t.rbegin(), t.rend());
                next[t] += ca * cb;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::uint64_t fact(int m) {
    std::uint64_t r = 1;
    for (int i = 2; i <= m; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

SuiteResult orbits(const Params& p) {
    SuiteResult out{"orbits", p, {}};
    PropertyResult count{"orbit_count_matches_index_range"};
    PropertyResult contains{"standard_pairs_represent_orbits"};
    PropertyResult stab{"stabilizer_order_is_young_subgroup_order"};
    PropertyResult os{"orbit_size_times_stabilizer_is_group_order"};
    PropertyResult census{"stabilizer_cycle_census_matches_young_subgroup"};
    PropertyResult cover{"orbit_sizes_cover_all_pairs"};
    nlohmann::json transcript = nlohmann::json::array();

    for (int n = 0; n <= p.n; ++n) {
        for (int e = 0; e <= n; ++e) {
            for (int f = 0; f <= n; ++f) {
                const auto d = oracle::orbit_decomposition(n, e, f);
                const int lo = std::max(0, e + f - n);
                const int hi = std::min(e, f);
                const nlohmann::json input = {{"n", n}, {"e", e}, {"f", f}};
                count.record(static_cast<int>(d.orbits.size()) == hi - lo + 1, input);

                std::uint64_t total = 0;
                for (const auto& o : d.orbits) total += o.size;
                cover.record(total == fact(n) / (fact(e) * fact(n - e)) * (fact(n) / (fact(f) * fact(n - f))), input);

                nlohmann::json sizes = nlohmann::json::array();
                std::vector<bool> used(d.orbits.size(), false);
                for (int i = lo; i <= hi; ++i) {
                    const int idx = oracle::find_orbit(d, oracle::standard_pair(e, f, i));
                    nlohmann::json ci = input;
                    ci["i"] = i;
                    const bool found = idx >= 0 && !used[idx] && d.orbits[idx].intersection == i;
                    contains.record(found, ci);
                    if (!found) continue;
                    used[idx] = true;
                    const auto& o = d.orbits[idx];
                    const std::vector<int> blocks = {i, e - i, f - i, n - e - f + i};
                    std::uint64_t young = 1;
                    for (int b : blocks) young *= fact(b);
                    ci["stabilizer_order"] = o.stabilizer_order;
                    ci["young_order"] = young;
                    stab.record(o.stabilizer_order == young, ci);
                    os.record(o.size * o.stabilizer_order == fact(n), ci);
                    if (n <= 7) {
                        const auto computed = oracle::cycle_type_census(oracle::stabilizer_elements(n, o.representative));
                        census.record(computed == product_census(blocks), ci);
                    }
                    sizes.push_back({{"i", i}, {"size", o.size}, {"stabilizer_order", o.stabilizer_order}});
                }
                transcript.push_back({{"n", n}, {"e", e}, {"f", f}, {"orbits", d.orbits.size()}, {"by_i", sizes}});
            }
        }
    }
    count.transcript = std::move(transcript);
    for (auto* r : {&count, &contains, &stab, &os, &census, &cover}) out.properties.push_back(std::move(*r));
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"appendix", "whom_oracle", "tensor_euler", "graded_powers",
                                                   "orbits"};
    return names;
}

SuiteResult run_suite(const std::string& name, const Params& params) {
    if (name == "appendix") return appendix(params);
    if (name == "whom_oracle") return whom_oracle(params);
    if (name == "tensor_euler") return tensor_euler(params);
    if (name == "graded_powers") return graded_powers(params);
    if (name == "orbits") return orbits(params);
    throw InputError("unknown suite \"" + name + "\"");
}

} // namespace taut::verify
