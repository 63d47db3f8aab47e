#include "taut/formulas.hpp"
#include "taut/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace taut;

namespace {

const GradedDim kK3O{{0, 1}, {2, 1}};

TableSet all_tables(const GradedDim& v) {
    TableSet t;
    for (const char* key : {"O", "F", "L", "K", "Evee", "Lvee", "Kvee", "Hom(E,F)", "Hom(E,L)", "Hom(L,F)", "Hom(K,L)"})
        t[key] = v;
    return t;
}

ChiSet all_chis(const Int& c) {
    ChiSet out;
    for (const auto& [key, v] : all_tables(GradedDim{})) out[key] = c;
    return out;
}

} // namespace

TEST_CASE("w_hom") {
    const GradedDim a{{-1, 1}, {3, 2}};
    CHECK(w_hom({1, 1, 1, a, kK3O, kK3O, kK3O}) == a);

    const WHomInput ex{2, 1, 1, kK3O, kK3O, kK3O, kK3O};
    CHECK(w_hom(ex) == oracle::oracle_w_hom(ex));
    CHECK(w_hom(ex) == GradedDim{{0, 2}, {2, 4}, {4, 2}});

    const WHomInput only_i0{2, 2, 0, GradedDim{{5, 1}}, kK3O, GradedDim{{1, 1}}, kK3O};
    CHECK(w_hom(only_i0) == tensor(wedge_power(2, kK3O), sym_power(0, kK3O)));
    CHECK(w_hom(only_i0) == GradedDim{{2, 1}});

    // e + f > 2n leaves an empty index range.
    CHECK(w_hom({1, 2, 2, kK3O, kK3O, kK3O, kK3O}).is_zero());
    CHECK(w_hom_euler(2, 1, 1, 2, 2, 2, 2) == euler(w_hom(ex)));
}

TEST_CASE("substitution table") {
    const auto s = substitution(TautVariant::Extwedgewedge, 4, 2, 3);
    CHECK(s.e == 2);
    CHECK(s.f == 3);
    CHECK(s.A == "Hom(K,L)");
    CHECK(s.B == "Kvee");
    CHECK(s.C == "L");
    CHECK(s.D == "O");
    CHECK_THROWS_AS(substitution(TautVariant::cohwedge, 2, 3, 0), InputError);
    CHECK_THROWS_AS(substitution(TautVariant::cohF, 0, 0, 0), InputError);
    for (auto v : kAllVariants) CHECK(parse_variant(variant_name(v)) == v);
    CHECK_FALSE(parse_variant("nope").has_value());
}

TEST_CASE("taut_formula") {
    TableSet t;
    t["F"] = kK3O;
    t["O"] = kK3O;
    CHECK(taut_formula(TautVariant::cohF, 2, 0, 0, t) == tensor(kK3O, sym_power(1, kK3O)));
    CHECK(taut_formula(TautVariant::cohF, 2, 0, 0, t) == GradedDim{{0, 1}, {2, 2}, {4, 1}});

    const auto k3 = all_tables(kK3O);
    const auto cohwedge0 = taut_formula(TautVariant::cohwedge, 2, 0, 0, k3);
    CHECK(cohwedge0 == oracle::oracle_sym_wedge(oracle::PowerKind::sym, 2, kK3O));
    CHECK(cohwedge0 == GradedDim{{0, 1}, {2, 1}, {4, 1}});
    CHECK(euler(cohwedge0) == s_scalar(2, 2));

    CHECK(taut_formula(TautVariant::ExtEF, 2, 0, 0, k3) == w_hom({2, 1, 1, kK3O, kK3O, kK3O, kK3O}));

    TableSet missing;
    missing["O"] = kK3O;
    CHECK_THROWS_WITH_AS(taut_formula(TautVariant::cohF, 2, 0, 0, missing), doctest::Contains("F"), InputError);
}

TEST_CASE("every variant is a w_hom instance with matching Euler numbers") {
    const auto k3 = all_tables(kK3O);
    const auto chis = all_chis(2);
    for (auto v : kAllVariants) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int l = 0; l <= n; ++l) {
                    const auto s = substitution(v, n, k, l);
                    const auto g = taut_formula(v, n, k, l, k3);
                    CHECK(g == w_hom({n, s.e, s.f, k3.at(s.A), k3.at(s.B), k3.at(s.C), k3.at(s.D)}));
                    CHECK(euler(g) == taut_formula_euler(v, n, k, l, chis));
                }
            }
        }
    }
}

TEST_CASE("flags") {
    CHECK(taut_flags(TautVariant::Extwedgewedge, 2, 1, 1).empty());
    const auto k0 = taut_flags(TautVariant::cohwedge, 2, 0, 0);
    CHECK(std::find(k0.begin(), k0.end(), "k0_extension") != k0.end());
    const auto zero = taut_flags(TautVariant::ExtEwedge, 2, 2, 0);
    CHECK(std::find(zero.begin(), zero.end(), "zero_convention") != zero.end());
}

TEST_CASE("bichar") {
    CHECK(bichar_closed({1, 1, 1, 7, 2, 3, 4}) == 7);
    CHECK(bichar_closed({2, 1, 1, 2, 2, 2, 2}) == euler(oracle::oracle_w_hom({2, 1, 1, kK3O, kK3O, kK3O, kK3O})));
    CHECK(bichar_closed({2, 1, 1, 2, 2, 2, 2}) == 8);
    CHECK(bichar_closed({2, 0, 0, 5, -1, 3, 2}) == s_scalar(2, 2));

    const ChiQuadruple k3{2, 2, 2, 2};
    const auto series = bichar_series(k3, 3);
    const auto product = bichar_product(k3, 3);
    CHECK(series.constant_term() == 1);
    CHECK(series.coeff(bichar_exponents(1, 0, 0)) == product.coeff(bichar_exponents(1, 0, 0)));
    CHECK(series.coeff(bichar_exponents(1, 0, 0)) == 2);
    CHECK(series.coeff(bichar_exponents(2, 1, 1)) == 8);
    CHECK(product.coeff(bichar_exponents(2, 1, 1)) == 8);

    const auto geometric = bichar_product({0, 0, 0, 1}, 5);
    for (int n = 0; n <= 5; ++n) CHECK(geometric.coeff({n, 0, 0, 0}) == 1);
    for (long chi = -3; chi <= 3; ++chi) {
        const auto p = bichar_product({0, 0, Int(chi), 0}, 4);
        for (int k = 0; k <= 4; ++k) {
            const Int expected = (k % 2 == 0 ? 1 : -1) * lambda_scalar(k, Int(chi));
            CHECK(p.coeff({k, k, 0, 0}) == Rational(expected));
        }
    }
}

TEST_CASE("tensor Euler characteristics") {
    const std::vector<Int> triv{2, 2, 2, 2, 2};
    for (int n = 1; n <= 4; ++n) CHECK(tensor_euler_closed(n, 0, triv, 2, 2) == triv[0] * s_scalar(n - 1, 2));

    CHECK(tensor_euler_closed(2, 1, triv, 2, 2) == 6);
    const auto terms = tensor_euler_terms(2, 1, triv, 2, 2);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].contributions == std::vector<Int>{4, 4});
    CHECK(terms[1].contributions == std::vector<Int>{2});
    CHECK(alternating_sum(terms) == 6);

    const auto series = tensor_euler_series([&](int p) { return triv.at(p); }, 2, 2, 4, 4);
    CHECK(series.coeff({2, 1, 0, 0}) == 6);
    CHECK(series.coeff({0, 0, 0, 0}) == 0);
    for (int n = 1; n <= 4; ++n) CHECK(series.coeff({n, 0, 0, 0}) == Rational(triv[0] * s_scalar(n - 1, 2)));

    CHECK_THROWS_AS(tensor_euler_closed(3, 2, std::vector<Int>{1, 2}, 1, 1), InputError);
    CHECK_THROWS_AS(tensor_euler_closed(1, 2, triv, 1, 1), InputError);
}

TEST_CASE("curves and the rank-3 example") {
    CHECK(curve_bichar(1, 5, 2, 3, 1) == 5);
    CHECK(curve_bichar(2, 1, 1, 1, 1) == 1);
    CHECK(taut_formula_euler(TautVariant::ExtEF, 2, 1, 1, all_chis(1)) == 2);
    for (int g = 0; g <= 2; ++g) {
        const Int chi_EF = 4, chi_Edual = -3, chi_F = 7;
        CHECK(curve_bichar(2, chi_EF, chi_Edual, chi_F, 1 - g) == -g * chi_EF + chi_Edual * chi_F);
    }
    CHECK_THROWS_AS(curve_bichar(0, 1, 1, 1, 1), InputError);

    const auto k3 = rank3_check(2, -20);
    CHECK(k3.value == lambda_scalar(2, 2) - (-20));
    CHECK(k3.value == 21);
    CHECK(k3.naive_value == 1);
    const auto degenerate = rank3_check(5, 0);
    CHECK(degenerate.value == degenerate.naive_value);
    CHECK(rank3_check(1, -10).value == 10);
    CHECK(rank3_check(1, -10).naive_value == 0);
}
