#include "taut/formulas.hpp"
#include "taut/series.hpp"

#include <doctest.h>

using namespace taut;

namespace {

TruncSeries q_poly(std::initializer_list<long> coeffs, const Orders& orders) {
    TruncSeries s(orders);
    int i = 0;
    for (long c : coeffs) s += TruncSeries::monomial(c, {i++, 0, 0, 0}, orders);
    return s;
}

TruncSeries harmonic(const Orders& orders, const Rational& scale = 1) {
    TruncSeries s(orders);
    for (int r = 1; r < orders[0]; ++r) s += TruncSeries::monomial(scale * Rational(1, r), {r, 0, 0, 0}, orders);
    return s;
}

} // namespace

TEST_CASE("arithmetic") {
    const Orders o = make_orders(4);
    CHECK(q_poly({1, 1}, o) * q_poly({1, -1}, o) == q_poly({1, 0, -1}, o));
    CHECK(arith(q_poly({1, 1}, o), q_poly({1, -1}, o), ArithOp::mul) == q_poly({1, 0, -1}, o));
    CHECK(arith(q_poly({1, 1, 1, 1}, o), TruncSeries::constant(1, o), ArithOp::sub) == q_poly({0, 1, 1, 1}, o));

    const Orders uv = make_orders(3, 2, 2);
    const auto one = TruncSeries::constant(1, uv);
    const auto uq = TruncSeries::monomial(1, {1, 1, 0, 0}, uv);
    const auto vq = TruncSeries::monomial(1, {1, 0, 1, 0}, uv);
    const auto uvq2 = TruncSeries::monomial(1, {2, 1, 1, 0}, uv);
    CHECK((one + uq) * (one + vq) == one + uq + vq + uvq2);

    CHECK_THROWS_AS(q_poly({1}, make_orders(3)) + q_poly({1}, make_orders(4)), InputError);
    CHECK(TruncSeries::monomial(1, {5, 0, 0, 0}, o).is_zero());
}

TEST_CASE("integer powers") {
    const Orders o = make_orders(5);
    CHECK(int_pow(q_poly({1, -1}, o), -2) == q_poly({1, 2, 3, 4, 5}, o));
    CHECK(int_pow(q_poly({1, 1}, o), 3) == q_poly({1, 3, 3, 1}, o));
    const Orders uq = make_orders(4, 2);
    CHECK(int_pow(TruncSeries::constant(1, uq) + TruncSeries::monomial(1, {1, 1, 0, 0}, uq), 0) ==
          TruncSeries::constant(1, uq));
    CHECK_THROWS_AS(int_pow(q_poly({0, 1}, o), -1), InputError);

    PowNotes notes;
    const auto inv = int_pow(q_poly({2, 1}, o), -1, &notes);
    CHECK(notes.rational_inverse);
    CHECK(inv * q_poly({2, 1}, o) == TruncSeries::constant(1, o));
}

TEST_CASE("exp and log") {
    const Orders o = make_orders(7);
    const auto geometric = q_poly({1, 1, 1, 1, 1, 1, 1}, o);
    CHECK(exp(harmonic(o)) == geometric);
    CHECK(exp(TruncSeries(o)) == TruncSeries::constant(1, o));
    CHECK(exp(harmonic(o, 2)) == int_pow(q_poly({1, -1}, o), -2));
    CHECK(log(int_pow(q_poly({1, -1}, o), -1)) == harmonic(o));
    CHECK(log(TruncSeries::constant(1, o)).is_zero());

    const Orders uq = make_orders(5, 3);
    const auto a = TruncSeries::monomial(1, {1, 0, 0, 0}, uq) + TruncSeries::monomial(1, {2, 1, 0, 0}, uq);
    CHECK(log(exp(a)) == a);

    CHECK_THROWS_AS(exp(TruncSeries::constant(1, o)), InputError);
    CHECK_THROWS_AS(log(TruncSeries::constant(2, o)), InputError);
}

TEST_CASE("coefficient extraction") {
    const Orders o = make_orders(5);
    CHECK(extract_coeff(int_pow(q_poly({1, -1}, o), -2), {2, 0, 0, 0}) == s_scalar(2, 2));
    const Orders uq = make_orders(3, 3);
    CHECK(extract_coeff(TruncSeries::constant(1, uq) + TruncSeries::monomial(1, {1, 1, 0, 0}, uq), {1, 1, 0, 0}) == 1);
    CHECK_THROWS_AS(extract_coeff(q_poly({1}, o), {5, 0, 0, 0}), InputError);

    const ChiQuadruple chi{2, 2, 2, 2};
    const auto s = bichar_series(chi, 3);
    CHECK(extract_coeff(s, bichar_exponents(2, 1, 1)) == Rational(bichar_closed({2, 1, 1, 2, 2, 2, 2})));
    CHECK(extract_coeff(s, bichar_exponents(2, 1, 1)) == 8);
}

TEST_CASE("rendering") {
    const Orders o = make_orders(3, 2);
    const auto s = TruncSeries::constant(1, o) + TruncSeries::monomial(Rational(1, 2), {2, 1, 0, 0}, o);
    CHECK(s.terms().size() == 2);
    CHECK_FALSE(s.is_integral());
    CHECK(s.to_string() == "1 * 1\n1/2 * Q^2 u^1\n");
    const auto j = to_json(s);
    CHECK(j["orders"]["Q"] == 3);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["coeff"] == "1/2");
}
