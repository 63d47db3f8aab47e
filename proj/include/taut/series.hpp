#pragma once

// Truncated formal power series over Q in the fixed variables Q, u, v, t.
//
// Each variable carries its own truncation order: a monomial Q^a u^b v^c t^d is
// representable iff a < order(Q), b < order(u), c < order(v), d < order(t).
// Variables that are not in use have order 1. Binary operations require equal
// orders and never change them.

#include "taut/numeric.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace taut {

enum class Var : int { Q = 0, u = 1, v = 2, t = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"Q", "u", "v", "t"};

using Exponents = std::array<int, kNumVars>;
using Orders = std::array<int, kNumVars>;

// Convenience: orders {q, u, v, t}, with unused variables at 1.
Orders make_orders(int q, int u = 1, int v = 1, int t = 1);

class TruncSeries {
public:
    using Term = std::pair<Exponents, Rational>;

    // The zero series.
    explicit TruncSeries(const Orders& orders);

    static TruncSeries constant(const Rational& c, const Orders& orders);
    // c * monomial, or zero if the monomial is truncated away.
    static TruncSeries monomial(const Rational& c, const Exponents& exps, const Orders& orders);

    const Orders& orders() const { return orders_; }
    bool in_range(const Exponents& exps) const;

    // Throws InputError if exps is at or above a truncation order.
    Rational coeff(const Exponents& exps) const;
    Rational constant_term() const { return coeffs_.front(); }
    void set_coeff(const Exponents& exps, const Rational& c);

    // Nonzero terms in lexicographic exponent order (Q first).
    std::vector<Term> terms() const;
    bool is_zero() const;
    bool is_integral() const;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const Rational& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    // "c * Q^a u^b v^c" lines, one per nonzero term.
    std::string to_string() const;

private:
    std::size_t index(const Exponents& exps) const;
    Exponents exponents(std::size_t idx) const;
    void require_same_orders(const TruncSeries& rhs, const char* op) const;

    Orders orders_;
    // Dense storage in mixed radix, Q most significant.
    std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul };

TruncSeries arith(const TruncSeries& a, const TruncSeries& b, ArithOp op);

struct PowNotes {
    // Set when a negative power needed a constant term other than +-1.
    bool rational_inverse = false;
};

// a^e. Negative e inverts first; throws InputError when the constant term is 0.
TruncSeries int_pow(const TruncSeries& a, long e, PowNotes* notes = nullptr);
TruncSeries inverse(const TruncSeries& a, PowNotes* notes = nullptr);

// Requires a zero constant term.
TruncSeries exp(const TruncSeries& a);
// Requires constant term 1.
TruncSeries log(const TruncSeries& a);

Rational extract_coeff(const TruncSeries& a, const Exponents& exps);

nlohmann::json to_json(const TruncSeries& s);

} // namespace taut
