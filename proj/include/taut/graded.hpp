#pragma once

// Finite graded vector spaces, represented by their Poincaré polynomials.
//
// A GradedDim stores dim V^d for finitely many integer degrees d. Symmetric and
// exterior powers are taken in the super sense: odd-degree elements
// anticommute in S^k and commute in the exterior power.

#include "taut/numeric.hpp"

#include <json.hpp>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace taut {

// Laurent polynomial in t with signed integer coefficients. Zero coefficients are
// never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const int, long>> terms);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly one() { return LaurentPoly{{0, 1}}; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int degree) const;

    void add_term(int degree, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

class GradedDim {
public:
    using Dims = std::map<int, Int>;

    GradedDim() = default;
    GradedDim(std::initializer_list<std::pair<const int, long>> dims);
    // Throws InputError on a negative dimension; zero entries are dropped.
    explicit GradedDim(const Dims& dims);
    // Throws ConsistencyError when p has a negative coefficient.
    static GradedDim from_poly(const LaurentPoly& p);

    static GradedDim unit() { return GradedDim{{0, 1}}; }

    const Dims& dims() const { return dims_; }
    bool is_zero() const { return dims_.empty(); }
    Int dim(int degree) const;
    Int total_dim() const;
    int min_degree() const;
    int max_degree() const;

    LaurentPoly poincare() const;

    friend bool operator==(const GradedDim&, const GradedDim&) = default;

    // "d0:1;d2:1" form used in CSV cells; empty string for the zero space.
    std::string to_compact() const;
    std::string to_string() const;

private:
    Dims dims_;
};

Int euler(const GradedDim& v);

// λ^k χ = χ(χ-1)...(χ-k+1)/k!, zero for k < 0.
Int lambda_scalar(int k, const Int& chi);
// s^k χ = χ(χ+1)...(χ+k-1)/k!, zero for k < 0.
Int s_scalar(int k, const Int& chi);

GradedDim direct_sum(const GradedDim& v, const GradedDim& w);
GradedDim tensor(const GradedDim& v, const GradedDim& w);
GradedDim dual(const GradedDim& v);
GradedDim sym_power(int k, const GradedDim& v);
GradedDim wedge_power(int k, const GradedDim& v);

nlohmann::json to_json(const GradedDim& v);
// Accepts {"0": 1, "2": 1}; dimensions may be integers or decimal strings.
GradedDim graded_from_json(const nlohmann::json& j);

} // namespace taut
