#pragma once

// Closed formulas for graded Hom-spaces and Euler characteristics of tautological
// bundles and their wedge powers on Hilbert schemes of points.
//
// Every cohomology/extension formula for tautological objects is obtained from
// w_hom by a substitution (see `substitution`); nothing is re-typed per variant.

#include "taut/graded.hpp"
#include "taut/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

// Graded Hom between the S_n-equivariant objects W^e(E) and W^f(F) on X^n.
//   A = Hom*(E, F), B = H*(E^∨), C = H*(F), D = H*(O_X).
struct WHomInput {
    int n = 0;
    int e = 0;
    int f = 0;
    GradedDim A, B, C, D;
};

// ⊕_{i=max(0,e+f-n)}^{min(e,f)} S^i A ⊗ ∧^{e-i} B ⊗ ∧^{f-i} C ⊗ S^{n+i-e-f} D.
GradedDim w_hom(const WHomInput& in);
// Euler characteristic of w_hom, computed from the four Euler numbers alone.
Int w_hom_euler(int n, int e, int f, const Int& chi_A, const Int& chi_B, const Int& chi_C,
                const Int& chi_D);

enum class TautVariant { cohF, cohEvee, ExtEF, cohwedge, ExtEwedge, ExtwedgeF, Extwedgewedge };

inline constexpr TautVariant kAllVariants[] = {
    TautVariant::cohF,      TautVariant::cohEvee,   TautVariant::ExtEF,        TautVariant::cohwedge,
    TautVariant::ExtEwedge, TautVariant::ExtwedgeF, TautVariant::Extwedgewedge};

std::string_view variant_name(TautVariant v);
std::optional<TautVariant> parse_variant(std::string_view name);
bool variant_uses_k(TautVariant v);
bool variant_uses_l(TautVariant v);

// Named inputs of the variants. Keys:
//   "O"         H*(O_X)
//   "F", "L", "K"                  H*(F), H*(L), H*(K)
//   "Evee", "Lvee", "Kvee"         H*(E^∨), H*(L^∨), H*(K^∨)
//   "Hom(E,F)", "Hom(E,L)", "Hom(L,F)", "Hom(K,L)"
using TableSet = std::map<std::string, GradedDim>;
using ChiSet = std::map<std::string, Int>;

// Which w_hom instance a variant is. Slot names index into a TableSet/ChiSet.
struct Substitution {
    int e = 0;
    int f = 0;
    std::string A, B, C, D;
};

// Throws InputError when (n, k, l) is outside 0 <= k, l <= n, n >= 1.
Substitution substitution(TautVariant v, int n, int k, int l);
std::vector<std::string> required_tables(TautVariant v, int n, int k, int l);

// Throws InputError naming the first missing table.
GradedDim taut_formula(TautVariant v, int n, int k, int l, const TableSet& tables);
Int taut_formula_euler(TautVariant v, int n, int k, int l, const ChiSet& chis);

// Conventions a cell relies on beyond the literal displayed formula: a vanishing
// S^{-1} term ("zero_convention") or an index k = 0 / l = 0 ("k0_extension").
std::vector<std::string> taut_flags(TautVariant v, int n, int k, int l);

struct BicharInput {
    int n = 0;
    int k = 0;
    int l = 0;
    Int chi_KL, chi_Kdual, chi_L, chi_O;
};

// χ(∧^k K^[n], ∧^l L^[n]) as the finite closed sum.
Int bichar_closed(const BicharInput& in);

struct ChiQuadruple {
    Int chi_KL, chi_Kdual, chi_L, chi_O;
};

// exp(Σ_r [χ(K,L)(vuQ)^r − χ(K^∨)(vQ)^r − χ(L)(uQ)^r + χ(O)Q^r] / r), orders n_max+1
// in Q, u, v. The coefficient of v^k u^l Q^n is (−1)^{k+l} χ(∧^k K^[n], ∧^l L^[n]).
TruncSeries bichar_series(const ChiQuadruple& chi, int n_max);
// (1−vuQ)^{−χ(K,L)} (1−vQ)^{χ(K^∨)} (1−uQ)^{χ(L)} (1−Q)^{−χ(O)}, same orders.
TruncSeries bichar_product(const ChiQuadruple& chi, int n_max);
// Exponent vector for v^k u^l Q^n.
Exponents bichar_exponents(int n, int k, int l);

// χ(F^[n] ⊗ ∧^k L^[n]); chi_FLp[p] = χ(F ⊗ L^p), at least k+1 entries.
Int tensor_euler_closed(int n, int k, std::span<const Int> chi_FLp, const Int& chi_L, const Int& chi_O);

// Euler numbers of the direct summands of the degree-p term of the complex
// computing F^[n] ⊗ ∧^k L^[n] (before differentials).
struct TensorTerm {
    int p = 0;
    std::vector<Int> contributions;
};

std::vector<TensorTerm> tensor_euler_terms(int n, int k, std::span<const Int> chi_FLp, const Int& chi_L,
                                           const Int& chi_O);
Int alternating_sum(const std::vector<TensorTerm>& terms);

// Σ_{n,k} χ(F^[n] ⊗ ∧^k L^[n]) u^k Q^n with orders Q: n_max+1, u: k_max+1.
// chi_FLp(p) must be defined for 0 <= p <= n_max.
TruncSeries tensor_euler_series(const std::function<Int(int)>& chi_FLp, const Int& chi_L, const Int& chi_O,
                                int n_max, int k_max);

// χ(E^[n], F^[n]) for E, F on a smooth curve C. Requires n >= 1.
Int curve_bichar(int n, const Int& chi_EF, const Int& chi_Edual, const Int& chi_F, const Int& chi_OC);

struct Rank3Result {
    Int value;        // χ(det F^[2]) for F = O^{⊕3}
    Int naive_value;  // λ²χ(det F), the line-bundle formula applied to F
};

Rank3Result rank3_check(const Int& chi_O, const Int& chi_Omega);

} // namespace taut
