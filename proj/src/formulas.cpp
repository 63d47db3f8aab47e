#include "taut/formulas.hpp"

#include <algorithm>
#include <array>

namespace taut {

GradedDim w_hom(const WHomInput& in) {
    const int lo = std::max(0, in.e + in.f - in.n);
    const int hi = std::min(in.e, in.f);
    GradedDim out;
    for (int i = lo; i <= hi; ++i) {
        GradedDim term = tensor(sym_power(i, in.A), wedge_power(in.e - i, in.B));
        term = tensor(term, wedge_power(in.f - i, in.C));
        term = tensor(term, sym_power(in.n + i - in.e - in.f, in.D));
        out = direct_sum(out, term);
    }
    return out;
}

Int w_hom_euler(int n, int e, int f, const Int& chi_A, const Int& chi_B, const Int& chi_C,
                const Int& chi_D) {
    Int sum = 0;
    for (int i = std::max(0, e + f - n); i <= std::min(e, f); ++i) {
        sum += s_scalar(i, chi_A) * lambda_scalar(e - i, chi_B) * lambda_scalar(f - i, chi_C) *
               s_scalar(n + i - e - f, chi_D);
    }
    return sum;
}

namespace {

struct VariantInfo {
    TautVariant variant;
    std::string_view name;
    bool uses_k;
    bool uses_l;
};

constexpr std::array<VariantInfo, 7> kVariantInfo = {{
    {TautVariant::cohF, "cohF", false, false},
    {TautVariant::cohEvee, "cohEvee", false, false},
    {TautVariant::ExtEF, "ExtEF", false, false},
    {TautVariant::cohwedge, "cohwedge", true, false},
    {TautVariant::ExtEwedge, "ExtEwedge", true, false},
    {TautVariant::ExtwedgeF, "ExtwedgeF", true, false},
    {TautVariant::Extwedgewedge, "Extwedgewedge", true, true},
}};

const VariantInfo& info(TautVariant v) {
    for (const auto& i : kVariantInfo) {
        if (i.variant == v) return i;
    }
    throw InputError("unknown formula variant");
}

void check_index(const char* what, int idx, int n) {
    if (idx < 0 || idx > n) {
        throw InputError(std::string(what) + " = " + std::to_string(idx) + " outside [0, n = " +
                         std::to_string(n) + "]");
    }
}

} // namespace

std::string_view variant_name(TautVariant v) { return info(v).name; }

std::optional<TautVariant> parse_variant(std::string_view name) {
    for (const auto& i : kVariantInfo) {
        if (i.name == name) return i.variant;
    }
    return std::nullopt;
}

bool variant_uses_k(TautVariant v) { return info(v).uses_k; }
bool variant_uses_l(TautVariant v) { return info(v).uses_l; }

Substitution substitution(TautVariant v, int n, int k, int l) {
    if (n < 1) throw InputError("n must be at least 1");
    if (variant_uses_k(v)) check_index("k", k, n);
    if (variant_uses_l(v)) check_index("l", l, n);
    switch (v) {
    case TautVariant::cohF: // E = O, e = 0, f = 1
        return {0, 1, "F", "O", "F", "O"};
    case TautVariant::cohEvee: // F = O, e = 1, f = 0
        return {1, 0, "Evee", "Evee", "O", "O"};
    case TautVariant::ExtEF:
        return {1, 1, "Hom(E,F)", "Evee", "F", "O"};
    case TautVariant::cohwedge: // E = O, F = L, e = 0, f = k
        return {0, k, "L", "O", "L", "O"};
    case TautVariant::ExtEwedge: // F = L, e = 1, f = k
        return {1, k, "Hom(E,L)", "Evee", "L", "O"};
    case TautVariant::ExtwedgeF: // E = L, e = k, f = 1
        return {k, 1, "Hom(L,F)", "Lvee", "F", "O"};
    case TautVariant::Extwedgewedge: // E = K, F = L, e = k, f = l
        return {k, l, "Hom(K,L)", "Kvee", "L", "O"};
    }
    throw InputError("unknown formula variant");
}

std::vector<std::string> required_tables(TautVariant v, int n, int k, int l) {
    const Substitution s = substitution(v, n, k, l);
    std::vector<std::string> out;
    for (const auto* name : {&s.A, &s.B, &s.C, &s.D}) {
        if (std::find(out.begin(), out.end(), *name) == out.end()) out.push_back(*name);
    }
    return out;
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& key, TautVariant v) {
    auto it = m.find(key);
    if (it == m.end()) {
        throw InputError(std::string(variant_name(v)) + ": missing input table \"" + key + "\"");
    }
    return it->second;
}

} // namespace

GradedDim taut_formula(TautVariant v, int n, int k, int l, const TableSet& tables) {
    const Substitution s = substitution(v, n, k, l);
    WHomInput in{n, s.e, s.f, lookup(tables, s.A, v), lookup(tables, s.B, v), lookup(tables, s.C, v),
                 lookup(tables, s.D, v)};
    return w_hom(in);
}

Int taut_formula_euler(TautVariant v, int n, int k, int l, const ChiSet& chis) {
    const Substitution s = substitution(v, n, k, l);
    return w_hom_euler(n, s.e, s.f, lookup(chis, s.A, v), lookup(chis, s.B, v), lookup(chis, s.C, v),
                       lookup(chis, s.D, v));
}

std::vector<std::string> taut_flags(TautVariant v, int n, int k, int l) {
    const Substitution s = substitution(v, n, k, l);
    std::vector<std::string> flags;
    const bool two_summands = v == TautVariant::ExtEF || v == TautVariant::ExtEwedge || v == TautVariant::ExtwedgeF;
    // The two-summand displays contain S^{n-e-f}H*(O); at e+f > n that index is negative.
    if (two_summands && s.e + s.f > n) flags.emplace_back("zero_convention");
    if ((variant_uses_k(v) && k == 0) || (variant_uses_l(v) && l == 0)) flags.emplace_back("k0_extension");
    return flags;
}

// ---------------------------------------------------------------------------
// Euler bicharacteristic

Int bichar_closed(const BicharInput& in) {
    Int sum = 0;
    for (int i = std::max(0, in.k + in.l - in.n); i <= std::min(in.k, in.l); ++i) {
        sum += s_scalar(i, in.chi_KL) * lambda_scalar(in.k - i, in.chi_Kdual) * lambda_scalar(in.l - i, in.chi_L) *
               s_scalar(in.n + i - in.k - in.l, in.chi_O);
    }
    return sum;
}

Exponents bichar_exponents(int n, int k, int l) { return {n, l, k, 0}; }

namespace {

Orders bichar_orders(int n_max) {
    if (n_max < 0) throw InputError("n_max must be non-negative");
    return make_orders(n_max + 1, n_max + 1, n_max + 1);
}

} // namespace

TruncSeries bichar_series(const ChiQuadruple& chi, int n_max) {
    const Orders orders = bichar_orders(n_max);
    TruncSeries arg(orders);
    for (int r = 1; r <= n_max; ++r) {
        const Rational inv_r(1, r);
        arg += TruncSeries::monomial(Rational(chi.chi_KL) * inv_r, {r, r, r, 0}, orders);
        arg -= TruncSeries::monomial(Rational(chi.chi_Kdual) * inv_r, {r, 0, r, 0}, orders);
        arg -= TruncSeries::monomial(Rational(chi.chi_L) * inv_r, {r, r, 0, 0}, orders);
        arg += TruncSeries::monomial(Rational(chi.chi_O) * inv_r, {r, 0, 0, 0}, orders);
    }
    return exp(arg);
}

namespace {

// (1 - c * monomial)^power
TruncSeries one_minus_pow(const Exponents& exps, const Int& power, const Orders& orders) {
    TruncSeries base = TruncSeries::constant(1, orders) - TruncSeries::monomial(1, exps, orders);
    return int_pow(base, to_i64(power));
}

} // namespace

TruncSeries bichar_product(const ChiQuadruple& chi, int n_max) {
    const Orders orders = bichar_orders(n_max);
    TruncSeries out = one_minus_pow({1, 1, 1, 0}, -chi.chi_KL, orders);
    out = out * one_minus_pow({1, 0, 1, 0}, chi.chi_Kdual, orders);
    out = out * one_minus_pow({1, 1, 0, 0}, chi.chi_L, orders);
    out = out * one_minus_pow({1, 0, 0, 0}, -chi.chi_O, orders);
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products F^[n] ⊗ ∧^k L^[n]

namespace {

void check_tensor_args(int n, int k, std::span<const Int> chi_FLp) {
    if (k < 0 || k > n) {
        throw InputError("tensor Euler characteristic needs 0 <= k <= n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(n) + ")");
    }
    if (chi_FLp.size() < static_cast<std::size_t>(k) + 1) {
        throw InputError("need chi(F (x) L^p) for p = 0.." + std::to_string(k) + ", got " +
                         std::to_string(chi_FLp.size()) + " values");
    }
}

} // namespace

Int tensor_euler_closed(int n, int k, std::span<const Int> chi_FLp, const Int& chi_L, const Int& chi_O) {
    check_tensor_args(n, k, chi_FLp);
    Int first = 0;
    Int second = 0;
    for (int p = 0; p <= k; ++p) {
        Int term = chi_FLp[p] * lambda_scalar(k - p, chi_L);
        if (p % 2 == 1) term = -term;
        first += term;
        if (p >= 1) second += term;
    }
    return s_scalar(n - k - 1, chi_O) * first - s_scalar(n - k, chi_O) * second;
}

std::vector<TensorTerm> tensor_euler_terms(int n, int k, std::span<const Int> chi_FLp, const Int& chi_L,
                                           const Int& chi_O) {
    check_tensor_args(n, k, chi_FLp);
    const Int s_outer = s_scalar(n - k, chi_O);
    const Int s_inner = s_scalar(n - k - 1, chi_O);
    std::vector<TensorTerm> out;
    // Degrees 0..k-1 have two summands, degree k has one. For k = 0 only the last
    // case occurs.
    for (int p = 0; p < k; ++p) {
        out.push_back({p,
                       {chi_FLp[p + 1] * lambda_scalar(k - p - 1, chi_L) * s_outer,
                        chi_FLp[p] * lambda_scalar(k - p, chi_L) * s_inner}});
    }
    out.push_back({k, {chi_FLp[k] * s_inner}});
    return out;
}

Int alternating_sum(const std::vector<TensorTerm>& terms) {
    Int sum = 0;
    for (const auto& t : terms) {
        for (const auto& c : t.contributions) {
            if (t.p % 2 == 0) sum += c;
            else sum -= c;
        }
    }
    return sum;
}

TruncSeries tensor_euler_series(const std::function<Int(int)>& chi_FLp, const Int& chi_L, const Int& chi_O,
                                int n_max, int k_max) {
    if (n_max < 0 || k_max < 0) throw InputError("n_max and k_max must be non-negative");
    const Orders orders = make_orders(n_max + 1, k_max + 1);
    TruncSeries prefactor =
        int_pow(TruncSeries::constant(1, orders) + TruncSeries::monomial(1, {1, 1, 0, 0}, orders), to_i64(chi_L));
    prefactor = prefactor * int_pow(TruncSeries::constant(1, orders) - TruncSeries::monomial(1, {1, 0, 0, 0}, orders),
                                    to_i64(-chi_O));

    TruncSeries tail(orders);
    for (int p = 1; p <= n_max; ++p) {
        const Rational sign = (p % 2 == 1) ? 1 : -1;
        tail += TruncSeries::monomial(sign * Rational(chi_FLp(p - 1)), {p, p - 1, 0, 0}, orders);
        tail += TruncSeries::monomial(sign * Rational(chi_FLp(p)), {p, p, 0, 0}, orders);
    }
    return prefactor * tail;
}

// ---------------------------------------------------------------------------
// Curves and the rank-3 example

Int curve_bichar(int n, const Int& chi_EF, const Int& chi_Edual, const Int& chi_F, const Int& chi_OC) {
    if (n < 1) throw InputError("curve_bichar needs n >= 1");
    auto alternating = [&](int top) {
        Int s = 0;
        for (int p = 0; p <= top; ++p) {
            if (p % 2 == 0) s += lambda_scalar(top - p, chi_OC);
            else s -= lambda_scalar(top - p, chi_OC);
        }
        return s;
    };
    return chi_EF * alternating(n - 1) + chi_Edual * chi_F * alternating(n - 2);
}

Rank3Result rank3_check(const Int& chi_O, const Int& chi_Omega) {
    const Int lambda2 = lambda_scalar(2, chi_O);
    return {lambda2 - chi_Omega, lambda2};
}

} // namespace taut
