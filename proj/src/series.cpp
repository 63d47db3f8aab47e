#include "taut/series.hpp"

#include <sstream>

namespace taut {

Orders make_orders(int q, int u, int v, int t) { return {q, u, v, t}; }

TruncSeries::TruncSeries(const Orders& orders) : orders_(orders) {
    std::size_t size = 1;
    for (int o : orders_) {
        if (o < 1) throw InputError("truncation orders must be >= 1");
        size *= static_cast<std::size_t>(o);
    }
    coeffs_.assign(size, Rational(0));
}

TruncSeries TruncSeries::constant(const Rational& c, const Orders& orders) {
    TruncSeries s(orders);
    s.coeffs_.front() = c;
    return s;
}

TruncSeries TruncSeries::monomial(const Rational& c, const Exponents& exps, const Orders& orders) {
    TruncSeries s(orders);
    if (s.in_range(exps)) s.coeffs_[s.index(exps)] = c;
    return s;
}

bool TruncSeries::in_range(const Exponents& exps) const {
    for (int i = 0; i < kNumVars; ++i) {
        if (exps[i] < 0 || exps[i] >= orders_[i]) return false;
    }
    return true;
}

std::size_t TruncSeries::index(const Exponents& exps) const {
    std::size_t idx = 0;
    for (int i = 0; i < kNumVars; ++i) idx = idx * orders_[i] + exps[i];
    return idx;
}

Exponents TruncSeries::exponents(std::size_t idx) const {
    Exponents e{};
    for (int i = kNumVars - 1; i >= 0; --i) {
        e[i] = static_cast<int>(idx % orders_[i]);
        idx /= orders_[i];
    }
    return e;
}

Rational TruncSeries::coeff(const Exponents& exps) const {
    if (!in_range(exps)) {
        std::ostringstream os;
        os << "coefficient of";
        for (int i = 0; i < kNumVars; ++i) os << ' ' << kVarNames[i] << '^' << exps[i];
        os << " is at or above the truncation order";
        throw InputError(os.str());
    }
    return coeffs_[index(exps)];
}

void TruncSeries::set_coeff(const Exponents& exps, const Rational& c) {
    if (!in_range(exps)) throw InputError("set_coeff: exponent outside truncation orders");
    coeffs_[index(exps)] = c;
}

std::vector<TruncSeries::Term> TruncSeries::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) out.emplace_back(exponents(i), coeffs_[i]);
    }
    return out;
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool TruncSeries::is_integral() const {
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

void TruncSeries::require_same_orders(const TruncSeries& rhs, const char* op) const {
    if (orders_ == rhs.orders_) return;
    std::ostringstream os;
    os << "series " << op << ": truncation orders differ (";
    for (int i = 0; i < kNumVars; ++i) os << (i ? "," : "") << kVarNames[i] << ':' << orders_[i];
    os << " vs ";
    for (int i = 0; i < kNumVars; ++i) os << (i ? "," : "") << kVarNames[i] << ':' << rhs.orders_[i];
    os << ')';
    throw InputError(os.str());
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    require_same_orders(rhs, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    require_same_orders(rhs, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_orders(b, "mul");
    struct Entry {
        std::size_t idx;
        Exponents exps;
    };
    auto nonzero = [](const TruncSeries& s) {
        std::vector<Entry> out;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            if (s.coeffs_[i] != 0) out.push_back({i, s.exponents(i)});
        }
        return out;
    };
    const auto na = nonzero(a);
    const auto nb = nonzero(b);

    TruncSeries out(a.orders_);
    Rational prod;
    for (const auto& x : na) {
        for (const auto& y : nb) {
            bool fits = true;
            for (int i = 0; i < kNumVars && fits; ++i) fits = x.exps[i] + y.exps[i] < a.orders_[i];
            if (!fits) continue;
            // The mixed-radix index is additive as long as no digit overflows.
            mpq_mul(prod.get_mpq_t(), a.coeffs_[x.idx].get_mpq_t(), b.coeffs_[y.idx].get_mpq_t());
            auto& dst = out.coeffs_[x.idx + y.idx];
            mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), prod.get_mpq_t());
        }
    }
    return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.orders_ == b.orders_ && a.coeffs_ == b.coeffs_;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    for (const auto& [exps, c] : terms()) {
        os << c.get_str() << " *";
        bool any = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (exps[i] == 0) continue;
            os << ' ' << kVarNames[i] << '^' << exps[i];
            any = true;
        }
        if (!any) os << " 1";
        os << '\n';
    }
    return os.str();
}

TruncSeries arith(const TruncSeries& a, const TruncSeries& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    }
    throw InputError("unknown series operation");
}

namespace {

// Upper bound on the number of factors of a zero-constant series that can
// survive truncation.
int nilpotency_bound(const Orders& orders) {
    int bound = 1;
    for (int o : orders) bound += o - 1;
    return bound;
}

} // namespace

TruncSeries inverse(const TruncSeries& a, PowNotes* notes) {
    const Rational c0 = a.constant_term();
    if (c0 == 0) throw InputError("series with zero constant term is not invertible");
    if (notes && c0 != 1 && c0 != -1) notes->rational_inverse = true;

    // a = c0 (1 + r) with r nilpotent, so 1/a = (1/c0) * sum_m (-r)^m.
    const Rational inv_c0 = 1 / c0;
    TruncSeries minus_r = a * Rational(-inv_c0);
    minus_r.set_coeff({0, 0, 0, 0}, 0);

    TruncSeries sum = TruncSeries::constant(1, a.orders());
    TruncSeries power = sum;
    const int bound = nilpotency_bound(a.orders());
    for (int m = 1; m <= bound; ++m) {
        power = power * minus_r;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * inv_c0;
}

TruncSeries int_pow(const TruncSeries& a, long e, PowNotes* notes) {
    TruncSeries base = e < 0 ? inverse(a, notes) : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncSeries result = TruncSeries::constant(1, a.orders());
    while (n > 0) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

TruncSeries exp(const TruncSeries& a) {
    if (a.constant_term() != 0) throw InputError("exp requires a zero constant term");
    TruncSeries sum = TruncSeries::constant(1, a.orders());
    TruncSeries term = sum;
    const int bound = nilpotency_bound(a.orders());
    for (int m = 1; m <= bound; ++m) {
        term = term * a;
        term *= Rational(1, m);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

TruncSeries log(const TruncSeries& a) {
    if (a.constant_term() != 1) throw InputError("log requires constant term 1");
    TruncSeries x = a;
    x.set_coeff({0, 0, 0, 0}, 0);
    TruncSeries sum(a.orders());
    TruncSeries power = TruncSeries::constant(1, a.orders());
    const int bound = nilpotency_bound(a.orders());
    for (int m = 1; m <= bound; ++m) {
        power = power * x;
        if (power.is_zero()) break;
        TruncSeries term = power * Rational(m % 2 == 1 ? 1 : -1, m);
        sum += term;
    }
    return sum;
}

Rational extract_coeff(const TruncSeries& a, const Exponents& exps) { return a.coeff(exps); }

nlohmann::json to_json(const TruncSeries& s) {
    nlohmann::json orders = nlohmann::json::object();
    for (int i = 0; i < kNumVars; ++i) orders[kVarNames[i]] = s.orders()[i];
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, c] : s.terms()) {
        terms.push_back({{"exponents", exps}, {"coeff", c.get_str()}});
    }
    return {{"variables", kVarNames}, {"orders", orders}, {"terms", terms}};
}

} // namespace taut
