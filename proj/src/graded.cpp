#include "taut/graded.hpp"

#include <limits>
#include <sstream>
#include <vector>

namespace taut {

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) {
        throw InputError("integer " + x.get_str() + " does not fit in 64 bits");
    }
    return x.get_si();
}

Int factorial(unsigned k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, long>> terms) {
    for (const auto& [d, c] : terms) add_term(d, Int(c));
}

LaurentPoly::LaurentPoly(Terms terms) {
    for (auto& [d, c] : terms) add_term(d, c);
}

Int LaurentPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int degree, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [d, c] : rhs.terms_) add_term(d, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int mag = abs(c);
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "t^" << d;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GradedDim

GradedDim::GradedDim(std::initializer_list<std::pair<const int, long>> dims) {
    for (const auto& [d, c] : dims) {
        if (c < 0) throw InputError("negative dimension in degree " + std::to_string(d));
        if (c != 0) dims_[d] += c;
    }
}

GradedDim::GradedDim(const Dims& dims) {
    for (const auto& [d, c] : dims) {
        if (c < 0) throw InputError("negative dimension in degree " + std::to_string(d));
        if (c != 0) dims_[d] = c;
    }
}

GradedDim GradedDim::from_poly(const LaurentPoly& p) {
    GradedDim out;
    for (const auto& [d, c] : p.terms()) {
        if (c < 0) {
            throw ConsistencyError("negative coefficient " + c.get_str() + " in degree " +
                                   std::to_string(d) + " of " + p.to_string());
        }
        out.dims_[d] = c;
    }
    return out;
}

Int GradedDim::dim(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? Int(0) : it->second;
}

Int GradedDim::total_dim() const {
    Int s = 0;
    for (const auto& [d, c] : dims_) s += c;
    return s;
}

int GradedDim::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int GradedDim::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

LaurentPoly GradedDim::poincare() const { return LaurentPoly(dims_); }

std::string GradedDim::to_compact() const {
    std::string out;
    for (const auto& [d, c] : dims_) {
        if (!out.empty()) out += ';';
        out += 'd' + std::to_string(d) + ':' + c.get_str();
    }
    return out;
}

std::string GradedDim::to_string() const {
    std::string out = "{";
    for (const auto& [d, c] : dims_) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(d) + ":" + c.get_str();
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Scalars

Int euler(const GradedDim& v) {
    Int s = 0;
    for (const auto& [d, c] : v.dims()) {
        if (d % 2 == 0) s += c;
        else s -= c;
    }
    return s;
}

Int lambda_scalar(int k, const Int& chi) {
    if (k < 0) return 0;
    Int num = 1;
    for (int j = 0; j < k; ++j) num *= chi - j;
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return out;
}

Int s_scalar(int k, const Int& chi) {
    if (k < 0) return 0;
    Int num = 1;
    for (int j = 0; j < k; ++j) num *= chi + j;
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), factorial(k).get_mpz_t());
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra of graded dimensions

GradedDim direct_sum(const GradedDim& v, const GradedDim& w) {
    GradedDim::Dims out = v.dims();
    for (const auto& [d, c] : w.dims()) out[d] += c;
    return GradedDim(out);
}

GradedDim tensor(const GradedDim& v, const GradedDim& w) {
    return GradedDim::from_poly(v.poincare() * w.poincare());
}

GradedDim dual(const GradedDim& v) {
    GradedDim::Dims out;
    for (const auto& [d, c] : v.dims()) out[-d] = c;
    return GradedDim(out);
}

namespace {

// Coefficients of a power series in z, truncated at z^k, whose coefficients are
// polynomials in t.
using ZSeries = std::vector<LaurentPoly>;

ZSeries z_mul(const ZSeries& a, const ZSeries& b, int k) {
    ZSeries out(k + 1);
    for (int i = 0; i <= k; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= k; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// One generator factor: (1 + z t^d)^m when `exterior`, else (1 - z t^d)^(-m).
ZSeries generator_factor(int degree, const Int& mult, bool exterior, int k) {
    ZSeries f(k + 1);
    for (int j = 0; j <= k; ++j) {
        Int c = exterior ? lambda_scalar(j, mult) : s_scalar(j, mult);
        if (c == 0) continue;
        f[j].add_term(j * degree, c);
    }
    return f;
}

GradedDim super_power(int k, const GradedDim& v, bool wedge) {
    if (k < 0) return {};
    if (k == 0) return GradedDim::unit();
    ZSeries acc(k + 1);
    acc[0] = LaurentPoly::one();
    for (const auto& [d, m] : v.dims()) {
        bool odd = (d % 2 != 0);
        // Even generators behave classically; odd ones swap the roles of S and ∧.
        bool exterior = wedge ? !odd : odd;
        acc = z_mul(acc, generator_factor(d, m, exterior, k), k);
    }
    return GradedDim::from_poly(acc[k]);
}

} // namespace

GradedDim sym_power(int k, const GradedDim& v) { return super_power(k, v, false); }

GradedDim wedge_power(int k, const GradedDim& v) { return super_power(k, v, true); }

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const GradedDim& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [d, c] : v.dims()) {
        if (c.fits_slong_p()) j[std::to_string(d)] = c.get_si();
        else j[std::to_string(d)] = c.get_str();
    }
    return j;
}

GradedDim graded_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("graded dimension must be a JSON object");
    GradedDim::Dims dims;
    for (const auto& [key, val] : j.items()) {
        int degree = 0;
        try {
            std::size_t pos = 0;
            degree = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InputError("invalid degree key \"" + key + "\"");
        }
        Int c;
        if (val.is_number_integer()) {
            c = Int(std::to_string(val.get<long long>()));
        } else if (val.is_string()) {
            if (c.set_str(val.get<std::string>(), 10) != 0) {
                throw InputError("invalid dimension for degree " + key);
            }
        } else {
            throw InputError("dimension for degree " + key + " must be an integer");
        }
        if (c < 0) throw InputError("negative dimension for degree " + key);
        dims[degree] += c;
    }
    return GradedDim(dims);
}

} // namespace taut
