#include "taut/geometry.hpp"

#include <fstream>
#include <sstream>

namespace taut {

LineBundleClass LineBundleClass::operator+(const LineBundleClass& rhs) const {
    if (vector.size() != rhs.vector.size()) throw InputError("line bundle classes of different length");
    LineBundleClass out = *this;
    for (std::size_t i = 0; i < vector.size(); ++i) out.vector[i] += rhs.vector[i];
    return out;
}

LineBundleClass LineBundleClass::operator-() const { return scaled(-1); }

LineBundleClass LineBundleClass::operator-(const LineBundleClass& rhs) const { return *this + (-rhs); }

LineBundleClass LineBundleClass::scaled(std::int64_t c) const {
    LineBundleClass out = *this;
    for (auto& x : out.vector) x *= c;
    return out;
}

Int SurfaceData::pairing(const LineBundleClass& a, const LineBundleClass& b) const {
    const auto r = static_cast<std::size_t>(picard_rank);
    if (a.vector.size() != r || b.vector.size() != r) {
        throw InputError("line bundle class length differs from picard_rank " + std::to_string(r));
    }
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            s += from_i64(a.vector[i]) * from_i64(gram[i][j]) *
                 from_i64(b.vector[j]);
        }
    }
    return s;
}

LineBundleClass SurfaceData::zero_class() const {
    return LineBundleClass{std::vector<std::int64_t>(static_cast<std::size_t>(picard_rank), 0)};
}

LineBundleClass SurfaceData::bundle(const std::string& name) const {
    auto it = bundles.find(name);
    if (it != bundles.end()) return it->second;
    if (name == "O") return zero_class();
    throw InputError("unknown surface bundle \"" + name + "\"");
}

std::optional<GradedDim> SurfaceData::table_for(const LineBundleClass& cls) const {
    for (const auto& [name, table] : cohomology) {
        if (bundle(name) == cls) return table;
    }
    return std::nullopt;
}

CurveBundle CurveData::bundle(const std::string& name) const {
    auto it = bundles.find(name);
    if (it != bundles.end()) return it->second;
    if (name == "O") return CurveBundle{1, 0};
    throw InputError("unknown curve bundle \"" + name + "\"");
}

Int rr_chi(const SurfaceData& s, const LineBundleClass& L) {
    const Int numerator = s.pairing(L, L) - s.pairing(L, s.canonical);
    if (numerator % 2 != 0) {
        throw InputError("non-integral Riemann-Roch; check gram/canonical");
    }
    return s.chi_O + numerator / 2;
}

Int chi_pair(const SurfaceData& s, const LineBundleClass& K, const LineBundleClass& L) {
    return rr_chi(s, L - K);
}

Int curve_chi(const CurveData& c, const CurveBundle& b) {
    return from_i64(b.degree) + Int(b.rank) * (1 - c.genus);
}

Int curve_chi_pair(const CurveData& c, const CurveBundle& E, const CurveBundle& F) {
    // E^∨ ⊗ F has rank rE·rF and degree rE·dF − rF·dE.
    CurveBundle hom{E.rank * F.rank, static_cast<std::int64_t>(E.rank) * F.degree -
                                         static_cast<std::int64_t>(F.rank) * E.degree};
    return curve_chi(c, hom);
}

Int curve_chi_dual(const CurveData& c, const CurveBundle& E) {
    return curve_chi(c, CurveBundle{E.rank, -E.degree});
}

std::vector<Int> chi_tensor_powers(const SurfaceData& s, const LineBundleClass& F,
                                   const LineBundleClass& L, int k) {
    if (k < 0) throw InputError("chi_tensor_powers: k must be non-negative");
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int p = 0; p <= k; ++p) out.push_back(rr_chi(s, F + L.scaled(p)));
    return out;
}

std::vector<Int> chi_tensor_powers(const std::vector<Int>& explicit_values, int k) {
    if (k < 0) throw InputError("chi_tensor_powers: k must be non-negative");
    if (explicit_values.size() < static_cast<std::size_t>(k) + 1) {
        throw InputError("chi_tensor_powers: need " + std::to_string(k + 1) +
                         " values of chi(F (x) L^p), got " + std::to_string(explicit_values.size()));
    }
    return {explicit_values.begin(), explicit_values.begin() + k + 1};
}

// ---------------------------------------------------------------------------
// JSON loading

namespace {

const nlohmann::json& require(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::int64_t as_int(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number_integer()) throw InputError(field + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_vector(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field + ": expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

GradedDim as_table(const nlohmann::json& j, const std::string& field) {
    try {
        return graded_from_json(j);
    } catch (const InputError& e) {
        throw InputError(field + ": " + e.what());
    }
}

void warn_degrees(const GradedDim& table, int dim, const std::string& field,
                  std::vector<std::string>& warnings) {
    if (table.is_zero()) return;
    if (table.min_degree() < 0 || table.max_degree() > dim) {
        warnings.push_back(field + ": cohomology outside degrees [0," + std::to_string(dim) + "]");
    }
}

SurfaceData parse_surface(const nlohmann::json& j, std::vector<std::string>& warnings) {
    const std::string where = "surface";
    SurfaceData s;
    s.chi_O = from_i64(as_int(require(j, "chi_O", where), "surface.chi_O"));
    const auto rank = as_int(require(j, "picard_rank", where), "surface.picard_rank");
    if (rank < 0) throw InputError("surface.picard_rank: must be non-negative");
    s.picard_rank = static_cast<int>(rank);

    const auto& gram = require(j, "gram", where);
    if (!gram.is_array() || gram.size() != static_cast<std::size_t>(rank)) {
        throw InputError("surface.gram: expected a " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
    }
    for (std::size_t i = 0; i < gram.size(); ++i) {
        auto row = as_int_vector(gram[i], "surface.gram[" + std::to_string(i) + "]");
        if (row.size() != static_cast<std::size_t>(rank)) {
            throw InputError("surface.gram[" + std::to_string(i) + "]: expected " + std::to_string(rank) + " entries");
        }
        s.gram.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < s.gram.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            if (s.gram[i][k] != s.gram[k][i]) throw InputError("surface.gram: matrix is not symmetric");
        }
    }

    s.canonical.vector = as_int_vector(require(j, "canonical", where), "surface.canonical");
    if (s.canonical.vector.size() != static_cast<std::size_t>(rank)) {
        throw InputError("surface.canonical: length differs from picard_rank");
    }

    if (j.contains("bundles")) {
        const auto& b = j.at("bundles");
        if (!b.is_object()) throw InputError("surface.bundles: expected an object");
        for (const auto& [name, vec] : b.items()) {
            LineBundleClass cls{as_int_vector(vec, "surface.bundles." + name)};
            if (cls.vector.size() != static_cast<std::size_t>(rank)) {
                throw InputError("surface.bundles." + name + ": length differs from picard_rank");
            }
            s.bundles.emplace(name, std::move(cls));
        }
    }

    if (j.contains("chi_Omega")) {
        s.chi_Omega = from_i64(as_int(j.at("chi_Omega"), "surface.chi_Omega"));
    }

    if (j.contains("cohomology")) {
        const auto& c = j.at("cohomology");
        if (!c.is_object()) throw InputError("surface.cohomology: expected an object");
        for (const auto& [name, table_json] : c.items()) {
            const std::string field = "surface.cohomology." + name;
            if (!s.bundles.count(name) && name != "O") {
                throw InputError(field + ": no bundle named \"" + name + "\"");
            }
            GradedDim table = as_table(table_json, field);
            const Int expected = rr_chi(s, s.bundle(name));
            if (euler(table) != expected) {
                throw InputError(field + ": Euler characteristic " + euler(table).get_str() +
                                 " differs from Riemann-Roch value " + expected.get_str());
            }
            warn_degrees(table, 2, field, warnings);
            s.cohomology.emplace(name, std::move(table));
        }
    }
    return s;
}

CurveData parse_curve(const nlohmann::json& j, std::vector<std::string>& warnings) {
    CurveData c;
    const auto genus = as_int(require(j, "genus", "curve"), "curve.genus");
    if (genus < 0) throw InputError("curve.genus: must be non-negative");
    c.genus = static_cast<int>(genus);
    if (j.contains("bundles")) {
        const auto& b = j.at("bundles");
        if (!b.is_object()) throw InputError("curve.bundles: expected an object");
        for (const auto& [name, spec] : b.items()) {
            const std::string field = "curve.bundles." + name;
            CurveBundle cb;
            const auto rank = as_int(require(spec, "rank", field), field + ".rank");
            if (rank < 1) throw InputError(field + ".rank: must be positive");
            cb.rank = static_cast<int>(rank);
            cb.degree = as_int(require(spec, "degree", field), field + ".degree");
            c.bundles.emplace(name, cb);
        }
    }
    if (j.contains("cohomology")) {
        const auto& t = j.at("cohomology");
        if (!t.is_object()) throw InputError("curve.cohomology: expected an object");
        for (const auto& [name, table_json] : t.items()) {
            const std::string field = "curve.cohomology." + name;
            if (!c.bundles.count(name) && name != "O") {
                throw InputError(field + ": no bundle named \"" + name + "\"");
            }
            GradedDim table = as_table(table_json, field);
            const Int expected = curve_chi(c, c.bundle(name));
            if (euler(table) != expected) {
                throw InputError(field + ": Euler characteristic " + euler(table).get_str() +
                                 " differs from Riemann-Roch value " + expected.get_str());
            }
            warn_degrees(table, 1, field, warnings);
            c.cohomology.emplace(name, std::move(table));
        }
    }
    return c;
}

} // namespace

SurfaceData surface_from_json(const nlohmann::json& j) {
    std::vector<std::string> ignored;
    return parse_surface(j, ignored);
}

CurveData curve_from_json(const nlohmann::json& j) {
    std::vector<std::string> ignored;
    return parse_curve(j, ignored);
}

GeometryConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("config: top level must be a JSON object");
    GeometryConfig cfg;
    if (j.contains("surface")) cfg.surface = parse_surface(j.at("surface"), cfg.warnings);
    if (j.contains("curve")) cfg.curve = parse_curve(j.at("curve"), cfg.warnings);
    if (j.contains("jobs")) {
        if (!j.at("jobs").is_array()) throw InputError("config.jobs: expected an array");
        cfg.jobs = j.at("jobs");
    }
    return cfg;
}

GeometryConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("config " + path + ": " + e.what());
    }
    return config_from_json(j);
}

} // namespace taut
