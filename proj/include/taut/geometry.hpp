#pragma once

// Numeric surface and curve data: the frontend that turns a lattice description
// (χ(O), intersection form, canonical class) and optional cohomology tables into
// the Euler numbers and graded spaces the formula layer consumes.

#include "taut/graded.hpp"
#include "taut/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

struct LineBundleClass {
    std::vector<std::int64_t> vector;

    friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
    LineBundleClass operator+(const LineBundleClass& rhs) const;
    LineBundleClass operator-(const LineBundleClass& rhs) const;
    LineBundleClass operator-() const;
    LineBundleClass scaled(std::int64_t c) const;
};

struct SurfaceData {
    Int chi_O;
    int picard_rank = 0;
    std::vector<std::vector<std::int64_t>> gram;
    LineBundleClass canonical;
    std::map<std::string, LineBundleClass> bundles;
    // Keyed by bundle name; the key "O" always denotes the trivial class.
    std::map<std::string, GradedDim> cohomology;
    std::optional<Int> chi_Omega;

    Int pairing(const LineBundleClass& a, const LineBundleClass& b) const;
    LineBundleClass zero_class() const;
    // The named class; "O" resolves to the trivial class when not listed.
    LineBundleClass bundle(const std::string& name) const;
    // H*(L) for the given class, if some cohomology table is attached to a bundle
    // with exactly this class.
    std::optional<GradedDim> table_for(const LineBundleClass& cls) const;
};

struct CurveBundle {
    int rank = 1;
    std::int64_t degree = 0;
};

struct CurveData {
    int genus = 0;
    std::map<std::string, CurveBundle> bundles;
    std::map<std::string, GradedDim> cohomology;

    CurveBundle bundle(const std::string& name) const;
};

// χ(L) = χ(O) + (L·L − L·K)/2. Throws InputError when L·L − L·K is odd.
Int rr_chi(const SurfaceData& s, const LineBundleClass& L);
// χ(K, L) = χ(Hom*(K, L)) = χ(L − K).
Int chi_pair(const SurfaceData& s, const LineBundleClass& K, const LineBundleClass& L);

Int curve_chi(const CurveData& c, const CurveBundle& b);
// χ(E, F) = χ(E^∨ ⊗ F) on a curve.
Int curve_chi_pair(const CurveData& c, const CurveBundle& E, const CurveBundle& F);
Int curve_chi_dual(const CurveData& c, const CurveBundle& E);

// [χ(F ⊗ L^p)] for p = 0..k.
std::vector<Int> chi_tensor_powers(const SurfaceData& s, const LineBundleClass& F,
                                   const LineBundleClass& L, int k);
// Pass-through for a caller-supplied list (F not a line bundle).
std::vector<Int> chi_tensor_powers(const std::vector<Int>& explicit_values, int k);

// Parsing and validation. Every error names the offending field.
SurfaceData surface_from_json(const nlohmann::json& j);
CurveData curve_from_json(const nlohmann::json& j);

struct GeometryConfig {
    std::optional<SurfaceData> surface;
    std::optional<CurveData> curve;
    nlohmann::json jobs = nlohmann::json::array();
    // Non-fatal findings, e.g. cohomology outside degrees [0, dim].
    std::vector<std::string> warnings;
};

GeometryConfig load_config(const std::string& path);
GeometryConfig config_from_json(const nlohmann::json& j);

} // namespace taut
