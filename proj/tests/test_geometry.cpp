#include "taut/geometry.hpp"

#include <doctest.h>

#include <string>

using namespace taut;

namespace {

SurfaceData k3() {
    return surface_from_json(nlohmann::json::parse(R"({
        "chi_O": 2, "picard_rank": 2, "gram": [[4, 0], [0, -2]], "canonical": [0, 0],
        "bundles": {"H": [1, 0], "C": [0, 1]},
        "cohomology": {"O": {"0": 1, "2": 1}, "H": {"0": 4}},
        "chi_Omega": -20})"));
}

std::string error_of(const char* text) {
    try {
        surface_from_json(nlohmann::json::parse(text));
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("Riemann-Roch on a lattice") {
    const auto s = k3();
    CHECK(rr_chi(s, s.bundle("H")) == 2 + 4 / 2);
    CHECK(rr_chi(s, s.zero_class()) == s.chi_O);
    CHECK(rr_chi(s, s.bundle("C")) == 2 + (-2) / 2);
    CHECK(chi_pair(s, s.bundle("H"), s.bundle("H")) == s.chi_O);
    CHECK(chi_pair(s, s.zero_class(), s.bundle("H")) == rr_chi(s, s.bundle("H")));

    // An odd lattice with K = 0, so L·L − L·K = 1.
    SurfaceData odd;
    odd.chi_O = 1;
    odd.picard_rank = 1;
    odd.gram = {{1}};
    odd.canonical = LineBundleClass{{0}};
    CHECK_THROWS_WITH_AS(rr_chi(odd, LineBundleClass{{1}}), doctest::Contains("non-integral Riemann-Roch"), InputError);
}

TEST_CASE("tensor powers") {
    const auto s = k3();
    CHECK(chi_tensor_powers(s, s.zero_class(), s.zero_class(), 2) == std::vector<Int>{2, 2, 2});
    std::vector<Int> expected;
    for (int p = 0; p <= 2; ++p) expected.push_back(rr_chi(s, s.bundle("H").scaled(p)));
    CHECK(chi_tensor_powers(s, s.zero_class(), s.bundle("H"), 2) == expected);
    CHECK(expected == std::vector<Int>{2, 4, 10});
    CHECK(chi_tensor_powers(std::vector<Int>{1, 5, 9}, 2) == std::vector<Int>{1, 5, 9});
    CHECK_THROWS_AS(chi_tensor_powers(std::vector<Int>{1, 5}, 2), InputError);
}

TEST_CASE("curves") {
    CurveData p1{0, {}, {}};
    CHECK(curve_chi(p1, p1.bundle("O")) == 1);
    CurveData g2{2, {{"M", {1, 3}}}, {}};
    CHECK(curve_chi(g2, g2.bundle("M")) == 3 + 1 - 2);
    for (int g : {0, 1, 5}) CHECK(curve_chi(CurveData{g, {}, {}}, CurveBundle{1, 0}) == 1 - g);
    // χ(E, F) = χ(E^∨ ⊗ F): rank 2·1, degree 2·3 − 1·1.
    const CurveBundle E{2, 1}, F{1, 3};
    CHECK(curve_chi_pair(g2, E, F) == curve_chi(g2, CurveBundle{2, 5}));
    CHECK(curve_chi_dual(g2, F) == curve_chi(g2, CurveBundle{1, -3}));
}

TEST_CASE("tables are looked up by class") {
    const auto s = k3();
    CHECK(s.table_for(s.zero_class()) == GradedDim{{0, 1}, {2, 1}});
    CHECK(s.table_for(s.bundle("H")) == GradedDim{{0, 4}});
    CHECK_FALSE(s.table_for(s.bundle("C")).has_value());
    CHECK_THROWS_AS(s.bundle("nope"), InputError);
}

TEST_CASE("config errors name the field") {
    CHECK(error_of(R"({"chi_O": 2, "picard_rank": 2, "gram": [[4, 1], [0, -2]], "canonical": [0, 0]})")
              .find("surface.gram") != std::string::npos);
    CHECK(error_of(R"({"picard_rank": 1, "gram": [[1]], "canonical": [0]})").find("chi_O") != std::string::npos);
    CHECK(error_of(R"({"chi_O": 1, "picard_rank": 1, "gram": [[1]], "canonical": [0, 1]})")
              .find("surface.canonical") != std::string::npos);
    // H*(O) with Euler characteristic 3 while χ(O) = 2.
    CHECK(error_of(R"({"chi_O": 2, "picard_rank": 1, "gram": [[2]], "canonical": [0],
                      "cohomology": {"O": {"0": 1, "2": 2}}})")
              .find("surface.cohomology.O") != std::string::npos);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), InputError);
}

TEST_CASE("out-of-range cohomology degrees are warnings") {
    const auto cfg = config_from_json(nlohmann::json::parse(R"({"surface": {
        "chi_O": 2, "picard_rank": 1, "gram": [[0]], "canonical": [0],
        "cohomology": {"O": {"0": 1, "2": 1, "6": 1, "7": 1}}}})"));
    CHECK(cfg.surface.has_value());
    CHECK_FALSE(cfg.warnings.empty());
}
