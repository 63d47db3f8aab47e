#include "taut/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace taut;
using namespace taut::oracle;

namespace {

const GradedDim kK3O{{0, 1}, {2, 1}};

std::uint64_t fact(int m) { return m <= 1 ? 1 : m * fact(m - 1); }

} // namespace

TEST_CASE("permutations") {
    const Permutation sigma{1, 2, 0, 4, 3, 5};
    CHECK(cycle_type(sigma) == std::vector<int>{3, 2, 1});
    CHECK(cycles(sigma).size() == 3);
    CHECK(is_permutation(sigma));
    CHECK_FALSE(is_permutation({0, 0, 1}));
    CHECK(oracle::apply(sigma, Subset{0b001}) == Subset{0b010});
}

TEST_CASE("orbit decomposition") {
    const auto d211 = orbit_decomposition(2, 1, 1);
    REQUIRE(d211.orbits.size() == 2);
    // All four pairs, split by |I ∩ J|.
    std::set<int> sizes;
    for (const auto& o : d211.orbits) {
        CHECK(o.size == 2);
        sizes.insert(o.intersection);
    }
    CHECK(sizes == std::set<int>{0, 1});
    CHECK(find_orbit(d211, IndexPair{0b01, 0b01}) != find_orbit(d211, IndexPair{0b01, 0b10}));

    for (int n = 0; n <= 5; ++n) {
        const auto d = orbit_decomposition(n, 0, 0);
        REQUIRE(d.orbits.size() == 1);
        CHECK(d.orbits[0].size == 1);
        CHECK(d.orbits[0].stabilizer_order == fact(n));
    }

    const auto d522 = orbit_decomposition(5, 2, 2);
    CHECK(d522.orbits.size() == 3);
    for (const auto& o : d522.orbits) {
        CHECK(o.size * o.stabilizer_order == 120);
        CHECK(stabilizer_elements(5, o.representative).size() == o.stabilizer_order);
        for (const auto& g : o.stabilizer_generators) CHECK(oracle::apply(g, o.representative) == o.representative);
    }
    for (int i = 0; i <= 2; ++i) {
        const int idx = find_orbit(d522, standard_pair(2, 2, i));
        REQUIRE(idx >= 0);
        CHECK(d522.orbits[idx].intersection == i);
        CHECK(d522.orbits[idx].stabilizer_order == fact(i) * fact(2 - i) * fact(2 - i) * fact(1 + i));
    }
    CHECK_THROWS_AS(orbit_decomposition(kMaxOrbitN + 1, 1, 1), InputError);
}

TEST_CASE("graded traces") {
    const GradedDim odd{{1, 1}};
    const std::vector<Slot> slots{{kK3O}, {GradedDim{{1, 2}}}};
    CHECK(graded_trace({0, 1}, slots) == kK3O.poincare() * GradedDim{{1, 2}}.poincare());
    CHECK(graded_trace({1, 0}, {{kK3O}, {kK3O}}) == LaurentPoly{{0, 1}, {4, 1}});
    CHECK(graded_trace({1, 0}, {{odd}, {odd}}) == LaurentPoly{{2, -1}});
    // The sign character flips a transposition.
    CHECK(graded_trace({1, 0}, {{kK3O, kSignE}, {kK3O, kSignE}}) == LaurentPoly{{0, -1}, {4, -1}});
    CHECK_THROWS_AS(graded_trace({1, 0}, {{kK3O}, {odd}}), InputError);
}

TEST_CASE("invariant dimensions") {
    CHECK(invariant_dim(2, 1, 1, kK3O, kK3O, kK3O, kK3O) == GradedDim{{0, 2}, {2, 4}, {4, 2}});
    const GradedDim a{{-1, 2}, {2, 1}};
    CHECK(invariant_dim(1, 1, 1, a, kK3O, kK3O, kK3O) == a);
    CHECK(invariant_dim(3, 0, 0, {}, {}, {}, kK3O) == GradedDim{{0, 1}, {2, 1}, {4, 1}, {6, 1}});
    CHECK(invariant_dim(3, 0, 0, {}, {}, {}, kK3O) == sym_power(3, kK3O));
    const GradedDim one{{0, 1}};
    // Three orbits, but the i = 0 one carries ∧²B ⊗ ∧²C = 0 for one-dimensional B, C.
    CHECK(orbit_decomposition(4, 2, 2).orbits.size() == 3);
    CHECK(oracle_w_hom({4, 2, 2, one, one, one, one}) == GradedDim{{0, 2}});
    CHECK(oracle_w_hom({4, 2, 2, one, one, one, one}) == w_hom({4, 2, 2, one, one, one, one}));
    CHECK(invariant_dim(3, 1, 2, a, kK3O, one, kK3O, {4}) == invariant_dim(3, 1, 2, a, kK3O, one, kK3O, {1}));
}

TEST_CASE("basis enumeration of powers") {
    CHECK(oracle_sym_wedge(PowerKind::sym, 2, kK3O) == GradedDim{{0, 1}, {2, 1}, {4, 1}});
    CHECK(oracle_sym_wedge(PowerKind::wedge, 2, GradedDim{{1, 2}}) == GradedDim{{2, 3}});
    const GradedDim v{{-1, 1}, {0, 2}, {3, 1}};
    CHECK(oracle_sym_wedge(PowerKind::sym, 1, v) == v);
    CHECK_THROWS_AS(oracle_sym_wedge(PowerKind::sym, 2, GradedDim{{0, kMaxEnumerationDim + 1}}), InputError);
}
