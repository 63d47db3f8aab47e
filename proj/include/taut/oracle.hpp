#pragma once

// Brute-force verification of the closed formulas.
//
// Nothing here uses the orbit classification of index pairs: invariants are
// obtained by averaging graded traces over all of S_n, orbits by explicit
// enumeration, and symmetric/exterior powers by listing super bases.

#include "taut/formulas.hpp"
#include "taut/graded.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace taut::oracle {

// Configuration bounds. Full n! averaging is used up to kMaxAveragingN; orbit
// enumeration is used up to kMaxOrbitN.
inline constexpr int kMaxAveragingN = 8;
inline constexpr int kMaxOrbitN = 12;
inline constexpr int kMaxEnumerationDim = 8;
inline constexpr int kMaxEnumerationPower = 6;

// One-line notation over {0, ..., n-1}: perm[i] is the image of i.
using Permutation = std::vector<int>;

std::vector<std::vector<int>> cycles(const Permutation& sigma);
// Cycle lengths sorted in decreasing order.
std::vector<int> cycle_type(const Permutation& sigma);
bool is_permutation(const Permutation& sigma);

using Subset = std::uint32_t;

// Subsets I, J of {0, ..., n-1} as bitmasks.
struct IndexPair {
    Subset I = 0;
    Subset J = 0;

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

Subset apply(const Permutation& sigma, Subset s);
IndexPair apply(const Permutation& sigma, const IndexPair& p);

struct Orbit {
    IndexPair representative;     // smallest pair of the orbit
    std::uint64_t size = 0;
    std::uint64_t stabilizer_order = 0;
    std::vector<Permutation> stabilizer_generators;
    int intersection = 0;         // |I ∩ J|, constant along the orbit
};

struct OrbitDecomposition {
    int n = 0;
    int e = 0;
    int f = 0;
    std::vector<Orbit> orbits;    // sorted by representative
};

// Orbits of σ·(I, J) = (σ(I), σ(J)) on pairs with |I| = e, |J| = f, by
// breadth-first search under a generating set of S_n. Stabilizer orders are
// counted directly when n <= kMaxAveragingN, otherwise taken from orbit sizes.
OrbitDecomposition orbit_decomposition(int n, int e, int f);

// Orbit index containing p, or -1.
int find_orbit(const OrbitDecomposition& d, const IndexPair& p);

// Elements of S_n fixing p (enumerated; n <= kMaxAveragingN).
std::vector<Permutation> stabilizer_elements(int n, const IndexPair& p);

// Histogram of cycle types of a list of permutations.
std::map<std::vector<int>, std::uint64_t> cycle_type_census(const std::vector<Permutation>& perms);

// The pair ([e], [i] ∪ [e+1, e+f-i]) in 0-based bitmask form.
IndexPair standard_pair(int e, int f, int i);

enum SignFlag : unsigned { kNoSign = 0, kSignE = 1, kSignF = 2 };

struct Slot {
    GradedDim space;
    unsigned flags = kNoSign;
};

// Trace of sigma on ⊗ slots, twisted by the sign characters named in the flags.
// A cycle of length ℓ on slots carrying V contributes
//   Σ_d (−1)^{d(ℓ−1)} V[d] t^{ℓd}
// times (−1)^{ℓ−1} for each active flag. Throws InputError when a cycle mixes
// slots with different spaces or flags.
LaurentPoly graded_trace(const Permutation& sigma, const std::vector<Slot>& slots);

struct AveragingOptions {
    unsigned workers = 1;
};

// Graded dimension of the S_n-invariants of Hom*(W^e(E), W^f(F)), by averaging
// the trace over every σ ∈ S_n. Throws ConsistencyError if the average is not a
// non-negative integer polynomial.
GradedDim invariant_dim(int n, int e, int f, const GradedDim& A, const GradedDim& B, const GradedDim& C,
                        const GradedDim& D, const AveragingOptions& opts = {});

GradedDim oracle_w_hom(const WHomInput& in, const AveragingOptions& opts = {});

enum class PowerKind { sym, wedge };

// Counts super-basis monomials: in S^k odd basis vectors appear at most once, in
// ∧^k even ones do.
GradedDim oracle_sym_wedge(PowerKind kind, int k, const GradedDim& V);

} // namespace taut::oracle
