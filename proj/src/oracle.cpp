#include "taut/oracle.hpp"

#include "taut/parallel.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace taut::oracle {

std::vector<std::vector<int>> cycles(const Permutation& sigma) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int x = static_cast<int>(start); !seen[x]; x = sigma[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> cycle_type(const Permutation& sigma) {
    std::vector<int> type;
    for (const auto& c : cycles(sigma)) type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

bool is_permutation(const Permutation& sigma) {
    std::vector<bool> hit(sigma.size(), false);
    for (int x : sigma) {
        if (x < 0 || x >= static_cast<int>(sigma.size()) || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

Subset apply(const Permutation& sigma, Subset s) {
    Subset out = 0;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        if (s & (Subset{1} << x)) out |= Subset{1} << sigma[x];
    }
    return out;
}

IndexPair apply(const Permutation& sigma, const IndexPair& p) { return {apply(sigma, p.I), apply(sigma, p.J)}; }

IndexPair standard_pair(int e, int f, int i) {
    // [e] and [i] ∪ [e+1, e+f-i], shifted to 0-based positions.
    Subset I = (Subset{1} << e) - 1;
    Subset J = (Subset{1} << i) - 1;
    for (int x = e; x < e + f - i; ++x) J |= Subset{1} << x;
    return {I, J};
}

namespace {

void check_sizes(int n, int e, int f, int bound, const char* what) {
    if (n < 0 || n > bound) {
        throw InputError(std::string(what) + ": n = " + std::to_string(n) + " outside [0, " +
                         std::to_string(bound) + "]");
    }
    if (e < 0 || e > n || f < 0 || f > n) {
        throw InputError(std::string(what) + ": need 0 <= e, f <= n");
    }
}

std::vector<Subset> subsets_of_size(int n, int size) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
        if (std::popcount(s) == size) out.push_back(s);
    }
    return out;
}

Permutation identity(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (0 1) and the long cycle generate S_n.
std::vector<Permutation> symmetric_group_generators(int n) {
    std::vector<Permutation> gens;
    if (n < 2) return gens;
    Permutation swap = identity(n);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    Permutation rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    gens.push_back(rot);
    return gens;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

// Adjacent transpositions inside each block of points with equal membership in
// (I, J). They fix the pair by construction.
std::vector<Permutation> block_transpositions(int n, const IndexPair& p) {
    std::vector<Permutation> gens;
    for (unsigned cls = 0; cls < 4; ++cls) {
        int prev = -1;
        for (int x = 0; x < n; ++x) {
            unsigned c = ((p.I >> x) & 1U) | (((p.J >> x) & 1U) << 1);
            if (c != cls) continue;
            if (prev >= 0) {
                Permutation t = identity(n);
                std::swap(t[prev], t[x]);
                gens.push_back(std::move(t));
            }
            prev = x;
        }
    }
    return gens;
}

} // namespace

std::vector<Permutation> stabilizer_elements(int n, const IndexPair& p) {
    if (n < 0 || n > kMaxAveragingN) throw InputError("stabilizer_elements: n out of range");
    std::vector<Permutation> out;
    Permutation sigma = identity(n);
    do {
        if (oracle::apply(sigma, p) == p) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::map<std::vector<int>, std::uint64_t> cycle_type_census(const std::vector<Permutation>& perms) {
    std::map<std::vector<int>, std::uint64_t> census;
    for (const auto& p : perms) ++census[cycle_type(p)];
    return census;
}

OrbitDecomposition orbit_decomposition(int n, int e, int f) {
    check_sizes(n, e, f, kMaxOrbitN, "orbit_decomposition");
    const auto left = subsets_of_size(n, e);
    const auto right = subsets_of_size(n, f);
    std::vector<std::uint32_t> rank(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> rank_right(std::size_t{1} << n, 0);
    for (std::size_t i = 0; i < left.size(); ++i) rank[left[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < right.size(); ++j) rank_right[right[j]] = static_cast<std::uint32_t>(j);
    auto index_of = [&](const IndexPair& p) { return std::size_t{rank[p.I]} * right.size() + rank_right[p.J]; };

    const auto gens = symmetric_group_generators(n);
    const std::size_t total = left.size() * right.size();
    std::vector<int> label(total, -1);

    OrbitDecomposition out{n, e, f, {}};
    // Pairs are visited in increasing (I, J) order, so the first unlabelled pair
    // is the smallest element of its orbit.
    for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = 0; b < right.size(); ++b) {
            const std::size_t start = a * right.size() + b;
            if (label[start] >= 0) continue;
            const int id = static_cast<int>(out.orbits.size());
            Orbit orbit;
            orbit.representative = {left[a], right[b]};
            orbit.intersection = std::popcount(left[a] & right[b]);

            std::deque<IndexPair> queue{orbit.representative};
            label[start] = id;
            while (!queue.empty()) {
                const IndexPair cur = queue.front();
                queue.pop_front();
                ++orbit.size;
                for (const auto& g : gens) {
                    const IndexPair next = oracle::apply(g, cur);
                    auto& l = label[index_of(next)];
                    if (l < 0) {
                        l = id;
                        queue.push_back(next);
                    }
                }
            }

            if (n <= kMaxAveragingN) {
                orbit.stabilizer_order = stabilizer_elements(n, orbit.representative).size();
            } else {
                orbit.stabilizer_order = factorial_u64(n) / orbit.size;
            }
            orbit.stabilizer_generators = block_transpositions(n, orbit.representative);
            for (const auto& g : orbit.stabilizer_generators) {
                if (oracle::apply(g, orbit.representative) != orbit.representative) {
                    throw ConsistencyError("stabilizer generator moves the orbit representative");
                }
            }
            out.orbits.push_back(std::move(orbit));
        }
    }
    return out;
}

int find_orbit(const OrbitDecomposition& d, const IndexPair& p) {
    // Reconstruct the orbit of p and look for a known representative in it.
    const auto gens = symmetric_group_generators(d.n);
    std::set<IndexPair> seen{p};
    std::deque<IndexPair> queue{p};
    while (!queue.empty()) {
        const IndexPair cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const IndexPair next = oracle::apply(g, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
        if (seen.count(d.orbits[i].representative)) return static_cast<int>(i);
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Traces

LaurentPoly graded_trace(const Permutation& sigma, const std::vector<Slot>& slots) {
    if (sigma.size() != slots.size() || !is_permutation(sigma)) {
        throw InputError("graded_trace: sigma must permute the slot list");
    }
    LaurentPoly trace = LaurentPoly::one();
    for (const auto& cyc : cycles(sigma)) {
        const Slot& slot = slots[cyc.front()];
        for (int x : cyc) {
            if (slots[x].flags != slot.flags || !(slots[x].space == slot.space)) {
                throw InputError("graded_trace: sigma moves a slot into a different block");
            }
        }
        const int len = static_cast<int>(cyc.size());
        const int active = std::popcount(slot.flags);
        // Sign characters contribute sign(cycle) = (−1)^{ℓ−1} each.
        const bool flag_sign = (len - 1) % 2 == 1 && active % 2 == 1;
        LaurentPoly factor;
        for (const auto& [d, dim] : slot.space.dims()) {
            // Rotating ℓ copies of a basis vector of degree d: Koszul sign (−1)^{d(ℓ−1)}.
            const bool koszul = (d % 2 != 0) && (len - 1) % 2 == 1;
            factor.add_term(len * d, (koszul != flag_sign) ? Int(-dim) : dim);
        }
        trace *= factor;
    }
    return trace;
}

namespace {

// Sum of graded traces of sigma over all σ-fixed index pairs.
LaurentPoly fixed_pair_trace(const Permutation& sigma, const std::vector<Subset>& left,
                             const std::vector<Subset>& right, const GradedDim& A, const GradedDim& B,
                             const GradedDim& C, const GradedDim& D) {
    const int n = static_cast<int>(sigma.size());
    LaurentPoly total;
    std::vector<Slot> slots(static_cast<std::size_t>(n));
    for (Subset I : left) {
        if (oracle::apply(sigma, I) != I) continue;
        for (Subset J : right) {
            if (oracle::apply(sigma, J) != J) continue;
            for (int x = 0; x < n; ++x) {
                const bool in_i = (I >> x) & 1U;
                const bool in_j = (J >> x) & 1U;
                if (in_i && in_j) slots[x] = {A, kSignE | kSignF};
                else if (in_i) slots[x] = {B, kSignE};
                else if (in_j) slots[x] = {C, kSignF};
                else slots[x] = {D, kNoSign};
            }
            total += graded_trace(sigma, slots);
        }
    }
    return total;
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool = identity(n);
    Permutation out;
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial_u64(i - 1);
        const auto pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

} // namespace

GradedDim invariant_dim(int n, int e, int f, const GradedDim& A, const GradedDim& B, const GradedDim& C,
                        const GradedDim& D, const AveragingOptions& opts) {
    check_sizes(n, e, f, kMaxAveragingN, "invariant_dim");
    const auto left = subsets_of_size(n, e);
    const auto right = subsets_of_size(n, f);
    const std::uint64_t order = factorial_u64(n);
    const unsigned workers = std::max(1U, opts.workers);

    // The trace of σ only depends on its cycle type, so each worker caches it.
    const std::uint64_t chunk = (order + workers - 1) / workers;
    std::vector<LaurentPoly> partial(workers);
    parallel_for(workers, workers, [&](std::size_t w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(order, begin + chunk);
        if (begin >= end) return;
        std::map<std::vector<int>, LaurentPoly> memo;
        Permutation sigma = unrank_permutation(n, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
            auto type = cycle_type(sigma);
            auto it = memo.find(type);
            if (it == memo.end()) {
                it = memo.emplace(std::move(type), fixed_pair_trace(sigma, left, right, A, B, C, D)).first;
            }
            partial[w] += it->second;
            std::next_permutation(sigma.begin(), sigma.end());
        }
    });

    LaurentPoly sum;
    for (const auto& p : partial) sum += p;

    const Int group_order = from_i64(static_cast<std::int64_t>(order));
    LaurentPoly averaged;
    for (const auto& [d, c] : sum.terms()) {
        if (c % group_order != 0) {
            throw ConsistencyError("group average not integral in degree " + std::to_string(d) + ": " +
                                   c.get_str() + " / " + group_order.get_str());
        }
        averaged.add_term(d, c / group_order);
    }
    return GradedDim::from_poly(averaged);
}

GradedDim oracle_w_hom(const WHomInput& in, const AveragingOptions& opts) {
    return invariant_dim(in.n, in.e, in.f, in.A, in.B, in.C, in.D, opts);
}

// ---------------------------------------------------------------------------
// Super bases

GradedDim oracle_sym_wedge(PowerKind kind, int k, const GradedDim& V) {
    if (V.total_dim() > kMaxEnumerationDim || k > kMaxEnumerationPower) {
        throw InputError("oracle_sym_wedge: needs total dimension <= " + std::to_string(kMaxEnumerationDim) +
                         " and k <= " + std::to_string(kMaxEnumerationPower));
    }
    if (k < 0) return {};

    std::vector<int> basis;  // degree of each basis vector
    for (const auto& [d, m] : V.dims()) {
        for (long c = 0; c < m.get_si(); ++c) basis.push_back(d);
    }
    auto repeatable = [&](int degree) {
        const bool odd = degree % 2 != 0;
        return kind == PowerKind::sym ? !odd : odd;
    };

    LaurentPoly count;
    // Non-decreasing index sequences; a repeat is allowed only where permitted.
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int degree) -> void {
        if (static_cast<int>(idx.size()) == k) {
            count.add_term(degree, 1);
            return;
        }
        for (int b = start; b < static_cast<int>(basis.size()); ++b) {
            if (!idx.empty() && idx.back() == b && !repeatable(basis[b])) continue;
            idx.push_back(b);
            self(self, b, degree + basis[b]);
            idx.pop_back();
        }
    };
    rec(rec, 0, 0);
    return GradedDim::from_poly(count);
}

} // namespace taut::oracle
