#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "posetkit/fraction.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

struct CountOptions {
	/// Largest number of memoized order ideals before CapacityExceeded.
	std::size_t max_memo_entries = std::size_t{1} << 26;
	/// Largest poset accepted by extension enumeration.
	int max_enumeration_size = 10;
};

/// Number of linear extensions e(P).
///
/// Dynamic programme over the lattice of order ideals: f(∅) = 1 and
/// f(I) = Σ f(I ∖ {m}) over the maximal elements m of I, evaluated depth
/// first from the full ideal and memoized by ideal bitmask. Runs in machine
/// integers and falls back to GMP when the count overflows 64 bits.
ExtensionCount count_extensions(const Poset& p, const CountOptions& options = {});

/// Number of order ideals (downsets) of p, including ∅ and the full set.
std::size_t count_ideals(const Poset& p, const CountOptions& options = {});

/// Visits every linear extension once, in lexicographic order of index
/// sequences. Throws CapacityExceeded when p.size() > max_enumeration_size.
void for_each_extension(const Poset& p, const std::function<void(std::span<const Element>)>& visit,
                        const CountOptions& options = {});
std::vector<std::vector<Element>> enumerate_extensions(const Poset& p, const CountOptions& options = {});

/// True iff `sequence` is a permutation of p's elements respecting <.
bool is_linear_extension(const Poset& p, std::span<const Element> sequence);

/// p with x < y added and closed. Returns p unchanged when x < y already.
/// Throws WouldCreateCycle when y < x or x == y.
Poset add_relation(const Poset& p, Element x, Element y);

/// Fraction of linear extensions placing x before y: 1 when x < y, 0 when
/// y < x, otherwise e(P + x<y) / e(P). Throws PreconditionViolated for x == y.
PairProbability prob_before(const Poset& p, Element x, Element y, const CountOptions& options = {});
/// Same, reusing a known e(P).
PairProbability prob_before(const Poset& p, Element x, Element y, const ExtensionCount& total,
                            const CountOptions& options = {});

/// Where `a` falls relative to a chain b_1 < ... < b_n:
/// q[0] = P(a ≺ b_1), q[j-1] = P(b_{j-1} ≺ a ≺ b_j), q[n] = P(b_n ≺ a).
struct QDistribution {
	std::vector<PairProbability> q;

	/// Σ_{j<=k} q_j (1-based k), which equals P(a ≺ b_k) for k <= n.
	PairProbability prefix(int k) const;
	bool monotone_nonincreasing() const;
};

/// Throws NotAChain if `chain` is not strictly increasing in p, and
/// PreconditionViolated if `a` belongs to the chain.
QDistribution q_distribution(const Poset& p, Element a, std::span<const Element> chain,
                             const CountOptions& options = {});

} // namespace posetkit
