#pragma once

#include <span>
#include <vector>

#include "posetkit/linext.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// ⌈log₂ e(P)⌉, the information-theoretic minimum number of comparisons
/// that determine an unknown linear extension.
int info_lower_bound(const Poset& p, const CountOptions& options = {});

/// One question "is x ≺ y?" with P(x ≺ y) at the time it was asked.
struct SortQuery {
	Element x, y;
	PairProbability prob;
	bool answer;
};

struct SortTranscript {
	std::vector<SortQuery> queries;
	ExtensionCount initial_e;
	bool all_queries_balanced = true;

	int comparisons() const { return static_cast<int>(queries.size()); }
};

/// Identifies `hidden` by repeatedly asking about the incomparable pair with
/// P(x ≺ y) closest to 1/2 (smallest (x, y) on ties) and adding the answer
/// to the order. Throws HiddenNotAnExtension.
SortTranscript simulate_sort(const Poset& p, std::span<const Element> hidden, const CountOptions& options = {});

/// p with every answer in the transcript added.
Poset replay(const Poset& p, const SortTranscript& t);

/// 3^k >= e, i.e. k >= ⌈log₃ e⌉.
bool meets_ternary_lower_bound(const ExtensionCount& e, int k);
/// 3^k <= e·2^k, i.e. k <= ⌊log_{3/2} e⌋.
bool meets_balanced_upper_bound(const ExtensionCount& e, int k);

} // namespace posetkit
