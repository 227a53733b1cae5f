#pragma once

#include <optional>
#include <vector>

#include "posetkit/linext.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// Four distinct elements with covers a<b, c<b, c<d and no other
/// comparabilities among them.
struct NWitness {
	Element a, b, c, d;
	bool operator==(const NWitness&) const = default;
};

/// Checks the defining properties of an N on (a, b, c, d).
bool is_n_witness(const Poset& p, const NWitness& w);

/// Lexicographically smallest N by (a, b, c, d) index, found through the
/// cover relation; nullopt iff p is N-free.
std::optional<NWitness> find_n(const Poset& p);
bool is_n_free(const Poset& p);

// The checks below are total: they report whether the property holds on any
// input, so they can be exercised on posets that are not N-free.

/// Two elements sharing an upper cover have equal upper-cover sets, and two
/// elements sharing a lower cover have equal lower-cover sets.
bool check_lemma2(const Poset& p);
/// All upper covers of each element lie in a single level.
bool check_lemma2prime(const Poset& p);
/// Let i be the highest level holding two distinct elements with the same
/// lower covers. Every x in level i has U(x) ∪ {x} a chain. Vacuously true
/// when no level qualifies.
bool check_lemma3(const Poset& p);

/// Highest level index holding two distinct elements with identical
/// lower-cover sets, or nullopt.
std::optional<int> highest_twin_level(const Poset& p, const LevelDecomposition& levels);

/// Incomparable (x, y) with U(y) ⊆ U(x) and D(x) ⊆ D(y).
struct CriticalPair {
	Element x, y;
	bool operator==(const CriticalPair&) const = default;
};

bool is_critical(const Poset& p, Element x, Element y);
/// All ordered critical pairs, sorted by (x, y).
std::vector<CriticalPair> critical_pairs(const Poset& p);

/// Enumerates extensions and confirms that swapping y and x in every
/// extension placing y first yields distinct extensions placing x first.
/// Throws CapacityExceeded when p.size() > 8.
bool swap_check(const Poset& p, const CriticalPair& cp);

inline constexpr int kSwapCheckMaxSize = 8;

} // namespace posetkit
