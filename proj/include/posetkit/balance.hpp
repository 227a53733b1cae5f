#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "posetkit/linext.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// Incomparable pair (x, y) reported with x < y by index and P(x ≺ y).
struct PairEntry {
	Element x, y;
	PairProbability prob;
};

/// Every incomparable pair once, sorted by (x, y).
std::vector<PairEntry> all_pair_probabilities(const Poset& p, const CountOptions& options = {});

enum class BalanceMethod { exhaustive, constructive };
std::string_view to_string(BalanceMethod m);

/// Where the constructive search stopped.
enum class ConstructiveStep {
	/// U(a) = U(b) = ∅, so P(a ≺ b) = 1/2.
	symmetric,
	/// P(a ≺ b) was already in [1/3, 2/3].
	direct,
	/// Resolved through the chain above b and its q-distribution.
	chain,
};
std::string_view to_string(ConstructiveStep s);

/// Record of one constructive search. Element indices refer to the poset
/// passed to find_balanced_nfree, not the stripped residual.
struct ConstructiveTrace {
	std::vector<Element> stripped_prefix;
	/// Level index in the stripped poset holding a and b.
	int level = 0;
	Element a = -1, b = -1;
	/// True when P(a ≺ b) > 2/3 forced a and b to trade roles.
	bool swapped = false;
	ConstructiveStep step = ConstructiveStep::direct;
	/// b = b_1 < ... < b_n, i.e. U(b) ∪ {b}; only for the chain step.
	std::vector<Element> chain;
	QDistribution q;
	/// 1-based slot with Σ_{j<r} q_j ≤ 1/2 < Σ_{j≤r} q_j; 0 outside the chain step.
	int r = 0;
	std::vector<std::pair<Element, Element>> candidates_checked;
};

struct BalanceCertificate {
	Element x, y;
	/// P(x ≺ y), with 1/3 ≤ prob ≤ 2/3.
	PairProbability prob;
	BalanceMethod method;
	std::optional<ConstructiveTrace> trace;
};

/// Balanced pair closest to 1/2, ties to the smallest (x, y); nullopt for
/// chains or when no incomparable pair is balanced.
std::optional<BalanceCertificate> find_balanced_exhaustive(const Poset& p, const CountOptions& options = {});

struct TwinSelection {
	int level;
	Element a, b;
};

/// Pairs (a, b), a < b by index, of distinct elements in `level` sharing
/// the same lower covers; oriented so that when exactly one of them has a
/// nonempty up-set it is b.
std::vector<std::pair<Element, Element>> twin_pairs(const Poset& p, const LevelDecomposition& levels, int level);

/// Highest level containing two elements with identical lower covers and
/// the lexicographically smallest such pair there. Such a level exists
/// whenever p has two minimal elements; throws PreconditionViolated if
/// there is none.
TwinSelection select_ab(const Poset& p);

/// Index r (1-based) with Σ_{j<r} q_j ≤ 1/2 < Σ_{j≤r} q_j.
int median_slot(const QDistribution& q);

/// Steps after the twin selection, run on a poset with ≥ 2 minimal elements
/// for a chosen twin pair (a, b). Returns a certificate over p's indices,
/// with trace fields level, stripped_prefix left for the caller. Throws
/// TheoremViolation when no candidate is balanced.
BalanceCertificate balance_from_twins(const Poset& p, Element a, Element b, const CountOptions& options = {});

/// Constructive balanced-pair search for N-free posets: strip forced
/// minima, pick twins a, b at the highest possible level, and resolve via
/// P(a ≺ b) or the q-distribution along the chain above b. Returns nullopt
/// for chains. Throws NotNFree when p contains an N and TheoremViolation
/// if the search fails or its answer disagrees with a recount on p.
std::optional<BalanceCertificate> find_balanced_nfree(const Poset& p, const CountOptions& options = {});

} // namespace posetkit
