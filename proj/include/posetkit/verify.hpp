#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "posetkit/linext.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// Isomorphism-invariant encoding of a poset: the minimum, over relabelings,
/// of the row-major strict-order matrix read as a binary number with cell
/// (0,0) most significant.
struct CanonicalForm {
	int n = 0;
	unsigned __int128 matrix_bits = 0;

	bool operator==(const CanonicalForm&) const = default;
	auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kMaxCanonicalSize = 11;

/// Throws CapacityExceeded when p.size() > max_size (at most 11).
CanonicalForm canonical_form(const Poset& p, int max_size = 9);
/// Poset whose strict-order matrix is exactly the form's matrix.
Poset from_canonical(const CanonicalForm& form);

struct EnumerationOptions {
	int max_size = 7;
};

/// One representative per isomorphism class of n-element posets, each
/// labelled in its canonical order, sorted by canonical form. Throws
/// CapacityExceeded when n > max_size.
std::vector<Poset> enumerate_posets(int n, const EnumerationOptions& options = {});

struct Census {
	std::uint64_t total = 0;
	std::uint64_t nfree = 0;
	bool operator==(const Census&) const = default;
};
Census census_nfree(int n, const EnumerationOptions& options = {});

/// Outcome of the full check suite on one n.
struct SizeReport {
	int n = 0;
	std::uint64_t total = 0;
	std::uint64_t nfree = 0;
	/// N-free posets that are not chains; each runs the theorem check.
	std::uint64_t checked = 0;
	std::uint64_t theorem_passes = 0;
	std::uint64_t theorem_failures = 0;
	std::uint64_t lemma_passes = 0;
	std::uint64_t lemma_failures = 0;
	/// Constructive searches that reached the chain step.
	std::uint64_t chain_steps = 0;
	/// Alternative twin choices additionally run through the search.
	std::uint64_t twin_choices = 0;
	std::uint64_t critical_pairs = 0;
	/// Posets containing an N on which check_lemma2 fails.
	std::uint64_t lemma2_counterexamples = 0;
	double elapsed_seconds = 0;
	/// First few failure descriptions, in enumeration order.
	std::vector<std::string> failure_notes;

	std::uint64_t failures() const { return theorem_failures + lemma_failures; }
};

struct VerificationReport {
	std::vector<SizeReport> sizes;

	std::uint64_t failures() const;
	/// `n=<k> total=<t> nfree=<f> checked=<c> failures=<x>` per size.
	std::string machine_lines() const;
	std::string table() const;
};

/// Per-poset results merged into a SizeReport. Exposed for tests.
struct PosetCheck {
	bool nfree = false;
	bool chain = false;
	bool theorem_ok = true;
	bool lemmas_ok = true;
	bool chain_step = false;
	std::uint64_t twin_choices = 0;
	std::uint64_t critical_pairs = 0;
	bool lemma2_counterexample = false;
	std::vector<std::string> notes;
};

/// Runs the theorem and lemma checks on a single poset.
PosetCheck check_poset(const Poset& p, const CountOptions& options = {});

/// Checks every unlabeled poset with 0 ≤ n ≤ max_n, distributing posets over
/// `jobs` worker threads. The counts do not depend on `jobs`.
VerificationReport verify_theorem(int max_n, int jobs = 1, const EnumerationOptions& options = {});

/// Edge probability num/den.
struct EdgeBias {
	std::uint64_t num = 1;
	std::uint64_t den = 2;
};

/// Samples each pair (i, j), i < j, independently with probability `bias`
/// and closes the result. Deterministic in (n, bias, seed).
Poset random_poset(int n, EdgeBias bias, std::uint64_t seed);

} // namespace posetkit
