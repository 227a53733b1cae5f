#include "posetkit/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "posetkit/balance.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/nfree.hpp"

namespace posetkit {

namespace {

using Rows = std::vector<ElementSet>;

// Minimum matrix encoding over all relabelings that list elements in
// increasing order of an isomorphism invariant. Isomorphisms preserve the
// invariant, so the minimum is still a complete invariant while only
// permutations inside equal-invariant blocks need to be scanned.
CanonicalForm canonical_from_rows(int n, const Rows& up) {
	Rows down(n);
	for(int x = 0; x < n; ++x) {
		up[x].for_each([&](Element y) { down[y].insert(x); });
	}
	using Key = std::tuple<int, int, int, int>;
	std::vector<Key> key(n);
	for(int x = 0; x < n; ++x) {
		int up_covers = 0, down_covers = 0;
		up[x].for_each([&](Element y) {
			if((up[x] & down[y]).empty()) ++up_covers;
		});
		down[x].for_each([&](Element y) {
			if((down[x] & up[y]).empty()) ++down_covers;
		});
		key[x] = {down[x].size(), up[x].size(), down_covers, up_covers};
	}
	std::vector<Element> order(n);
	for(int i = 0; i < n; ++i) order[i] = i;
	std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return key[a] < key[b]; });

	std::vector<std::pair<int, int>> blocks;
	for(int i = 0; i < n;) {
		int j = i;
		while(j < n && key[order[j]] == key[order[i]]) ++j;
		blocks.emplace_back(i, j);
		i = j;
	}

	CanonicalForm best{n, 0};
	bool have = false;
	auto encode = [&] {
		unsigned __int128 bits = 0;
		for(int i = 0; i < n; ++i) {
			const ElementSet row = up[order[i]];
			for(int j = 0; j < n; ++j) {
				bits = (bits << 1) | static_cast<unsigned>(row.contains(order[j]));
			}
		}
		if(!have || bits < best.matrix_bits) {
			best.matrix_bits = bits;
			have = true;
		}
	};
	auto permute = [&](auto&& self, std::size_t block) -> void {
		if(block == blocks.size()) {
			encode();
			return;
		}
		auto first = order.begin() + blocks[block].first;
		auto last = order.begin() + blocks[block].second;
		std::sort(first, last);
		do {
			self(self, block + 1);
		} while(std::next_permutation(first, last));
	};
	permute(permute, 0);
	return best;
}

Rows rows_of(const Poset& p) {
	Rows up(p.size());
	for(int x = 0; x < p.size(); ++x) up[x] = p.up(x);
	return up;
}

} // namespace

CanonicalForm canonical_form(const Poset& p, int max_size) {
	max_size = std::min(max_size, kMaxCanonicalSize);
	if(p.size() > max_size) {
		throw CapacityExceeded("canonical form limited to " + std::to_string(max_size) + " elements");
	}
	return canonical_from_rows(p.size(), rows_of(p));
}

Poset from_canonical(const CanonicalForm& form) {
	const int n = form.n;
	Relation rel;
	for(int i = 0; i < n; ++i) {
		for(int j = 0; j < n; ++j) {
			const int shift = n * n - 1 - (i * n + j);
			if((form.matrix_bits >> shift) & 1) rel.emplace_back(i, j);
		}
	}
	return Poset::unlabeled(n, rel);
}

std::vector<Poset> enumerate_posets(int n, const EnumerationOptions& options) {
	if(n < 0) throw PreconditionViolated("negative poset size");
	if(n > options.max_size || n > kMaxCanonicalSize) {
		throw CapacityExceeded("poset enumeration limited to " + std::to_string(options.max_size) + " elements");
	}
	std::vector<std::pair<int, int>> cells;
	for(int i = 0; i < n; ++i) {
		for(int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
	}
	const std::uint64_t candidates = std::uint64_t{1} << cells.size();

	std::set<CanonicalForm> forms;
	Rows up(n);
	for(std::uint64_t mask = 0; mask < candidates; ++mask) {
		std::fill(up.begin(), up.end(), ElementSet{});
		for(std::size_t c = 0; c < cells.size(); ++c) {
			if((mask >> c) & 1) up[cells[c].first].insert(cells[c].second);
		}
		bool closed = true;
		for(int i = 0; i < n && closed; ++i) {
			up[i].for_each([&](Element j) { closed = closed && up[j].subset_of(up[i]); });
		}
		if(closed) forms.insert(canonical_from_rows(n, up));
	}

	std::vector<Poset> out;
	out.reserve(forms.size());
	for(const auto& f : forms) out.push_back(from_canonical(f));
	return out;
}

Census census_nfree(int n, const EnumerationOptions& options) {
	Census c;
	for(const auto& p : enumerate_posets(n, options)) {
		++c.total;
		if(is_n_free(p)) ++c.nfree;
	}
	return c;
}

namespace {

std::string describe(const Poset& p) {
	std::string out = "covers {";
	for(auto [x, y] : covers(p)) {
		out += " " + p.label(x) + "<" + p.label(y);
	}
	return out + " }";
}

void check_certificate(const Poset& p, const BalanceCertificate& cert, PosetCheck& out, const CountOptions& options) {
	auto fail = [&](std::string what) {
		out.theorem_ok = false;
		out.notes.push_back(std::move(what));
	};
	if(p.comparable(cert.x, cert.y)) fail("certificate pair is comparable");
	PairProbability recount(count_extensions(add_relation(p, cert.x, cert.y), options), count_extensions(p, options));
	recount.canonicalize();
	if(recount != cert.prob) fail("certificate probability disagrees with recount");
	if(!is_balanced(cert.prob)) fail("certificate probability outside [1/3, 2/3]");

	if(!cert.trace || cert.trace->step != ConstructiveStep::chain) return;
	const ConstructiveTrace& t = *cert.trace;
	out.chain_step = true;
	PairProbability sum(0);
	for(const auto& q : t.q.q) {
		if(sgn(q) < 0) fail("negative q entry");
		sum += q;
	}
	if(sum != 1) fail("q does not sum to 1");
	if(!t.q.monotone_nonincreasing()) fail("q is not monotone nonincreasing");
	if(t.q.q.empty() || !below(t.q.q.front(), 1, 3)) fail("q_1 is not below 1/3 at the chain step");
	ElementSet chain;
	for(Element e : t.chain) chain.insert(e);
	if(!is_chain(p, chain)) fail("trace chain is not a chain");
	if(!(at_most(t.q.prefix(t.r - 1), 1, 2) && above(t.q.prefix(t.r), 1, 2))) fail("r does not straddle 1/2");
}

} // namespace

PosetCheck check_poset(const Poset& p, const CountOptions& options) {
	PosetCheck out;
	auto lemma_fail = [&](std::string what) {
		out.lemmas_ok = false;
		out.notes.push_back(std::move(what));
	};
	auto witness = find_n(p);
	out.nfree = !witness;
	out.chain = is_chain(p);
	if(witness) {
		if(!is_n_witness(p, *witness)) lemma_fail("find_n returned an invalid witness");
		out.lemma2_counterexample = !check_lemma2(p);
		return out;
	}

	if(!check_lemma2(p)) lemma_fail("common covers property fails");
	if(!check_lemma2prime(p)) lemma_fail("upper covers span several levels");
	if(!check_lemma3(p)) lemma_fail("up-set at the highest twin level is not a chain");
	for(const auto& cp : critical_pairs(p)) {
		++out.critical_pairs;
		if(!at_least(prob_before(p, cp.x, cp.y, options), 1, 2)) lemma_fail("critical pair below 1/2");
		if(p.size() <= kSwapCheckMaxSize && !swap_check(p, cp)) lemma_fail("critical pair swap is not an injection");
	}
	if(out.chain) return out;

	try {
		auto cert = find_balanced_nfree(p, options);
		if(!cert) {
			out.theorem_ok = false;
			out.notes.push_back("no certificate for a non-chain");
		} else {
			check_certificate(p, *cert, out, options);
		}

		// Run every other qualifying twin pair too; the theorem must not
		// depend on which one the search picks.
		StripResult stripped = strip_forced_minimum(p);
		const Poset& rest = stripped.residual;
		auto levels = level_decomposition(rest);
		const int level = highest_twin_level(rest, levels).value();
		auto pairs = twin_pairs(rest, levels, level);
		for(std::size_t i = 1; i < pairs.size(); ++i) {
			++out.twin_choices;
			BalanceCertificate alt = balance_from_twins(rest, pairs[i].first, pairs[i].second, options);
			PosetCheck scratch;
			check_certificate(rest, alt, scratch, options);
			if(!scratch.theorem_ok) {
				out.theorem_ok = false;
				for(auto& note : scratch.notes) out.notes.push_back("alternative twins: " + note);
			}
		}
	} catch(const TheoremViolation& e) {
		out.theorem_ok = false;
		out.notes.push_back(std::string("theorem violation: ") + e.what());
	}
	return out;
}

std::uint64_t VerificationReport::failures() const {
	std::uint64_t total = 0;
	for(const auto& s : sizes) total += s.failures();
	return total;
}

std::string VerificationReport::machine_lines() const {
	std::ostringstream out;
	for(const auto& s : sizes) {
		out << "n=" << s.n << " total=" << s.total << " nfree=" << s.nfree << " checked=" << s.checked
		    << " failures=" << s.failures() << '\n';
	}
	return out.str();
}

std::string VerificationReport::table() const {
	std::ostringstream out;
	char line[200];
	std::snprintf(line, sizeof line, "%3s %8s %8s %8s %8s %8s %8s %8s %9s\n", "n", "posets", "nfree", "checked",
	              "chain", "twins", "critical", "failures", "seconds");
	out << line;
	for(const auto& s : sizes) {
		std::snprintf(line, sizeof line, "%3d %8llu %8llu %8llu %8llu %8llu %8llu %8llu %9.3f\n", s.n,
		              static_cast<unsigned long long>(s.total), static_cast<unsigned long long>(s.nfree),
		              static_cast<unsigned long long>(s.checked), static_cast<unsigned long long>(s.chain_steps),
		              static_cast<unsigned long long>(s.twin_choices),
		              static_cast<unsigned long long>(s.critical_pairs),
		              static_cast<unsigned long long>(s.failures()), s.elapsed_seconds);
		out << line;
		for(const auto& note : s.failure_notes) out << "    " << note << '\n';
	}
	return out.str();
}

VerificationReport verify_theorem(int max_n, int jobs, const EnumerationOptions& options) {
	if(max_n > options.max_size) {
		throw CapacityExceeded("verification limited to " + std::to_string(options.max_size) + " elements");
	}
	jobs = std::max(jobs, 1);
	VerificationReport report;
	for(int n = 0; n <= max_n; ++n) {
		const auto start = std::chrono::steady_clock::now();
		const std::vector<Poset> posets = enumerate_posets(n, options);
		std::vector<PosetCheck> results(posets.size());

		std::atomic<std::size_t> next{0};
		auto worker = [&] {
			for(std::size_t i = next++; i < posets.size(); i = next++) {
				try {
					results[i] = check_poset(posets[i]);
				} catch(const std::exception& e) {
					results[i].theorem_ok = false;
					results[i].notes.push_back(std::string("exception: ") + e.what());
				}
			}
		};
		std::vector<std::jthread> pool;
		for(int j = 1; j < jobs; ++j) pool.emplace_back(worker);
		worker();
		pool.clear();

		SizeReport s;
		s.n = n;
		for(std::size_t i = 0; i < results.size(); ++i) {
			const PosetCheck& r = results[i];
			++s.total;
			s.lemma2_counterexamples += r.lemma2_counterexample;
			if(r.nfree) {
				++s.nfree;
				(r.lemmas_ok ? s.lemma_passes : s.lemma_failures) += 1;
			} else if(!r.lemmas_ok) {
				++s.lemma_failures;
			}
			if(r.nfree && !r.chain) {
				++s.checked;
				(r.theorem_ok ? s.theorem_passes : s.theorem_failures) += 1;
			} else if(!r.theorem_ok) {
				++s.theorem_failures;
			}
			s.chain_steps += r.chain_step;
			s.twin_choices += r.twin_choices;
			s.critical_pairs += r.critical_pairs;
			for(const auto& note : r.notes) {
				if(s.failure_notes.size() < 8) {
					s.failure_notes.push_back(describe(posets[i]) + ": " + note);
				}
			}
		}
		s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		report.sizes.push_back(std::move(s));
	}
	return report;
}

Poset random_poset(int n, EdgeBias bias, std::uint64_t seed) {
	if(n < 0) throw PreconditionViolated("negative poset size");
	if(n > kMaxElements) throw CapacityExceeded("random_poset limited to 64 elements");
	if(bias.den == 0 || bias.num > bias.den) throw PreconditionViolated("edge bias must lie in [0, 1]");
	std::mt19937_64 rng(seed);
	Relation rel;
	for(int i = 0; i < n; ++i) {
		for(int j = i + 1; j < n; ++j) {
			// mt19937_64 output is fully specified, unlike the std distributions
			if(rng() % bias.den < bias.num) rel.emplace_back(i, j);
		}
	}
	return Poset::unlabeled(n, rel);
}

} // namespace posetkit
