#include "posetkit/balance.hpp"

#include <algorithm>

#include "posetkit/errors.hpp"
#include "posetkit/nfree.hpp"

namespace posetkit {

std::string_view to_string(BalanceMethod m) {
	return m == BalanceMethod::exhaustive ? "exhaustive" : "constructive";
}

std::string_view to_string(ConstructiveStep s) {
	switch(s) {
	case ConstructiveStep::symmetric: return "symmetric";
	case ConstructiveStep::direct: return "direct";
	case ConstructiveStep::chain: return "chain";
	}
	return "?";
}

std::vector<PairEntry> all_pair_probabilities(const Poset& p, const CountOptions& options) {
	std::vector<PairEntry> out;
	if(is_chain(p)) return out;
	ExtensionCount total = count_extensions(p, options);
	for(Element x = 0; x < p.size(); ++x) {
		for(Element y = x + 1; y < p.size(); ++y) {
			if(p.comparable(x, y)) continue;
			out.push_back({x, y, prob_before(p, x, y, total, options)});
		}
	}
	return out;
}

std::optional<BalanceCertificate> find_balanced_exhaustive(const Poset& p, const CountOptions& options) {
	std::optional<BalanceCertificate> best;
	for(auto& e : all_pair_probabilities(p, options)) {
		if(!is_balanced(e.prob)) continue;
		// strict improvement only, so the first pair wins ties
		if(!best || compare_distance_to_half(e.prob, best->prob) < 0) {
			best = BalanceCertificate{e.x, e.y, e.prob, BalanceMethod::exhaustive, std::nullopt};
		}
	}
	return best;
}

std::vector<std::pair<Element, Element>> twin_pairs(const Poset& p, const LevelDecomposition& levels, int level) {
	std::vector<std::pair<Element, Element>> out;
	if(level < 0 || level >= static_cast<int>(levels.size())) return out;
	auto members = levels[level].to_vector();
	for(std::size_t i = 0; i < members.size(); ++i) {
		for(std::size_t j = i + 1; j < members.size(); ++j) {
			Element a = members[i], b = members[j];
			if(lower_covers(p, a) != lower_covers(p, b)) continue;
			if(!p.up(a).empty() && p.up(b).empty()) std::swap(a, b);
			out.emplace_back(a, b);
		}
	}
	return out;
}

TwinSelection select_ab(const Poset& p) {
	auto levels = level_decomposition(p);
	auto level = highest_twin_level(p, levels);
	if(!level) {
		throw PreconditionViolated("no level holds two elements with the same lower covers");
	}
	auto [a, b] = twin_pairs(p, levels, *level).front();
	return {*level, a, b};
}

int median_slot(const QDistribution& q) {
	const int slots = static_cast<int>(q.q.size());
	for(int r = 1; r <= slots; ++r) {
		if(above(q.prefix(r), 1, 2)) return r;
	}
	throw TheoremViolation("q-distribution never exceeds 1/2");
}

BalanceCertificate balance_from_twins(const Poset& p, Element a, Element b, const CountOptions& options) {
	if(a == b || a < 0 || b < 0 || a >= p.size() || b >= p.size()) {
		throw PreconditionViolated("twin pair needs two distinct elements of the poset");
	}
	if(p.comparable(a, b) || lower_covers(p, a) != lower_covers(p, b)) {
		throw PreconditionViolated("twin pair must share its lower covers");
	}
	if(!p.up(a).empty() && p.up(b).empty()) std::swap(a, b);

	ConstructiveTrace trace;
	trace.a = a;
	trace.b = b;
	auto certify = [&](Element x, Element y, PairProbability prob, ConstructiveStep step) {
		trace.step = step;
		return BalanceCertificate{x, y, std::move(prob), BalanceMethod::constructive, std::move(trace)};
	};

	const ExtensionCount total = count_extensions(p, options);
	PairProbability first = prob_before(p, a, b, total, options);
	trace.candidates_checked.emplace_back(a, b);
	if(p.up(a).empty() && p.up(b).empty()) {
		if(first != PairProbability(1, 2)) {
			throw TheoremViolation("twins with empty up-sets are not symmetric");
		}
		return certify(a, b, first, ConstructiveStep::symmetric);
	}
	if(is_balanced(first)) {
		return certify(a, b, first, ConstructiveStep::direct);
	}
	if(above(first, 2, 3)) {
		std::swap(a, b);
		trace.a = a;
		trace.b = b;
		trace.swapped = true;
	}

	// From here P(a ≺ b) < 1/3 and U(b) ∪ {b} must be a chain.
	ElementSet chain_set = p.up(b) | ElementSet::single(b);
	if(!is_chain(p, chain_set)) {
		throw TheoremViolation("U(" + p.label(b) + ") plus itself is not a chain");
	}
	trace.chain = chain_set.to_vector();
	std::sort(trace.chain.begin(), trace.chain.end(),
	          [&](Element u, Element v) { return p.less(u, v); });
	trace.q = q_distribution(p, a, trace.chain, options);
	trace.r = median_slot(trace.q);

	const int n = static_cast<int>(trace.chain.size());
	std::optional<int> best;
	PairProbability best_prob;
	for(int k : {trace.r - 1, trace.r}) {
		if(k < 1 || k > n) continue;
		Element bk = trace.chain[k - 1];
		trace.candidates_checked.emplace_back(a, bk);
		PairProbability prob = trace.q.prefix(k);
		if(!is_balanced(prob)) continue;
		if(!best || compare_distance_to_half(prob, best_prob) < 0) {
			best = k;
			best_prob = prob;
		}
	}
	if(!best) {
		throw TheoremViolation("no balanced candidate next to slot r=" + std::to_string(trace.r));
	}
	return certify(a, trace.chain[*best - 1], best_prob, ConstructiveStep::chain);
}

std::optional<BalanceCertificate> find_balanced_nfree(const Poset& p, const CountOptions& options) {
	if(auto w = find_n(p)) {
		throw NotNFree("poset contains an N: " + p.label(w->a) + " " + p.label(w->b) + " " + p.label(w->c) + " "
		               + p.label(w->d));
	}
	StripResult stripped = strip_forced_minimum(p);
	if(stripped.residual.empty()) return std::nullopt;

	const Poset& rest = stripped.residual;
	TwinSelection sel = select_ab(rest);
	BalanceCertificate cert = balance_from_twins(rest, sel.a, sel.b, options);

	auto back = [&](Element e) { return stripped.origin[e]; };
	cert.x = back(cert.x);
	cert.y = back(cert.y);
	ConstructiveTrace& t = *cert.trace;
	t.stripped_prefix = stripped.removed;
	t.level = sel.level;
	t.a = back(t.a);
	t.b = back(t.b);
	for(Element& e : t.chain) e = back(e);
	for(auto& [u, v] : t.candidates_checked) {
		u = back(u);
		v = back(v);
	}

	PairProbability recount = prob_before(p, cert.x, cert.y, options);
	if(recount != cert.prob || !is_balanced(recount) || p.comparable(cert.x, cert.y)) {
		throw TheoremViolation("constructive certificate for (" + p.label(cert.x) + ", " + p.label(cert.y)
		                       + ") does not re-verify");
	}
	return cert;
}

} // namespace posetkit
