#include "posetkit/linext.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

struct Overflow { };

inline void accumulate(std::uint64_t& total, std::uint64_t v) {
	if(__builtin_add_overflow(total, v, &total)) throw Overflow{};
}
inline void accumulate(mpz_class& total, const mpz_class& v) {
	total += v;
}

template <typename Count>
class IdealCounter {
public:
	IdealCounter(const Poset& p, std::size_t budget) : p_(p), budget_(budget) {
		memo_.reserve(64);
	}

	Count count(ElementSet ideal) {
		if(ideal.size() <= 1) return Count(1);
		auto it = memo_.find(ideal.bits());
		if(it != memo_.end()) return it->second;

		Count total(0);
		p_.maximal_in(ideal).for_each([&](Element m) {
			accumulate(total, count(ideal - ElementSet::single(m)));
		});
		if(memo_.size() >= budget_) {
			throw CapacityExceeded("order-ideal memo exceeded " + std::to_string(budget_) + " entries");
		}
		memo_.emplace(ideal.bits(), total);
		return total;
	}

private:
	const Poset& p_;
	std::size_t budget_;
	std::unordered_map<std::uint64_t, Count> memo_;
};

} // namespace

ExtensionCount count_extensions(const Poset& p, const CountOptions& options) {
	try {
		IdealCounter<std::uint64_t> fast(p, options.max_memo_entries);
		std::uint64_t c = fast.count(p.elements());
		mpz_class out;
		mpz_import(out.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
		return out;
	} catch(const Overflow&) {
		IdealCounter<mpz_class> exact(p, options.max_memo_entries);
		return exact.count(p.elements());
	}
}

std::size_t count_ideals(const Poset& p, const CountOptions& options) {
	std::unordered_map<std::uint64_t, char> seen;
	std::vector<ElementSet> stack{p.elements()};
	seen.emplace(p.elements().bits(), 0);
	while(!stack.empty()) {
		ElementSet ideal = stack.back();
		stack.pop_back();
		p.maximal_in(ideal).for_each([&](Element m) {
			ElementSet next = ideal - ElementSet::single(m);
			if(seen.emplace(next.bits(), 0).second) {
				if(seen.size() > options.max_memo_entries) {
					throw CapacityExceeded("order-ideal count exceeded budget");
				}
				stack.push_back(next);
			}
		});
	}
	return seen.size();
}

void for_each_extension(const Poset& p, const std::function<void(std::span<const Element>)>& visit,
                        const CountOptions& options) {
	if(p.size() > options.max_enumeration_size) {
		throw CapacityExceeded("extension enumeration limited to " + std::to_string(options.max_enumeration_size)
		                       + " elements");
	}
	const int n = p.size();
	std::vector<Element> prefix;
	prefix.reserve(n);

	auto recurse = [&](auto&& self, ElementSet placed) -> void {
		if(static_cast<int>(prefix.size()) == n) {
			visit(prefix);
			return;
		}
		ElementSet rest = p.elements() - placed;
		p.minimal_in(rest).for_each([&](Element x) {
			prefix.push_back(x);
			self(self, placed | ElementSet::single(x));
			prefix.pop_back();
		});
	};
	recurse(recurse, ElementSet{});
}

std::vector<std::vector<Element>> enumerate_extensions(const Poset& p, const CountOptions& options) {
	std::vector<std::vector<Element>> out;
	for_each_extension(
		p, [&](std::span<const Element> ext) { out.emplace_back(ext.begin(), ext.end()); }, options);
	return out;
}

bool is_linear_extension(const Poset& p, std::span<const Element> sequence) {
	if(static_cast<int>(sequence.size()) != p.size()) return false;
	ElementSet placed;
	for(Element x : sequence) {
		if(x < 0 || x >= p.size() || placed.contains(x)) return false;
		if(!p.down(x).subset_of(placed)) return false;
		placed.insert(x);
	}
	return true;
}

Poset add_relation(const Poset& p, Element x, Element y) {
	if(x < 0 || x >= p.size()) throw UnknownElement("#" + std::to_string(x));
	if(y < 0 || y >= p.size()) throw UnknownElement("#" + std::to_string(y));
	if(x == y || p.less(y, x)) {
		throw WouldCreateCycle("adding " + p.label(x) + " < " + p.label(y) + " would create a cycle");
	}
	if(p.less(x, y)) return p;
	Relation rel = p.relation();
	rel.emplace_back(x, y);
	return Poset(p.labels(), rel);
}

namespace {

// Validates the pair; returns the probability when it is decided by the order.
std::optional<PairProbability> decided(const Poset& p, Element x, Element y) {
	if(x < 0 || x >= p.size()) throw UnknownElement("#" + std::to_string(x));
	if(y < 0 || y >= p.size()) throw UnknownElement("#" + std::to_string(y));
	if(x == y) throw PreconditionViolated("prob_before needs two distinct elements");
	if(p.less(x, y)) return PairProbability(1);
	if(p.less(y, x)) return PairProbability(0);
	return std::nullopt;
}

} // namespace

PairProbability prob_before(const Poset& p, Element x, Element y, const CountOptions& options) {
	if(auto known = decided(p, x, y)) return *known;
	return prob_before(p, x, y, count_extensions(p, options), options);
}

PairProbability prob_before(const Poset& p, Element x, Element y, const ExtensionCount& total,
                            const CountOptions& options) {
	if(auto known = decided(p, x, y)) return *known;
	PairProbability out(count_extensions(add_relation(p, x, y), options), total);
	out.canonicalize();
	return out;
}

PairProbability QDistribution::prefix(int k) const {
	PairProbability sum(0);
	for(int j = 0; j < k && j < static_cast<int>(q.size()); ++j) sum += q[j];
	return sum;
}

bool QDistribution::monotone_nonincreasing() const {
	for(std::size_t j = 1; j < q.size(); ++j) {
		if(q[j] > q[j - 1]) return false;
	}
	return true;
}

QDistribution q_distribution(const Poset& p, Element a, std::span<const Element> chain,
                             const CountOptions& options) {
	if(a < 0 || a >= p.size()) throw UnknownElement("#" + std::to_string(a));
	for(Element b : chain) {
		if(b < 0 || b >= p.size()) throw UnknownElement("#" + std::to_string(b));
		if(b == a) throw PreconditionViolated("element lies on its own chain");
	}
	for(std::size_t j = 1; j < chain.size(); ++j) {
		if(!p.less(chain[j - 1], chain[j])) {
			throw NotAChain(p.label(chain[j - 1]) + " < " + p.label(chain[j]) + " does not hold");
		}
	}

	ExtensionCount total = count_extensions(p, options);
	QDistribution out;
	PairProbability previous(0);
	for(Element b : chain) {
		PairProbability before = prob_before(p, a, b, total, options);
		out.q.push_back(before - previous);
		previous = before;
	}
	out.q.push_back(PairProbability(1) - previous);

	// The chain has a fixed relative order in every extension, so the slots
	// of a partition the extension set.
	PairProbability sum(0);
	for(const auto& v : out.q) {
		if(sgn(v) < 0) throw TheoremViolation("negative slot probability in q-distribution");
		sum += v;
	}
	if(sum != 1) throw TheoremViolation("q-distribution does not sum to 1");
	return out;
}

} // namespace posetkit
