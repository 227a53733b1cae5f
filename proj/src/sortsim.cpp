#include "posetkit/sortsim.hpp"

#include <algorithm>

#include "posetkit/balance.hpp"
#include "posetkit/errors.hpp"

namespace posetkit {

int info_lower_bound(const Poset& p, const CountOptions& options) {
	ExtensionCount e = count_extensions(p, options);
	if(e <= 1) return 0;
	// ⌈log₂ v⌉ = bit length of v - 1
	ExtensionCount m = e - 1;
	return static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

SortTranscript simulate_sort(const Poset& p, std::span<const Element> hidden, const CountOptions& options) {
	if(!is_linear_extension(p, hidden)) {
		throw HiddenNotAnExtension("hidden order is not a linear extension of the poset");
	}
	std::vector<int> position(p.size());
	for(int i = 0; i < static_cast<int>(hidden.size()); ++i) position[hidden[i]] = i;

	SortTranscript t;
	t.initial_e = count_extensions(p, options);
	Poset current = p;
	for(;;) {
		auto pairs = all_pair_probabilities(current, options);
		if(pairs.empty()) break;
		auto best = pairs.begin();
		for(auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
			if(compare_distance_to_half(it->prob, best->prob) < 0) best = it;
		}
		const bool yes = position[best->x] < position[best->y];
		t.queries.push_back({best->x, best->y, best->prob, yes});
		t.all_queries_balanced = t.all_queries_balanced && is_balanced(best->prob);
		current = yes ? add_relation(current, best->x, best->y) : add_relation(current, best->y, best->x);
	}
	return t;
}

Poset replay(const Poset& p, const SortTranscript& t) {
	Poset current = p;
	for(const auto& q : t.queries) {
		current = q.answer ? add_relation(current, q.x, q.y) : add_relation(current, q.y, q.x);
	}
	return current;
}

bool meets_ternary_lower_bound(const ExtensionCount& e, int k) {
	mpz_class power;
	mpz_ui_pow_ui(power.get_mpz_t(), 3, static_cast<unsigned long>(k));
	return power >= e;
}

bool meets_balanced_upper_bound(const ExtensionCount& e, int k) {
	mpz_class three, two;
	mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(k));
	mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k));
	return three <= e * two;
}

} // namespace posetkit
