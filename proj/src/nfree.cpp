#include "posetkit/nfree.hpp"

#include <algorithm>
#include <set>

#include "posetkit/errors.hpp"

namespace posetkit {

bool is_n_witness(const Poset& p, const NWitness& w) {
	const auto [a, b, c, d] = w;
	for(Element e : {a, b, c, d}) {
		if(e < 0 || e >= p.size()) return false;
	}
	auto covers = [&](Element lo, Element hi) { return upper_covers(p, lo).contains(hi); };
	return covers(a, b) && covers(c, b) && covers(c, d)
		&& !p.comparable(a, c) && !p.comparable(a, d) && !p.comparable(b, d);
}

std::optional<NWitness> find_n(const Poset& p) {
	const int n = p.size();
	std::vector<ElementSet> ucov(n), lcov(n);
	for(int x = 0; x < n; ++x) {
		ucov[x] = upper_covers(p, x);
		lcov[x] = lower_covers(p, x);
	}
	for(Element a = 0; a < n; ++a) {
		for(Element b : ucov[a].to_vector()) {
			for(Element c : lcov[b].to_vector()) {
				if(c == a || p.comparable(a, c)) continue;
				for(Element d : ucov[c].to_vector()) {
					if(d == b) continue;
					if(!p.comparable(a, d) && !p.comparable(b, d)) {
						return NWitness{a, b, c, d};
					}
				}
			}
		}
	}
	return std::nullopt;
}

bool is_n_free(const Poset& p) {
	return !find_n(p).has_value();
}

bool check_lemma2(const Poset& p) {
	const int n = p.size();
	std::vector<ElementSet> ucov(n), lcov(n);
	for(int x = 0; x < n; ++x) {
		ucov[x] = upper_covers(p, x);
		lcov[x] = lower_covers(p, x);
	}
	for(int x = 0; x < n; ++x) {
		for(int y = x + 1; y < n; ++y) {
			if(!(ucov[x] & ucov[y]).empty() && ucov[x] != ucov[y]) return false;
			if(!(lcov[x] & lcov[y]).empty() && lcov[x] != lcov[y]) return false;
		}
	}
	return true;
}

bool check_lemma2prime(const Poset& p) {
	auto level = level_of(p, level_decomposition(p));
	for(int x = 0; x < p.size(); ++x) {
		ElementSet ucov = upper_covers(p, x);
		if(ucov.empty()) continue;
		const int first = level[ucov.min()];
		bool same = true;
		ucov.for_each([&](Element y) { same = same && level[y] == first; });
		if(!same) return false;
	}
	return true;
}

std::optional<int> highest_twin_level(const Poset& p, const LevelDecomposition& levels) {
	for(int l = static_cast<int>(levels.size()) - 1; l >= 0; --l) {
		auto members = levels[l].to_vector();
		std::vector<ElementSet> lcovs;
		for(Element x : members) lcovs.push_back(lower_covers(p, x));
		std::sort(lcovs.begin(), lcovs.end());
		if(std::adjacent_find(lcovs.begin(), lcovs.end()) != lcovs.end()) return l;
	}
	return std::nullopt;
}

bool check_lemma3(const Poset& p) {
	auto levels = level_decomposition(p);
	auto level = highest_twin_level(p, levels);
	if(!level) return true;
	bool ok = true;
	levels[*level].for_each([&](Element x) {
		ok = ok && is_chain(p, p.up(x) | ElementSet::single(x));
	});
	return ok;
}

bool is_critical(const Poset& p, Element x, Element y) {
	return x != y && !p.comparable(x, y) && p.up(y).subset_of(p.up(x)) && p.down(x).subset_of(p.down(y));
}

std::vector<CriticalPair> critical_pairs(const Poset& p) {
	std::vector<CriticalPair> out;
	for(Element x = 0; x < p.size(); ++x) {
		for(Element y = 0; y < p.size(); ++y) {
			if(is_critical(p, x, y)) out.push_back({x, y});
		}
	}
	return out;
}

bool swap_check(const Poset& p, const CriticalPair& cp) {
	if(p.size() > kSwapCheckMaxSize) {
		throw CapacityExceeded("swap_check limited to " + std::to_string(kSwapCheckMaxSize) + " elements");
	}
	if(cp.x < 0 || cp.y < 0 || cp.x >= p.size() || cp.y >= p.size() || cp.x == cp.y) {
		throw PreconditionViolated("swap_check needs two distinct elements of the poset");
	}
	std::set<std::vector<Element>> images;
	std::size_t sources = 0;
	bool ok = true;
	CountOptions options;
	options.max_enumeration_size = kSwapCheckMaxSize;
	for_each_extension(
		p,
		[&](std::span<const Element> ext) {
			auto px = std::find(ext.begin(), ext.end(), cp.x);
			auto py = std::find(ext.begin(), ext.end(), cp.y);
			if(py > px) return;
			++sources;
			std::vector<Element> swapped(ext.begin(), ext.end());
			std::swap(swapped[px - ext.begin()], swapped[py - ext.begin()]);
			if(!is_linear_extension(p, swapped)) ok = false;
			images.insert(std::move(swapped));
		},
		options);
	// Each image places x before y by construction.
	return ok && images.size() == sources;
}

} // namespace posetkit
