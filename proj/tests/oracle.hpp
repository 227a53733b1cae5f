#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the raw definitions (permutations, 4-tuples, all relabelings) and
// share no code paths with the library beyond Poset::less.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "posetkit/poset.hpp"

namespace oracle {

using posetkit::Element;
using posetkit::Poset;

inline bool respects(const Poset& p, const std::vector<Element>& perm) {
	std::vector<int> pos(perm.size());
	for(std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
	for(int x = 0; x < p.size(); ++x) {
		for(int y = 0; y < p.size(); ++y) {
			if(p.less(x, y) && pos[x] > pos[y]) return false;
		}
	}
	return true;
}

/// Every linear extension, in lexicographic order.
inline std::vector<std::vector<Element>> extensions(const Poset& p) {
	std::vector<Element> perm(p.size());
	std::iota(perm.begin(), perm.end(), 0);
	std::vector<std::vector<Element>> out;
	do {
		if(respects(p, perm)) out.push_back(perm);
	} while(std::next_permutation(perm.begin(), perm.end()));
	return out;
}

inline mpz_class count(const Poset& p) {
	return static_cast<unsigned long>(extensions(p).size());
}

/// Share of extensions with x before y.
inline mpq_class before(const Poset& p, Element x, Element y) {
	auto all = extensions(p);
	unsigned long hits = 0;
	for(const auto& e : all) {
		auto px = std::find(e.begin(), e.end(), x);
		auto py = std::find(e.begin(), e.end(), y);
		hits += px < py;
	}
	mpq_class q(hits, static_cast<unsigned long>(all.size()));
	q.canonicalize();
	return q;
}

inline bool is_cover(const Poset& p, Element x, Element y) {
	if(!p.less(x, y)) return false;
	for(int z = 0; z < p.size(); ++z) {
		if(p.less(x, z) && p.less(z, y)) return false;
	}
	return true;
}

/// Literal N definition over one 4-tuple.
inline bool is_n(const Poset& p, Element a, Element b, Element c, Element d) {
	std::set<Element> distinct{a, b, c, d};
	if(distinct.size() != 4) return false;
	if(!is_cover(p, a, b) || !is_cover(p, c, b) || !is_cover(p, c, d)) return false;
	const Element t[4] = {a, b, c, d};
	int comparabilities = 0;
	for(int i = 0; i < 4; ++i) {
		for(int j = 0; j < 4; ++j) comparabilities += p.less(t[i], t[j]);
	}
	return comparabilities == 3;
}

inline bool contains_n(const Poset& p) {
	const int n = p.size();
	for(int a = 0; a < n; ++a)
		for(int b = 0; b < n; ++b)
			for(int c = 0; c < n; ++c)
				for(int d = 0; d < n; ++d)
					if(is_n(p, a, b, c, d)) return true;
	return false;
}

/// Unlabeled posets on n elements: every strict partial order on
/// {0..n-1} (full off-diagonal matrices), deduplicated by the minimum
/// encoding over all n! relabelings. Returns (classes, N-free classes).
inline std::pair<int, int> census(int n) {
	std::vector<std::pair<int, int>> cells;
	for(int i = 0; i < n; ++i)
		for(int j = 0; j < n; ++j)
			if(i != j) cells.emplace_back(i, j);
	std::set<unsigned long long> forms;
	int nfree = 0;
	for(unsigned long long mask = 0; mask < (1ull << cells.size()); ++mask) {
		std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
		for(std::size_t c = 0; c < cells.size(); ++c) {
			if((mask >> c) & 1) lt[cells[c].first][cells[c].second] = true;
		}
		bool order = true;
		for(int i = 0; i < n; ++i)
			for(int j = 0; j < n; ++j) {
				if(lt[i][j] && lt[j][i]) order = false;
				for(int k = 0; k < n; ++k)
					if(lt[i][j] && lt[j][k] && !lt[i][k]) order = false;
			}
		if(!order) continue;
		std::vector<int> perm(n);
		std::iota(perm.begin(), perm.end(), 0);
		unsigned long long best = ~0ull;
		do {
			unsigned long long bits = 0;
			for(int i = 0; i < n; ++i)
				for(int j = 0; j < n; ++j) bits = (bits << 1) | lt[perm[i]][perm[j]];
			best = std::min(best, bits);
		} while(std::next_permutation(perm.begin(), perm.end()));
		if(forms.insert(best).second) {
			posetkit::Relation rel;
			for(int i = 0; i < n; ++i)
				for(int j = 0; j < n; ++j)
					if(lt[i][j]) rel.emplace_back(i, j);
			nfree += !contains_n(Poset::unlabeled(n, rel));
		}
	}
	return {static_cast<int>(forms.size()), nfree};
}

} // namespace oracle
