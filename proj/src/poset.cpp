#include "posetkit/poset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

void check_capacity(int n) {
	if(n > kMaxElements) {
		throw CapacityExceeded("poset has " + std::to_string(n) + " elements; at most "
		                       + std::to_string(kMaxElements) + " are supported");
	}
}

// Closes the successor sets in place (Warshall over bit rows).
void close_rows(std::vector<ElementSet>& up) {
	const int n = static_cast<int>(up.size());
	for(int k = 0; k < n; ++k) {
		for(int i = 0; i < n; ++i) {
			if(up[i].contains(k)) {
				up[i] |= up[k];
			}
		}
	}
}

std::vector<ElementSet> rows_from(std::span<const OrderedPair> relation, int n) {
	check_capacity(n);
	std::vector<ElementSet> up(n);
	for(auto [x, y] : relation) {
		if(x < 0 || y < 0 || x >= n || y >= n) {
			throw DomainError("relation references element index out of range");
		}
		up[x].insert(y);
	}
	close_rows(up);
	for(int i = 0; i < n; ++i) {
		if(up[i].contains(i)) {
			throw CycleDetected("relation contains a cycle through element index " + std::to_string(i));
		}
	}
	return up;
}

std::vector<std::string_view> split_ws(std::string_view s) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while(i < s.size()) {
		while(i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
		std::size_t j = i;
		while(j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
		if(j > i) out.push_back(s.substr(i, j - i));
		i = j;
	}
	return out;
}

} // namespace

Relation transitive_closure(std::span<const OrderedPair> relation, int n) {
	auto up = rows_from(relation, n);
	Relation out;
	for(int x = 0; x < n; ++x) {
		up[x].for_each([&](Element y) { out.emplace_back(x, y); });
	}
	return out;
}

Poset::Poset(std::vector<std::string> labels, std::span<const OrderedPair> relation)
	: labels_(std::move(labels)) {
	const int n = size();
	check_capacity(n);
	std::unordered_set<std::string_view> seen;
	for(const auto& l : labels_) {
		if(!seen.insert(l).second) {
			throw DuplicateElement(l);
		}
	}
	up_ = rows_from(relation, n);
	down_.assign(n, ElementSet{});
	for(int x = 0; x < n; ++x) {
		up_[x].for_each([&](Element y) { down_[y].insert(x); });
	}
}

Poset Poset::unlabeled(int n, std::span<const OrderedPair> relation) {
	check_capacity(n);
	std::vector<std::string> labels;
	labels.reserve(n);
	for(int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
	return Poset(std::move(labels), relation);
}

Poset Poset::chain(int n) {
	Relation r;
	for(int i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
	return unlabeled(n, r);
}

Poset Poset::antichain(int n) {
	return unlabeled(n, {});
}

Element Poset::index_of(std::string_view label) const {
	auto it = std::find(labels_.begin(), labels_.end(), label);
	if(it == labels_.end()) {
		throw UnknownElement(std::string(label));
	}
	return static_cast<Element>(it - labels_.begin());
}

Relation Poset::relation() const {
	Relation out;
	for(int x = 0; x < size(); ++x) {
		up_[x].for_each([&](Element y) { out.emplace_back(x, y); });
	}
	return out;
}

ElementSet Poset::minimal_in(ElementSet s) const {
	ElementSet out;
	s.for_each([&](Element x) {
		if((down_[x] & s).empty()) out.insert(x);
	});
	return out;
}

ElementSet Poset::maximal_in(ElementSet s) const {
	ElementSet out;
	s.for_each([&](Element x) {
		if((up_[x] & s).empty()) out.insert(x);
	});
	return out;
}

Poset parse_poset(std::string_view text) {
	std::vector<std::string> labels;
	bool have_elements = false;
	std::vector<std::pair<std::string_view, std::string_view>> pending;
	std::vector<int> pending_lines;

	int line_no = 0;
	std::size_t pos = 0;
	while(pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if(end == std::string_view::npos) end = text.size();
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		++line_no;

		auto tokens = split_ws(line);
		if(tokens.empty() || tokens.front().front() == '#') {
			continue;
		}
		const std::string where = "line " + std::to_string(line_no) + ": ";
		if(tokens.front().starts_with("elements:")) {
			if(have_elements) {
				throw ParseError(where + "second 'elements:' line");
			}
			have_elements = true;
			std::string_view rest = line.substr(line.find("elements:") + 9);
			for(auto tok : split_ws(rest)) {
				if(tok.find(',') != std::string_view::npos) {
					throw ParseError(where + "element tokens may not contain commas");
				}
				labels.emplace_back(tok);
			}
			continue;
		}
		if(tokens.size() != 2) {
			throw ParseError(where + "expected a relation line 'A B'");
		}
		pending.emplace_back(tokens[0], tokens[1]);
		pending_lines.push_back(line_no);
	}
	if(!have_elements) {
		throw ParseError("missing 'elements:' line");
	}
	check_capacity(static_cast<int>(labels.size()));

	// Duplicates are rejected by the constructor; resolve tokens first so an
	// undeclared token is reported as such.
	Poset declared(labels, {});
	Relation rel;
	rel.reserve(pending.size());
	for(auto [a, b] : pending) {
		Element x = declared.index_of(a);
		Element y = declared.index_of(b);
		if(x == y) {
			throw CycleDetected("element '" + std::string(a) + "' related to itself");
		}
		rel.emplace_back(x, y);
	}
	return Poset(std::move(labels), rel);
}

std::string format_poset(const Poset& p) {
	std::ostringstream out;
	out << "elements:";
	for(const auto& l : p.labels()) out << ' ' << l;
	out << '\n';
	for(auto [x, y] : covers(p)) {
		out << p.label(x) << ' ' << p.label(y) << '\n';
	}
	return out.str();
}

ElementSet upper_covers(const Poset& p, Element x) {
	ElementSet above = p.up(x);
	return p.minimal_in(above);
}

ElementSet lower_covers(const Poset& p, Element x) {
	ElementSet below = p.down(x);
	return p.maximal_in(below);
}

Relation covers(const Poset& p) {
	Relation out;
	for(int x = 0; x < p.size(); ++x) {
		upper_covers(p, x).for_each([&](Element y) { out.emplace_back(x, y); });
	}
	return out;
}

ElementSet down_set(const Poset& p, Element x) {
	if(x < 0 || x >= p.size()) throw UnknownElement("#" + std::to_string(x));
	return p.down(x);
}

ElementSet up_set(const Poset& p, Element x) {
	if(x < 0 || x >= p.size()) throw UnknownElement("#" + std::to_string(x));
	return p.up(x);
}

bool incomparable(const Poset& p, Element x, Element y) {
	if(x < 0 || x >= p.size()) throw UnknownElement("#" + std::to_string(x));
	if(y < 0 || y >= p.size()) throw UnknownElement("#" + std::to_string(y));
	return !p.comparable(x, y);
}

bool is_chain(const Poset& p, ElementSet s) {
	bool ok = true;
	s.for_each([&](Element x) {
		// x must be comparable to every other member of s
		if(!(s - ElementSet::single(x)).subset_of(p.up(x) | p.down(x))) ok = false;
	});
	return ok;
}

bool is_chain(const Poset& p) {
	return is_chain(p, p.elements());
}

LevelDecomposition level_decomposition(const Poset& p) {
	LevelDecomposition levels;
	ElementSet rest = p.elements();
	while(!rest.empty()) {
		ElementSet level = p.minimal_in(rest);
		levels.push_back(level);
		rest -= level;
	}
	return levels;
}

std::vector<int> level_of(const Poset& p, const LevelDecomposition& levels) {
	std::vector<int> out(p.size(), -1);
	for(int l = 0; l < static_cast<int>(levels.size()); ++l) {
		levels[l].for_each([&](Element x) { out[x] = l; });
	}
	return out;
}

Subposet induced(const Poset& p, ElementSet keep) {
	Subposet out;
	out.origin = keep.to_vector();
	std::vector<int> position(p.size(), -1);
	std::vector<std::string> labels;
	for(int i = 0; i < static_cast<int>(out.origin.size()); ++i) {
		position[out.origin[i]] = i;
		labels.push_back(p.label(out.origin[i]));
	}
	Relation rel;
	for(Element x : out.origin) {
		(p.up(x) & keep).for_each([&](Element y) { rel.emplace_back(position[x], position[y]); });
	}
	out.poset = Poset(std::move(labels), rel);
	return out;
}

StripResult strip_forced_minimum(const Poset& p) {
	StripResult out;
	ElementSet rest = p.elements();
	for(;;) {
		ElementSet mins = p.minimal_in(rest);
		if(mins.size() != 1) break;
		out.removed.push_back(mins.min());
		rest -= mins;
	}
	Subposet sub = induced(p, rest);
	out.residual = std::move(sub.poset);
	out.origin = std::move(sub.origin);
	return out;
}

} // namespace posetkit
