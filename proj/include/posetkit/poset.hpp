#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/element_set.hpp"

namespace posetkit {

/// Ordered pair (x, y) of element indices, read as x < y.
using OrderedPair = std::pair<Element, Element>;
/// Sorted, duplicate-free list of ordered pairs.
using Relation = std::vector<OrderedPair>;

/// Smallest transitively closed superset of `relation` on n elements.
/// Throws CycleDetected if the closure would relate an element to itself,
/// CapacityExceeded if n > 64.
Relation transitive_closure(std::span<const OrderedPair> relation, int n);

/// Finite partially ordered set, stored as its strict order <.
///
/// Elements are indexed 0..n-1 in insertion order; labels are only used at
/// I/O boundaries. Values are immutable after construction.
class Poset {
public:
	/// The empty poset.
	Poset() = default;

	/// Builds the poset whose order is the transitive closure of `relation`.
	/// Throws DuplicateElement, CycleDetected, or CapacityExceeded (more than
	/// 64 elements).
	Poset(std::vector<std::string> labels, std::span<const OrderedPair> relation);

	/// Elements labelled "0", "1", ..., "n-1".
	static Poset unlabeled(int n, std::span<const OrderedPair> relation);
	static Poset chain(int n);
	static Poset antichain(int n);

	int size() const { return static_cast<int>(labels_.size()); }
	bool empty() const { return labels_.empty(); }
	ElementSet elements() const { return ElementSet::first(size()); }

	const std::string& label(Element x) const { return labels_.at(x); }
	const std::vector<std::string>& labels() const { return labels_; }
	/// Throws UnknownElement.
	Element index_of(std::string_view label) const;

	/// Strict order test x < y.
	bool less(Element x, Element y) const { return up_[x].contains(y); }
	bool comparable(Element x, Element y) const { return x == y || less(x, y) || less(y, x); }

	/// {y : y < x}
	ElementSet down(Element x) const { return down_[x]; }
	/// {y : x < y}
	ElementSet up(Element x) const { return up_[x]; }

	/// The closed strict relation, sorted.
	Relation relation() const;

	/// Elements of `s` with nothing below them inside `s`.
	ElementSet minimal_in(ElementSet s) const;
	/// Elements of `s` with nothing above them inside `s`.
	ElementSet maximal_in(ElementSet s) const;

	bool operator==(const Poset&) const = default;

private:
	std::vector<std::string> labels_;
	std::vector<ElementSet> up_;
	std::vector<ElementSet> down_;
};

/// Parses the line-oriented poset text format:
///
///     # comment
///     elements: a b c d
///     a b
///     c b
///
/// Relation lines need not be covers; the closure is taken.
Poset parse_poset(std::string_view text);

/// Inverse of parse_poset up to relation presentation: writes the cover
/// relation.
std::string format_poset(const Poset& p);

/// Upper-cover relation: (x, y) with x < y and no z with x < z < y.
Relation covers(const Poset& p);
/// Upper covers of x.
ElementSet upper_covers(const Poset& p, Element x);
/// Lower covers of x.
ElementSet lower_covers(const Poset& p, Element x);

ElementSet down_set(const Poset& p, Element x);
ElementSet up_set(const Poset& p, Element x);
bool incomparable(const Poset& p, Element x, Element y);
/// True iff every two distinct members of s are comparable.
bool is_chain(const Poset& p, ElementSet s);
bool is_chain(const Poset& p);

/// Levels P_0, ..., P_h: P_0 = Min(P), P_l = Min of what remains.
using LevelDecomposition = std::vector<ElementSet>;
LevelDecomposition level_decomposition(const Poset& p);
/// Level index of every element, from a decomposition.
std::vector<int> level_of(const Poset& p, const LevelDecomposition& levels);

/// Subposet induced on `keep`, relabelled 0..|keep|-1 in increasing index
/// order; labels are carried over.
struct Subposet {
	Poset poset;
	/// origin[i] is the index in the parent of the subposet's element i.
	std::vector<Element> origin;
};
Subposet induced(const Poset& p, ElementSet keep);

struct StripResult {
	Poset residual;
	/// Removed elements (indices in the input poset), in removal order.
	std::vector<Element> removed;
	/// Index in the input poset of every residual element.
	std::vector<Element> origin;
};
/// Repeatedly deletes the unique minimal element while there is one.
StripResult strip_forced_minimum(const Poset& p);

} // namespace posetkit
