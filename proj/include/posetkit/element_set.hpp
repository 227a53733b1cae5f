#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace posetkit {

/// Index of an element within its poset, 0 ≤ index < size().
using Element = int;

inline constexpr int kMaxElements = 64;

/// Subset of {0, ..., 63} stored as a single machine word.
class ElementSet {
public:
	constexpr ElementSet() = default;
	constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) { }

	static constexpr ElementSet single(Element x) {
		return ElementSet(std::uint64_t{1} << x);
	}
	/// {0, ..., n-1}
	static constexpr ElementSet first(int n) {
		return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
	}

	constexpr std::uint64_t bits() const { return bits_; }
	constexpr bool empty() const { return bits_ == 0; }
	constexpr int size() const { return std::popcount(bits_); }
	constexpr bool contains(Element x) const { return (bits_ >> x) & 1; }
	constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
	/// Smallest element; the set must be nonempty.
	constexpr Element min() const { return std::countr_zero(bits_); }

	constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
	constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

	constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
	constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
	constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
	constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
	constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
	constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
	constexpr bool operator==(const ElementSet&) const = default;
	constexpr auto operator<=>(const ElementSet&) const = default;

	/// Calls f(x) for each member in increasing order.
	template <typename F>
	constexpr void for_each(F f) const {
		std::uint64_t rest = bits_;
		while(rest) {
			f(static_cast<Element>(std::countr_zero(rest)));
			rest &= rest - 1;
		}
	}

	std::vector<Element> to_vector() const {
		std::vector<Element> out;
		out.reserve(size());
		for_each([&](Element x) { out.push_back(x); });
		return out;
	}

private:
	std::uint64_t bits_ = 0;
};

} // namespace posetkit
