#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace posetkit {

/// Nonnegative arbitrary-precision count of linear extensions.
using ExtensionCount = mpz_class;
/// Exact probability, always held in lowest terms with a positive denominator.
using PairProbability = mpq_class;

// Every comparison below is an integer cross-multiplication on the reduced
// numerator and denominator; no floating point is involved.

/// value >= num/den, for den > 0.
bool at_least(const mpq_class& value, long num, long den);
/// value <= num/den, for den > 0.
bool at_most(const mpq_class& value, long num, long den);
/// value < num/den, for den > 0.
inline bool below(const mpq_class& value, long num, long den) { return !at_least(value, num, den); }
/// value > num/den, for den > 0.
inline bool above(const mpq_class& value, long num, long den) { return !at_most(value, num, den); }

/// 1/3 <= value <= 2/3.
bool is_balanced(const mpq_class& value);

/// Sign of |a - 1/2| - |b - 1/2|.
int compare_distance_to_half(const mpq_class& a, const mpq_class& b);

/// "num/den", including "0/1" and "1/1".
std::string to_string(const mpq_class& value);
/// Parses "num/den" or an integer; throws ParseError.
mpq_class parse_fraction(std::string_view text);

} // namespace posetkit
