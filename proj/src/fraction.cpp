#include "posetkit/fraction.hpp"

#include "posetkit/errors.hpp"

namespace posetkit {

bool at_least(const mpq_class& value, long num, long den) {
	return value.get_num() * den >= value.get_den() * num;
}

bool at_most(const mpq_class& value, long num, long den) {
	return value.get_num() * den <= value.get_den() * num;
}

bool is_balanced(const mpq_class& value) {
	return at_least(value, 1, 3) && at_most(value, 2, 3);
}

int compare_distance_to_half(const mpq_class& a, const mpq_class& b) {
	// |2n - d| / (2d); compare |2na - da| * db against |2nb - db| * da
	mpz_class da = abs(2 * a.get_num() - a.get_den()) * b.get_den();
	mpz_class db = abs(2 * b.get_num() - b.get_den()) * a.get_den();
	return cmp(da, db) < 0 ? -1 : (cmp(da, db) > 0 ? 1 : 0);
}

std::string to_string(const mpq_class& value) {
	return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpq_class parse_fraction(std::string_view text) {
	auto valid_int = [](std::string_view s) {
		if(s.empty()) return false;
		std::size_t i = (s[0] == '-') ? 1 : 0;
		if(i == s.size()) return false;
		for(; i < s.size(); ++i) {
			if(s[i] < '0' || s[i] > '9') return false;
		}
		return true;
	};
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if(!valid_int(num) || !valid_int(den) || den.front() == '-') {
		throw ParseError("malformed fraction '" + std::string(text) + "'");
	}
	mpz_class d(std::string{den});
	if(d == 0) {
		throw ParseError("zero denominator in '" + std::string(text) + "'");
	}
	mpq_class out(mpz_class(std::string{num}), d);
	out.canonicalize();
	return out;
}

} // namespace posetkit
