#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "posetkit/balance.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/nfree.hpp"
#include "posetkit/verify.hpp"

using namespace posetkit;

namespace {

mpq_class frac(long n, long d) {
	mpq_class q(n, d);
	q.canonicalize();
	return q;
}

} // namespace

TEST_CASE("all_pair_probabilities") {
	auto n = all_pair_probabilities(fixtures::n_poset());
	REQUIRE(n.size() == 3);
	CHECK((n[0].x == 0 && n[0].y == 2 && n[0].prob == frac(2, 5)));
	CHECK((n[1].x == 0 && n[1].y == 3 && n[1].prob == frac(4, 5)));
	CHECK((n[2].x == 1 && n[2].y == 3 && n[2].prob == frac(2, 5)));

	CHECK(all_pair_probabilities(Poset::chain(4)).empty());
	auto two = all_pair_probabilities(Poset::antichain(2));
	REQUIRE(two.size() == 1);
	CHECK(two[0].prob == frac(1, 2));
}

TEST_CASE("find_balanced_exhaustive") {
	auto n = find_balanced_exhaustive(fixtures::n_poset());
	REQUIRE(n);
	CHECK(n->x == 0);
	CHECK(n->y == 2);
	CHECK(n->prob == frac(2, 5));
	CHECK(n->method == BalanceMethod::exhaustive);

	Poset f = fixtures::fork3();
	auto c = find_balanced_exhaustive(f);
	REQUIRE(c);
	CHECK(c->x == f.index_of("x"));
	CHECK(c->y == f.index_of("z"));
	CHECK(c->prob == frac(2, 3));

	CHECK_FALSE(find_balanced_exhaustive(Poset::chain(3)));
}

TEST_CASE("select_ab") {
	// b carries a chain, a does not
	Poset p = parse_poset("elements: a b c d\nb c\nc d\n");
	auto s = select_ab(p);
	CHECK(s.level == 0);
	CHECK(s.a == p.index_of("a"));
	CHECK(s.b == p.index_of("b"));

	Poset q = parse_poset("elements: b a c d\nb c\nc d\n");
	auto t = select_ab(q);
	CHECK(t.a == q.index_of("a"));
	CHECK(t.b == q.index_of("b"));

	Poset n = fixtures::n_poset();
	auto u = select_ab(n);
	CHECK(u.level == 0);
	CHECK(u.a == n.index_of("a"));
	CHECK(u.b == n.index_of("c"));

	Poset d = fixtures::diamond();
	auto v = select_ab(d);
	CHECK(v.level == 1);
	CHECK(v.a == d.index_of("x"));
	CHECK(v.b == d.index_of("y"));

	CHECK_THROWS_AS(select_ab(Poset::chain(3)), PreconditionViolated);
	CHECK_THROWS_AS(select_ab(Poset{}), PreconditionViolated);
}

TEST_CASE("median_slot") {
	QDistribution thirds{{frac(1, 3), frac(1, 3), frac(1, 3)}};
	CHECK(median_slot(thirds) == 2);
	QDistribution half{{frac(1, 2), frac(1, 2)}};
	CHECK(median_slot(half) == 2);
	QDistribution front{{frac(3, 5), frac(2, 5)}};
	CHECK(median_slot(front) == 1);
}

TEST_CASE("find_balanced_nfree examples") {
	CHECK_FALSE(find_balanced_nfree(fixtures::chain_abc()));
	CHECK_FALSE(find_balanced_nfree(Poset{}));

	Poset p = parse_poset("elements: a b b2\nb b2\n");
	auto cert = find_balanced_nfree(p);
	REQUIRE(cert);
	CHECK(cert->x == 0);
	CHECK(cert->y == 1);
	CHECK(cert->prob == frac(1, 3));
	CHECK(cert->method == BalanceMethod::constructive);
	REQUIRE(cert->trace);
	CHECK(cert->trace->step == ConstructiveStep::direct);

	Poset two = Poset::antichain(2);
	auto sym = find_balanced_nfree(two);
	REQUIRE(sym);
	CHECK(sym->prob == frac(1, 2));
	CHECK(sym->trace->step == ConstructiveStep::symmetric);

	CHECK_THROWS_AS(find_balanced_nfree(fixtures::n_poset()), NotNFree);
}

TEST_CASE("find_balanced_nfree through the chain step") {
	// a isolated next to the 3-chain b < c < d: P(a ≺ b) = 1/4, so the search
	// walks the chain; q = (1/4, 1/4, 1/4, 1/4), r = 3, candidates (a,c), (a,d)
	Poset p = parse_poset("elements: a b c d\nb c\nc d\n");
	auto cert = find_balanced_nfree(p);
	REQUIRE(cert);
	const auto& t = *cert->trace;
	CHECK(t.step == ConstructiveStep::chain);
	CHECK(t.a == 0);
	CHECK(t.b == 1);
	CHECK_FALSE(t.swapped);
	CHECK(t.chain == std::vector<Element>{1, 2, 3});
	CHECK(t.q.q == std::vector<mpq_class>{frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)});
	CHECK(t.r == 3);
	CHECK(t.candidates_checked == std::vector<std::pair<Element, Element>>{{0, 1}, {0, 2}, {0, 3}});
	CHECK(cert->x == 0);
	CHECK(cert->y == 2);
	CHECK(cert->prob == frac(1, 2));
	CHECK(cert->prob == oracle::before(p, 0, 2));
}

TEST_CASE("find_balanced_nfree after stripping and swapping") {
	// bottom 0 under {a, b}; a carries the 2-chain a < c < e, b carries b < d
	Poset p = parse_poset("elements: 0 a b c d e\n0 a\n0 b\na c\nc e\nb d\n");
	auto cert = find_balanced_nfree(p);
	REQUIRE(cert);
	CHECK(cert->trace->stripped_prefix == std::vector<Element>{0});
	CHECK(cert->prob == oracle::before(p, cert->x, cert->y));
	CHECK(is_balanced(cert->prob));
}

TEST_CASE("constructive search over enumerated N-free posets") {
	for(int n = 0; n <= 6; ++n) {
		for(const Poset& p : enumerate_posets(n)) {
			if(!is_n_free(p)) continue;
			auto cert = find_balanced_nfree(p);
			auto exhaustive = find_balanced_exhaustive(p);
			CHECK(cert.has_value() == !is_chain(p));
			CHECK(cert.has_value() == exhaustive.has_value());
			if(!cert) continue;
			CHECK(cert->prob == oracle::before(p, cert->x, cert->y));
			CHECK(is_balanced(cert->prob));
			CHECK(incomparable(p, cert->x, cert->y));

			const auto& t = *cert->trace;
			CHECK(lower_covers(p, t.a) == lower_covers(p, t.b));
			if(t.step == ConstructiveStep::chain) {
				ElementSet chain;
				for(Element e : t.chain) chain.insert(e);
				CHECK(is_chain(p, chain));
				CHECK(t.q.monotone_nonincreasing());
				CHECK(below(t.q.q.front(), 1, 3));
				CHECK(at_most(t.q.prefix(t.r - 1), 1, 2));
				CHECK(above(t.q.prefix(t.r), 1, 2));
			}
		}
	}
}

TEST_CASE("exact comparisons at the boundary") {
	CHECK(is_balanced(frac(1, 3)));
	CHECK(is_balanced(frac(2, 3)));
	CHECK_FALSE(is_balanced(frac(1, 3) - mpq_class(1, 1000000000)));
	CHECK_FALSE(is_balanced(frac(2, 3) + mpq_class(1, 1000000000)));
	CHECK(compare_distance_to_half(frac(2, 5), frac(3, 5)) == 0);
	CHECK(compare_distance_to_half(frac(2, 5), frac(1, 3)) < 0);
	CHECK(to_string(frac(2, 5)) == "2/5");
	CHECK(to_string(mpq_class(1)) == "1/1");
	CHECK(parse_fraction("4/10") == frac(2, 5));
	CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
	CHECK_THROWS_AS(parse_fraction("1/00"), ParseError);
	CHECK_THROWS_AS(parse_fraction("x"), ParseError);
}
