#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posetkit/balance.hpp"
#include "posetkit/cli.hpp"
#include "posetkit/fraction.hpp"

using namespace posetkit;

namespace {

struct Run {
	int status;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
	std::istringstream in(input);
	std::ostringstream out, err;
	int status = run_cli(std::move(args), in, out, err);
	return {status, out.str(), err.str()};
}

std::string fixture(const char* name) {
	return std::string(POSETKIT_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cli count, prob, pairs") {
	CHECK(run({"count", fixture("n.poset")}).out == "5\n");
	CHECK(run({"prob", fixture("n.poset"), "a", "c"}).out == "2/5\n");
	CHECK(run({"prob", fixture("n.poset"), "a", "b"}).out == "1/1\n");
	CHECK(run({"pairs", fixture("n.poset")}).out == "a c 2/5\na d 4/5\nb d 2/5\n");
	CHECK(run({"pairs", fixture("fork3.poset")}).out == "x z 2/3\ny z 1/3\n");
}

TEST_CASE("cli reads stdin for -") {
	auto r = run({"count", "-"}, "elements: a b c\n");
	CHECK(r.status == kExitOk);
	CHECK(r.out == "6\n");
}

TEST_CASE("cli balanced") {
	auto chain = run({"balanced", "--constructive", fixture("chain3.poset")});
	CHECK(chain.status == kExitOk);
	CHECK(chain.out == "none (chain)\n");

	auto n = run({"balanced", fixture("n.poset")});
	CHECK(n.out == "pair a c\nprob 2/5\nmethod exhaustive\n");

	auto d = run({"--json", "balanced", "--constructive", fixture("diamond.poset")});
	auto j = nlohmann::json::parse(d.out);
	CHECK(j["pair"] == nlohmann::json({"x", "y"}));
	CHECK(j["prob"] == "1/2");
	CHECK(j["method"] == "constructive");
	CHECK(j["trace"]["stripped_prefix"] == nlohmann::json({"0"}));
	CHECK(j["trace"]["step"] == "direct");
}

TEST_CASE("cli nfree and levels") {
	CHECK(run({"nfree", fixture("n.poset")}).out == "contains N: a=a b=b c=c d=d\n");
	CHECK(run({"nfree", fixture("diamond.poset")}).out == "N-free\n");
	CHECK(run({"levels", fixture("n.poset")}).out == "P0: a c\nP1: b d\n");
	auto j = nlohmann::json::parse(run({"--json", "levels", fixture("diamond.poset")}).out);
	CHECK(j["levels"].size() == 3);
}

TEST_CASE("cli sortsim") {
	auto r = run({"sortsim", fixture("n.poset"), "--hidden", "c d a b"});
	CHECK(r.status == kExitOk);
	CHECK(r.out.starts_with("? "));
	CHECK(r.out.find("  p=") != std::string::npos);
	CHECK(r.out.find(" lb=3 balanced=true\n") != std::string::npos);

	auto bad = run({"sortsim", fixture("n.poset"), "--hidden", "b a c d"});
	CHECK(bad.status == kExitDomainError);
}

TEST_CASE("cli verify") {
	auto r = run({"verify", "--max-n", "4", "--jobs", "2"});
	CHECK(r.status == kExitOk);
	CHECK(r.out.find("n=4 total=16 nfree=15 checked=14 failures=0\n") != std::string::npos);
	CHECK(run({"verify", "--max-n", "9"}).status == kExitCapacity);
}

TEST_CASE("cli error statuses") {
	auto cycle = run({"count", "-"}, "elements: p q\np q\nq p\n");
	CHECK(cycle.status == kExitDomainError);
	CHECK_FALSE(cycle.err.empty());
	CHECK(run({"prob", fixture("n.poset"), "a", "zz"}).status == kExitDomainError);
	CHECK(run({"count", fixture("missing.poset")}).status == kExitDomainError);
	CHECK(run({"balanced", "--constructive", fixture("n.poset")}).status == kExitDomainError);
	CHECK(run({"--memo-budget", "3", "count", "-"}, "elements: a b c d e f\n").status == kExitCapacity);
	CHECK(run({}).status != kExitOk);
}

TEST_CASE("cli pairs --json round-trips through the library") {
	for(const char* name : {"n.poset", "fork3.poset", "diamond.poset"}) {
		auto r = run({"--json", "pairs", fixture(name)});
		auto arr = nlohmann::json::parse(r.out);
		std::ifstream file(fixture(name));
		std::stringstream text;
		text << file.rdbuf();
		Poset p = parse_poset(text.str());
		auto entries = all_pair_probabilities(p);
		REQUIRE(arr.size() == entries.size());
		for(std::size_t i = 0; i < arr.size(); ++i) {
			Element x = p.index_of(arr[i]["pair"][0].get<std::string>());
			Element y = p.index_of(arr[i]["pair"][1].get<std::string>());
			CHECK(parse_fraction(arr[i]["prob"].get<std::string>()) == prob_before(p, x, y));
		}
	}
}

TEST_CASE("cli output is deterministic") {
	for(auto args : std::vector<std::vector<std::string>>{{"--json", "balanced", "--constructive", fixture("fork3.poset")},
	                                                      {"pairs", fixture("n.poset")},
	                                                      {"verify", "--max-n", "5", "--jobs", "1"}}) {
		auto first = run(args);
		auto second = run(args);
		if(args[0] == "verify") {
			// the table carries timings; compare the machine lines
			CHECK(first.out.substr(first.out.find("n=0")) == second.out.substr(second.out.find("n=0")));
		} else {
			CHECK(first.out == second.out);
		}
	}
}
