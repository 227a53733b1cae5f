#include "posetkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetkit/balance.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/nfree.hpp"
#include "posetkit/sortsim.hpp"
#include "posetkit/verify.hpp"

namespace posetkit {

namespace {

using nlohmann::json;

struct Context {
	std::istream& in;
	std::ostream& out;
	bool json = false;
	CountOptions count;
};

Poset load(Context& ctx, const std::string& path) {
	std::string text;
	if(path == "-") {
		std::ostringstream buf;
		buf << ctx.in.rdbuf();
		text = buf.str();
	} else {
		std::ifstream file(path);
		if(!file) throw DomainError("cannot open '" + path + "'");
		std::ostringstream buf;
		buf << file.rdbuf();
		text = buf.str();
	}
	return parse_poset(text);
}

json labels_of(const Poset& p, std::span<const Element> xs) {
	json out = json::array();
	for(Element x : xs) out.push_back(p.label(x));
	return out;
}

std::string joined(const Poset& p, std::span<const Element> xs) {
	std::string out;
	for(Element x : xs) {
		if(!out.empty()) out += ' ';
		out += p.label(x);
	}
	return out;
}

json certificate_json(const Poset& p, const BalanceCertificate& c) {
	json j{{"pair", {p.label(c.x), p.label(c.y)}},
	       {"prob", to_string(c.prob)},
	       {"method", to_string(c.method)}};
	if(c.trace) {
		const ConstructiveTrace& t = *c.trace;
		json q = json::array();
		for(const auto& v : t.q.q) q.push_back(to_string(v));
		json candidates = json::array();
		for(auto [u, v] : t.candidates_checked) candidates.push_back({p.label(u), p.label(v)});
		j["trace"] = {{"stripped_prefix", labels_of(p, t.stripped_prefix)},
		              {"level", t.level},
		              {"a", p.label(t.a)},
		              {"b", p.label(t.b)},
		              {"swapped", t.swapped},
		              {"step", to_string(t.step)},
		              {"chain", labels_of(p, t.chain)},
		              {"q", q},
		              {"r", t.r},
		              {"candidates_checked", candidates}};
	} else {
		j["trace"] = nullptr;
	}
	return j;
}

void print_certificate(std::ostream& out, const Poset& p, const BalanceCertificate& c) {
	out << "pair " << p.label(c.x) << ' ' << p.label(c.y) << '\n';
	out << "prob " << to_string(c.prob) << '\n';
	out << "method " << to_string(c.method) << '\n';
	if(!c.trace) return;
	const ConstructiveTrace& t = *c.trace;
	out << "stripped " << (t.stripped_prefix.empty() ? "-" : joined(p, t.stripped_prefix)) << '\n';
	out << "level " << t.level << '\n';
	out << "twins " << p.label(t.a) << ' ' << p.label(t.b) << (t.swapped ? " (swapped)" : "") << '\n';
	out << "step " << to_string(t.step) << '\n';
	if(t.step == ConstructiveStep::chain) {
		out << "chain " << joined(p, t.chain) << '\n';
		out << "q";
		for(const auto& v : t.q.q) out << ' ' << to_string(v);
		out << '\n';
		out << "r " << t.r << '\n';
	}
	out << "candidates";
	for(auto [u, v] : t.candidates_checked) out << ' ' << p.label(u) << ',' << p.label(v);
	out << '\n';
}

int cmd_count(Context& ctx, const std::string& file) {
	Poset p = load(ctx, file);
	ExtensionCount e = count_extensions(p, ctx.count);
	if(ctx.json) {
		ctx.out << json{{"count", e.get_str()}}.dump() << '\n';
	} else {
		ctx.out << e.get_str() << '\n';
	}
	return kExitOk;
}

int cmd_prob(Context& ctx, const std::string& file, const std::string& xs, const std::string& ys) {
	Poset p = load(ctx, file);
	Element x = p.index_of(xs), y = p.index_of(ys);
	PairProbability prob = prob_before(p, x, y, ctx.count);
	if(ctx.json) {
		ctx.out << json{{"pair", {xs, ys}}, {"prob", to_string(prob)}}.dump() << '\n';
	} else {
		ctx.out << to_string(prob) << '\n';
	}
	return kExitOk;
}

int cmd_pairs(Context& ctx, const std::string& file) {
	Poset p = load(ctx, file);
	auto entries = all_pair_probabilities(p, ctx.count);
	if(ctx.json) {
		json arr = json::array();
		for(const auto& e : entries) {
			arr.push_back({{"pair", {p.label(e.x), p.label(e.y)}}, {"prob", to_string(e.prob)}});
		}
		ctx.out << arr.dump() << '\n';
	} else {
		for(const auto& e : entries) {
			ctx.out << p.label(e.x) << ' ' << p.label(e.y) << ' ' << to_string(e.prob) << '\n';
		}
	}
	return kExitOk;
}

int cmd_balanced(Context& ctx, const std::string& file, bool constructive) {
	Poset p = load(ctx, file);
	auto cert = constructive ? find_balanced_nfree(p, ctx.count) : find_balanced_exhaustive(p, ctx.count);
	if(!cert) {
		const bool chain = is_chain(p);
		if(ctx.json) {
			ctx.out << json{{"certificate", nullptr}, {"chain", chain}}.dump() << '\n';
		} else {
			ctx.out << (chain ? "none (chain)" : "none") << '\n';
		}
		return kExitOk;
	}
	if(ctx.json) {
		ctx.out << certificate_json(p, *cert).dump() << '\n';
	} else {
		print_certificate(ctx.out, p, *cert);
	}
	return kExitOk;
}

int cmd_nfree(Context& ctx, const std::string& file) {
	Poset p = load(ctx, file);
	auto w = find_n(p);
	if(ctx.json) {
		json j{{"nfree", !w}};
		j["witness"] = w ? json{{"a", p.label(w->a)}, {"b", p.label(w->b)}, {"c", p.label(w->c)}, {"d", p.label(w->d)}}
		                 : json(nullptr);
		ctx.out << j.dump() << '\n';
	} else if(w) {
		ctx.out << "contains N: a=" << p.label(w->a) << " b=" << p.label(w->b) << " c=" << p.label(w->c)
		        << " d=" << p.label(w->d) << '\n';
	} else {
		ctx.out << "N-free\n";
	}
	return kExitOk;
}

int cmd_levels(Context& ctx, const std::string& file) {
	Poset p = load(ctx, file);
	auto levels = level_decomposition(p);
	if(ctx.json) {
		json arr = json::array();
		for(ElementSet l : levels) arr.push_back(labels_of(p, l.to_vector()));
		ctx.out << json{{"levels", arr}}.dump() << '\n';
	} else {
		for(std::size_t i = 0; i < levels.size(); ++i) {
			ctx.out << 'P' << i << ": " << joined(p, levels[i].to_vector()) << '\n';
		}
	}
	return kExitOk;
}

int cmd_verify(Context& ctx, int max_n, int jobs, int cap) {
	EnumerationOptions options;
	options.max_size = cap;
	VerificationReport report = verify_theorem(max_n, jobs, options);
	if(ctx.json) {
		json arr = json::array();
		for(const auto& s : report.sizes) {
			arr.push_back({{"n", s.n},
			               {"total", s.total},
			               {"nfree", s.nfree},
			               {"checked", s.checked},
			               {"theorem_passes", s.theorem_passes},
			               {"theorem_failures", s.theorem_failures},
			               {"lemma_passes", s.lemma_passes},
			               {"lemma_failures", s.lemma_failures},
			               {"chain_steps", s.chain_steps},
			               {"twin_choices", s.twin_choices},
			               {"critical_pairs", s.critical_pairs},
			               {"lemma2_counterexamples", s.lemma2_counterexamples},
			               {"failures", s.failures()}});
		}
		ctx.out << json{{"sizes", arr}, {"failures", report.failures()}}.dump() << '\n';
	} else {
		ctx.out << report.table() << '\n' << report.machine_lines();
	}
	return report.failures() == 0 ? kExitOk : kExitVerification;
}

int cmd_sortsim(Context& ctx, const std::string& file, const std::string& hidden_text) {
	Poset p = load(ctx, file);
	std::vector<Element> hidden;
	std::istringstream tokens(hidden_text);
	for(std::string tok; tokens >> tok;) hidden.push_back(p.index_of(tok));
	SortTranscript t = simulate_sort(p, hidden, ctx.count);
	const int lb = info_lower_bound(p, ctx.count);
	if(ctx.json) {
		json queries = json::array();
		for(const auto& q : t.queries) {
			queries.push_back({{"pair", {p.label(q.x), p.label(q.y)}}, {"prob", to_string(q.prob)}, {"answer", q.answer}});
		}
		ctx.out << json{{"queries", queries},
		                {"comparisons", t.comparisons()},
		                {"initial_e", t.initial_e.get_str()},
		                {"lb", lb},
		                {"balanced", t.all_queries_balanced}}
		               .dump()
		        << '\n';
	} else {
		for(const auto& q : t.queries) {
			ctx.out << "? " << p.label(q.x) << ' ' << p.label(q.y) << "  p=" << to_string(q.prob) << "  -> "
			        << (q.answer ? "yes" : "no") << '\n';
		}
		ctx.out << "comparisons=" << t.comparisons() << " lb=" << lb
		        << " balanced=" << (t.all_queries_balanced ? "true" : "false") << '\n';
	}
	return kExitOk;
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
	CLI::App app{"Exact linear-extension and balanced-pair toolkit for finite posets", "posetkit"};
	app.require_subcommand(1);
	Context ctx{in, out, false, CountOptions{}};
	app.add_flag("--json", ctx.json, "Emit JSON instead of text");
	app.add_option("--memo-budget", ctx.count.max_memo_entries, "Maximum memoized order ideals");

	std::string file, x, y, hidden;
	bool constructive = false;
	int max_n = 0, jobs = 1, cap = EnumerationOptions{}.max_size;

	auto* count = app.add_subcommand("count", "Number of linear extensions");
	count->add_option("file", file, "Poset file, or - for stdin")->required();
	auto* prob = app.add_subcommand("prob", "P(X before Y) as a reduced fraction");
	prob->add_option("file", file)->required();
	prob->add_option("x", x)->required();
	prob->add_option("y", y)->required();
	auto* pairs = app.add_subcommand("pairs", "All incomparable pairs with probabilities");
	pairs->add_option("file", file)->required();
	auto* balanced = app.add_subcommand("balanced", "Find a balanced pair");
	balanced->add_option("file", file)->required();
	balanced->add_flag("--constructive", constructive, "Use the N-free constructive search");
	auto* nfree = app.add_subcommand("nfree", "Test for an N and print a witness");
	nfree->add_option("file", file)->required();
	auto* levels = app.add_subcommand("levels", "Level decomposition");
	levels->add_option("file", file)->required();
	auto* verify = app.add_subcommand("verify", "Exhaustively verify the balanced-pair theorem and lemmas");
	verify->add_option("--max-n", max_n, "Largest poset size")->required()->check(CLI::NonNegativeNumber);
	verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
	verify->add_option("--cap", cap, "Enumeration size cap")->check(CLI::Range(0, kMaxCanonicalSize));
	auto* sortsim = app.add_subcommand("sortsim", "Sort a hidden extension by balanced comparisons");
	sortsim->add_option("file", file)->required();
	sortsim->add_option("--hidden", hidden, "Hidden linear extension, space separated")->required();

	try {
		std::reverse(args.begin(), args.end());
		app.parse(args);
	} catch(const CLI::ParseError& e) {
		return app.exit(e, out, err);
	}

	try {
		if(*count) return cmd_count(ctx, file);
		if(*prob) return cmd_prob(ctx, file, x, y);
		if(*pairs) return cmd_pairs(ctx, file);
		if(*balanced) return cmd_balanced(ctx, file, constructive);
		if(*nfree) return cmd_nfree(ctx, file);
		if(*levels) return cmd_levels(ctx, file);
		if(*verify) return cmd_verify(ctx, max_n, jobs, cap);
		if(*sortsim) return cmd_sortsim(ctx, file, hidden);
	} catch(const DomainError& e) {
		err << "error: " << e.what() << '\n';
		return kExitDomainError;
	} catch(const CapacityExceeded& e) {
		err << "capacity exceeded: " << e.what() << '\n';
		return kExitCapacity;
	} catch(const TheoremViolation& e) {
		err << "verification failure: " << e.what() << '\n';
		return kExitVerification;
	}
	return kExitOk;
}

} // namespace posetkit
