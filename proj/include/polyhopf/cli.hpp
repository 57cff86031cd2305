// Command-line front end. `run` is the whole program (the binary's main just
// forwards to it) so the tests can drive it in-process.
//
// Exit codes: 0 success / identity holds, 1 identity fails, 2 usage error.
#pragma once

#include "CLI11.hpp"
#include "json.hpp"
#include "polyhopf/identities.hpp"
#include "polyhopf/numeric.hpp"
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace polyhopf {

namespace cli_detail {

using nlohmann::json;

inline json sum_json(const FormalSum<Word> &s)
{
	json arr = json::array();
	for (auto const &[w, c] : s.terms())
		arr.push_back({{"coeff", to_string(c)}, {"term", to_string(w)}});
	return arr;
}

inline json block_sum_json(const FormalSum<WedgeBlock> &s)
{
	json arr = json::array();
	for (auto const &[b, c] : s.terms())
		arr.push_back({{"coeff", to_string(c)}, {"term", to_string(b)}});
	return arr;
}

inline json report_json(const IdentityReport &r)
{
	// timing is deliberately omitted: output must be byte-identical across runs
	return json{{"schema", "1"},
	            {"identity", r.identity},
	            {"polygon", to_string(r.polygon)},
	            {"holds", r.holds},
	            {"defect", r.defect}};
}

inline void print_report_text(std::ostream &out, const IdentityReport &r)
{
	out << r.identity << " " << to_string(r.polygon) << " "
	    << (r.holds ? "holds" : "FAILS");
	if (!r.holds)
		out << " defect=" << r.defect;
	out << "\n";
}

inline std::vector<double> parse_reals(const std::string &text)
{
	std::vector<double> out;
	std::stringstream ss(text);
	std::string tok;
	while (std::getline(ss, tok, ','))
		out.push_back(std::stod(tok));
	return out;
}

} // namespace cli_detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	using cli_detail::json;
	CLI::App app{"exact combinatorics of decorated polygon dissections"};
	app.require_subcommand(1);

	std::string polygon_text, rule_text = "phi2", dissection_text, identity_text;
	std::string format = "text", args_text;
	int max_weight = 4, depth = 200, threads = 0;
	double tol = 1e-8;

	auto add_common = [&](CLI::App *sub, bool need_polygon) {
		if (need_polygon)
			sub->add_option("--polygon", polygon_text, "comma-separated side labels")
			    ->required();
		sub->add_option("--format", format, "text or json")
		    ->check(CLI::IsMember({"text", "json"}));
	};

	CLI::App *c_diss = app.add_subcommand("dissections", "list all dissections of a polygon");
	add_common(c_diss, true);

	CLI::App *c_tree = app.add_subcommand("tree", "signed tree of one dissection under a rule");
	add_common(c_tree, true);
	c_tree->add_option("--rule", rule_text, "phi1..phi4, phi_re, phi_fv, phi_sigma_fv");
	c_tree->add_option("--dissection", dissection_text, "arrows, e.g. 2->4,3->4");

	CLI::App *c_lambda = app.add_subcommand("lambda", "linearization of a rule on a polygon");
	add_common(c_lambda, true);
	c_lambda->add_option("--rule", rule_text);

	CLI::App *c_boundary = app.add_subcommand("boundary", "rule differential of a polygon");
	add_common(c_boundary, true);
	c_boundary->add_option("--rule", rule_text);

	CLI::App *c_verify = app.add_subcommand("verify", "check one identity on one polygon");
	add_common(c_verify, true);
	c_verify->add_option("--identity", identity_text, "registered identity name")->required();

	CLI::App *c_all = app.add_subcommand("verify-all", "run the whole identity table");
	add_common(c_all, false);
	c_all->add_option("--max-weight", max_weight, "largest polygon weight checked");
	c_all->add_option("--threads", threads, "worker count (default: POLYHOPF_THREADS or cores)");

	CLI::App *c_eval = app.add_subcommand("eval", "numeric iterated integral at sample points");
	c_eval->add_option("--args", args_text, "decreasing positive reals x1,..,x_{n+1}")
	    ->required();
	c_eval->add_option("--depth", depth, "series truncation");
	c_eval->add_option("--tol", tol, "tail-bound tolerance");

	std::vector<std::string> argv_rev(args.rbegin(), args.rend());
	try
	{
		app.parse(argv_rev);
	}
	catch (const CLI::ParseError &e)
	{
		if (e.get_exit_code() == 0)
		{
			out << app.help();
			return 0;
		}
		err << e.what() << "\n" << app.help();
		return 2;
	}

	try
	{
		if (c_diss->parsed())
		{
			Polygon p = polygon_from_string(polygon_text);
			auto ds = enumerate_dissections(p);
			if (format == "json")
			{
				json j{{"schema", "1"}, {"polygon", to_string(p)}};
				j["dissections"] = json::array();
				for (auto const &d : ds)
					j["dissections"].push_back(to_string(d));
				out << j.dump() << "\n";
			}
			else
				for (auto const &d : ds)
					out << to_string(d) << "\n";
		}
		else if (c_tree->parsed())
		{
			Polygon p = polygon_from_string(polygon_text);
			Rule rule = rule_from_string(rule_text);
			Dissection d = dissection_from_string(dissection_text);
			DissectionTree dt = dissection_tree(rule, p, d);
			Tree t = normalize(dt.tree);
			if (format == "json")
			{
				json j{{"schema", "1"},
				       {"coeff", to_string(dt.coeff)},
				       {"tree", to_string(t)}};
				out << j.dump() << "\n";
			}
			else
				out << to_string(dt.coeff) << " * " << to_string(t) << "\n";
		}
		else if (c_lambda->parsed())
		{
			Polygon p = polygon_from_string(polygon_text);
			Rule rule = rule_from_string(rule_text);
			FormalSum<Word> s = lambda_phi(rule, p);
			if (format == "json")
			{
				json j{{"schema", "1"}, {"terms", cli_detail::sum_json(s)}};
				out << j.dump() << "\n";
			}
			else
				out << s.to_string([](const Word &w) { return to_string(w); }) << "\n";
		}
		else if (c_boundary->parsed())
		{
			Polygon p = polygon_from_string(polygon_text);
			Rule rule = rule_from_string(rule_text);
			FormalSum<WedgeBlock> s = boundary(rule, p);
			if (format == "json")
			{
				json j{{"schema", "1"}, {"terms", cli_detail::block_sum_json(s)}};
				out << j.dump() << "\n";
			}
			else
				out << s.to_string([](const WedgeBlock &b) { return to_string(b); })
				    << "\n";
		}
		else if (c_verify->parsed())
		{
			Polygon p = polygon_from_string(polygon_text);
			IdentityReport r = verify(identity_text, p);
			if (format == "json")
				out << cli_detail::report_json(r).dump() << "\n";
			else
				cli_detail::print_report_text(out, r);
			return r.holds ? 0 : 1;
		}
		else if (c_all->parsed())
		{
			auto reports = verify_all(max_weight, threads);
			bool all = true;
			for (auto const &r : reports)
			{
				all = all && r.holds;
				if (format == "json")
					out << cli_detail::report_json(r).dump() << "\n";
				else
					cli_detail::print_report_text(out, r);
			}
			if (format != "json")
				out << (all ? "all identities hold" : "FAILURES above") << "\n";
			return all ? 0 : 1;
		}
		else if (c_eval->parsed())
		{
			std::vector<double> x = cli_detail::parse_reals(args_text);
			EvalResult r = iterated_integral(x, EvalConfig{depth, tol});
			json j{{"schema", "1"}, {"value", r.value}, {"tail_bound", r.tail_bound}};
			out << j.dump() << "\n";
			return (r.tail_bound < tol) ? 0 : 1;
		}
	}
	catch (const std::exception &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}

} // namespace polyhopf
