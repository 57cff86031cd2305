// Dissection-to-tree rules and the linearization map.
//
// Each rule turns (polygon, dissection) into a signed tree whose vertices are
// the regions of the dissection:
//   phi1 - edges flow from the root side to the cutoff side, all labels raw;
//   phi2 - phi1 shape, but the cutoff-side region of every backward arrow
//          carries the reversed label with sign (-1)^weight;
//   phi3 - phi1 shape with global sign (-1)^(number of backward arrows used);
//   phi4 - edges flow from the left region to the right region;
//   phi_re / phi_fv / phi_sigma_fv - perturbations of phi2 resp. phi4: the
//          edges of a designated arrow class are reversed, one factor of -1
//          per reversed edge that is actually present.
//
// The linearization of a rule sums the signed linear extensions of these
// trees over all dissections of the polygon.
#pragma once

#include "polyhopf/polygon.hpp"
#include "polyhopf/trees.hpp"
#include "polyhopf/word.hpp"
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace polyhopf {

enum class Rule
{
	phi1,
	phi2,
	phi3,
	phi4,
	phi_re,
	phi_fv,
	phi_sigma_fv
};

inline const std::vector<std::pair<Rule, std::string>> &rule_names()
{
	static const std::vector<std::pair<Rule, std::string>> names = {
	    {Rule::phi1, "phi1"},         {Rule::phi2, "phi2"}, {Rule::phi3, "phi3"},
	    {Rule::phi4, "phi4"},         {Rule::phi_re, "phi_re"}, {Rule::phi_fv, "phi_fv"},
	    {Rule::phi_sigma_fv, "phi_sigma_fv"}};
	return names;
}

inline std::string to_string(Rule r)
{
	for (auto const &[rule, name] : rule_names())
		if (rule == r)
			return name;
	return "?";
}

inline Rule rule_from_string(const std::string &name)
{
	for (auto const &[rule, n] : rule_names())
		if (n == name)
			return rule;
	throw std::invalid_argument("unknown rule '" + name + "'");
}

inline Rule base_rule(Rule r)
{
	switch (r)
	{
	case Rule::phi_re:
		return Rule::phi2;
	case Rule::phi_fv:
	case Rule::phi_sigma_fv:
		return Rule::phi4;
	default:
		return r;
	}
}

// arrows whose tree edges a perturbed rule reverses (empty for base rules)
inline std::vector<Arrow> designated_arrows(Rule r, const Polygon &p)
{
	std::vector<Arrow> out;
	int m = p.side_count();
	for (Arrow a : nontrivial_arrows(p))
	{
		bool pick = false;
		switch (r)
		{
		case Rule::phi_re:
			pick = (a.j == m);
			break;
		case Rule::phi_fv:
			pick = (a.i == 1);
			break;
		case Rule::phi_sigma_fv:
			pick = (a.i == m);
			break;
		default:
			break;
		}
		if (pick)
			out.push_back(a);
	}
	return out;
}

// Signed region tree of one dissection. Vertices are indexed like
// decomposition.regions; edges[k] realizes arrows[k].
struct DissectionTree
{
	Tree tree; // raw (region-indexed) form
	Rational coeff = Rational(1);
	RegionDecomposition decomposition;
	Dissection arrows;
};

inline DissectionTree dissection_tree(Rule rule, const Polygon &p, const Dissection &d)
{
	if (!is_dissection(p, d))
		throw std::invalid_argument("not a dissection of the polygon: " + to_string(d));
	DissectionTree out;
	out.decomposition = regions(p, d);
	out.arrows = d;
	std::sort(out.arrows.begin(), out.arrows.end());

	Rule base = base_rule(rule);
	for (auto const &reg : out.decomposition.regions)
		out.tree.labels.push_back(reg.poly);

	std::vector<Arrow> flips = designated_arrows(rule, p);
	for (Arrow a : out.arrows)
	{
		const ArrowInfo *info = nullptr;
		for (auto const &ai : out.decomposition.arrows)
			if (ai.arrow == a)
				info = &ai;
		int from, to;
		if (base == Rule::phi4)
		{
			from = info->left_region;
			to = info->right_region;
		}
		else
		{
			from = info->root_side_region;
			to = info->cutoff_side_region;
		}
		if (std::find(flips.begin(), flips.end(), a) != flips.end())
		{
			std::swap(from, to);
			out.coeff = -out.coeff;
		}
		out.tree.edges.emplace_back(from, to);
	}

	if (base == Rule::phi2)
	{
		std::set<int> reversed;
		for (auto const &ai : out.decomposition.arrows)
			if (arrow_is_backward(ai.arrow))
				reversed.insert(ai.cutoff_side_region);
		for (int r : reversed)
		{
			out.tree.labels[r] = tau(out.tree.labels[r]);
			if (out.tree.labels[r].weight() % 2)
				out.coeff = -out.coeff;
		}
	}
	if (rule == Rule::phi3)
	{
		int back = 0;
		for (Arrow a : out.arrows)
			if (arrow_is_backward(a))
				++back;
		if (back % 2)
			out.coeff = -out.coeff;
	}
	return out;
}

// signed labels at the two ends of the single edge of a one-arrow tree
struct EdgeLabels
{
	Rational coeff;
	Polygon source; // label at the edge tail
	Polygon target; // label at the edge head
};

inline EdgeLabels edge_labels(Rule rule, const Polygon &p, Arrow a)
{
	DissectionTree dt = dissection_tree(rule, p, Dissection{a});
	auto [from, to] = dt.tree.edges[0];
	return EdgeLabels{dt.coeff, dt.tree.labels[from], dt.tree.labels[to]};
}

// --- linearization ------------------------------------------------------------

inline FormalSum<Word> lambda_phi_uncached(Rule rule, const Polygon &p)
{
	FormalSum<Word> out;
	for (auto const &d : enumerate_dissections(p))
	{
		DissectionTree dt = dissection_tree(rule, p, d);
		FormalSum<Word> lin = linearize(normalize(dt.tree));
		lin *= dt.coeff;
		out += lin;
	}
	return out;
}

// Memoized: identical (rule, polygon) queries recur constantly across the
// identity verifiers.
inline FormalSum<Word> lambda_phi(Rule rule, const Polygon &p)
{
	using Key = std::pair<int, std::string>;
	static std::map<Key, FormalSum<Word>> cache;
	static std::mutex mtx;
	Key key{(int)rule, to_string(p)};
	{
		std::lock_guard<std::mutex> lock(mtx);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}
	FormalSum<Word> val = lambda_phi_uncached(rule, p);
	std::lock_guard<std::mutex> lock(mtx);
	return cache.emplace(key, std::move(val)).first->second;
}

} // namespace polyhopf
