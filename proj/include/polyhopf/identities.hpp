// One verifier per theorem/lemma on the symbolic side: each computes both
// sides of the identity from first principles (rules + bar modules) and
// reports the defect. Identities marked "mod q_n" (reflection quotient) or
// "mod r_n" (rotation quotient) compare after the quotient map.
#pragma once

#include "polyhopf/bar.hpp"
#include "polyhopf/rules.hpp"
#include "polyhopf/trees.hpp"
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polyhopf {

struct IdentityReport
{
	std::string identity;
	Polygon polygon;
	bool holds = false;
	std::string defect; // canonical text of the defect ("0" when the identity holds)
	double millis = 0.0;
};

namespace detail {

inline std::string word_fmt(const Word &w) { return to_string(w); }

inline std::string sum_text(const FormalSum<Word> &s)
{
	return s.to_string(word_fmt);
}

inline std::string tensor_text(const FormalSum<WordTensor> &s)
{
	return s.to_string([](const WordTensor &t) { return to_string(t); });
}

inline FormalSum<Word> unit_word() { return FormalSum<Word>(Word{}); }

inline FormalSum<WordTensor> tensor(const FormalSum<Word> &a, const FormalSum<Word> &b)
{
	return combine<Word, Word, WordTensor>(
	    a, b, [](const Word &x, const Word &y) { return WordTensor{x, y}; });
}

inline FormalSum<Word> shuffle_fold(const std::vector<FormalSum<Word>> &parts)
{
	FormalSum<Word> acc = unit_word();
	for (auto const &p : parts)
		acc = shuffle(acc, p);
	return acc;
}

// nonempty dissections of p contained in the arrow set s
inline std::vector<Dissection> dissections_within(const Polygon &p, const std::vector<Arrow> &s)
{
	std::vector<Dissection> out;
	for (auto const &d : enumerate_dissections(p))
	{
		if (d.empty())
			continue;
		bool inside = true;
		for (Arrow a : d)
			if (std::find(s.begin(), s.end(), a) == s.end())
				inside = false;
		if (inside)
			out.push_back(d);
	}
	return out;
}

// shuffle of the rule's linearization over all signed labels of T_{rule,d}(P)
inline FormalSum<Word> label_shuffle(Rule rule, const Polygon &p, const Dissection &d,
                                     Rational &sign_out)
{
	DissectionTree dt = dissection_tree(rule, p, d);
	sign_out = dt.coeff;
	std::vector<FormalSum<Word>> parts;
	for (auto const &label : dt.tree.labels)
		parts.push_back(lambda_phi(rule, label));
	return shuffle_fold(parts);
}

} // namespace detail

// --- individual identity computations ---------------------------------------

// Lemma "2^I": for every dissection tree T and edge subset I (|I| <= cap),
// sum over k in 2^I of the linearization of T with the edges of k reversed
// equals the shuffle of the linearizations of the components of T minus I.
inline FormalSum<Word> trees_2I_defect(const Polygon &p, int cap = 3)
{
	FormalSum<Word> defect;
	for (auto const &d : enumerate_dissections(p))
	{
		if (d.empty())
			continue;
		Tree t = dissection_tree(Rule::phi1, p, d).tree;
		size_t ne = t.edges.size();
		for (size_t mask = 1; mask < (size_t(1) << ne); ++mask)
		{
			if ((int)__builtin_popcountll(mask) > cap)
				continue;
			std::vector<std::pair<int, int>> I;
			for (size_t e = 0; e < ne; ++e)
				if (mask & (size_t(1) << e))
					I.push_back(t.edges[e]);
			FormalSum<Word> lhs;
			for (size_t k = 0;; ++k)
			{
				// iterate over subsets of I via sub-mask positions
				if (k >= (size_t(1) << I.size()))
					break;
				std::vector<std::pair<int, int>> flips;
				for (size_t e = 0; e < I.size(); ++e)
					if (k & (size_t(1) << e))
						flips.push_back(I[e]);
				lhs += linearize(flip_edges(t, flips));
			}
			// forest: drop the edges in I
			Tree cutT = t;
			cutT.edges.clear();
			for (size_t e = 0; e < ne; ++e)
				if (!(mask & (size_t(1) << e)))
					cutT.edges.push_back(t.edges[e]);
			FormalSum<Word> rhs = linear_extensions({cutT});
			defect += lhs - rhs;
			if (!defect.is_zero())
				return defect; // fail fast with the first nonzero defect
		}
	}
	return defect;
}

// Theorem "edge switch": pert = base with the edges of the arrow class s
// reversed. pert(P) - base(P) = sum over nonempty dissections d within s of
// (-1)^|d| sign_base(d) shuffle_j Lambda_base(label_j of T_{base,d}(P)).
inline FormalSum<Word> edgeswitch_defect(Rule base, Rule pert, const Polygon &p)
{
	FormalSum<Word> lhs = lambda_phi(pert, p) - lambda_phi(base, p);
	FormalSum<Word> rhs;
	std::vector<Arrow> s = designated_arrows(pert, p);
	if (pert == Rule::phi3)
	{
		s.clear();
		for (Arrow a : nontrivial_arrows(p))
			if (arrow_is_backward(a))
				s.push_back(a);
	}
	for (auto const &d : detail::dissections_within(p, s))
	{
		Rational sign;
		FormalSum<Word> term = detail::label_shuffle(base, p, d, sign);
		term *= sign * ((d.size() % 2) ? Rational(-1) : Rational(1));
		rhs += term;
	}
	return lhs - rhs;
}

// Corollary "linear trees": when T_{base,d}(P) is linear for d within s,
// pert(P) - base(P) = sum over single arrows a in s of
// -sign_base(a) Lambda_base(root label) shuffle Lambda_pert(leaf label).
inline FormalSum<Word> lineartrees_defect(Rule base, Rule pert, const Polygon &p)
{
	FormalSum<Word> lhs = lambda_phi(pert, p) - lambda_phi(base, p);
	FormalSum<Word> rhs;
	for (Arrow a : designated_arrows(pert, p))
	{
		EdgeLabels el = edge_labels(base, p, a);
		FormalSum<Word> term =
		    shuffle(lambda_phi(base, el.source), lambda_phi(pert, el.target));
		term *= -el.coeff;
		rhs += term;
	}
	return lhs - rhs;
}

// leaf variant: the pert rule carries the root-label factor instead
inline FormalSum<Word> lineartrees_leaf_defect(Rule base, Rule pert, const Polygon &p)
{
	FormalSum<Word> lhs = lambda_phi(pert, p) - lambda_phi(base, p);
	FormalSum<Word> rhs;
	for (Arrow a : designated_arrows(pert, p))
	{
		EdgeLabels el = edge_labels(base, p, a);
		FormalSum<Word> term =
		    shuffle(lambda_phi(pert, el.source), lambda_phi(base, el.target));
		term *= -el.coeff;
		rhs += term;
	}
	return lhs - rhs;
}

// Lemma "re differential": exact form of lineartrees for (phi2, phi_re)
inline FormalSum<Word> redif_defect(const Polygon &p)
{
	int m = p.side_count(), n = p.weight();
	FormalSum<Word> lhs = lambda_phi(Rule::phi2, p) - lambda_phi(Rule::phi_re, p);
	FormalSum<Word> rhs;
	for (int i = 2; i <= n; ++i)
	{
		SplitResult sr = split(p, Arrow{i, m});
		rhs += shuffle(lambda_phi(Rule::phi2, sr.root_polygon),
		               lambda_phi(Rule::phi_re, sr.cutoff_polygon));
	}
	return lhs - rhs;
}

// Theorem "orientation sign": Lambda_re(P) + (-1)^n Lambda_2(tau P) dies in
// the reflection quotient q_n.
inline FormalSum<Word> orientsign_defect(const Polygon &p)
{
	int n = p.weight();
	FormalSum<Word> x = lambda_phi(Rule::phi_re, p);
	FormalSum<Word> y = lambda_phi(Rule::phi2, tau(p));
	if (n % 2)
		x -= y;
	else
		x += y;
	return quotient(x, q_spec(n));
}

// combined theorem: q_n(Lambda_2(P) + (-1)^n Lambda_2(tau P)) equals
// q_n(sum_i (-1)^(n-i) Lambda_re(root part) shuffle Lambda_re(tau cutoff))
inline FormalSum<Word> tau_combined_defect(const Polygon &p)
{
	int m = p.side_count(), n = p.weight();
	FormalSum<Word> lhs = lambda_phi(Rule::phi2, p);
	FormalSum<Word> y = lambda_phi(Rule::phi2, tau(p));
	if (n % 2)
		lhs -= y;
	else
		lhs += y;
	FormalSum<Word> rhs;
	for (int i = 2; i <= n; ++i)
	{
		SplitResult sr = split(p, Arrow{i, m});
		FormalSum<Word> term = shuffle(lambda_phi(Rule::phi_re, sr.root_polygon),
		                               lambda_phi(Rule::phi_re, tau(sr.cutoff_polygon)));
		if ((n - i) % 2)
			term *= Rational(-1);
		rhs += term;
	}
	return quotient(lhs - rhs, q_spec(n));
}

// Theorem "relate": q_n(Lambda_2(P)) = q_n(Lambda_4(P) + backward-arrow
// edge-switch sum). The raw (pre-quotient) defect is also of interest.
inline FormalSum<Word> relate_raw_defect(const Polygon &p)
{
	FormalSum<Word> lhs = lambda_phi(Rule::phi2, p);
	FormalSum<Word> rhs = lambda_phi(Rule::phi4, p);
	std::vector<Arrow> b;
	for (Arrow a : nontrivial_arrows(p))
		if (arrow_is_backward(a))
			b.push_back(a);
	for (auto const &d : detail::dissections_within(p, b))
	{
		Rational sign;
		FormalSum<Word> term = detail::label_shuffle(Rule::phi4, p, d, sign);
		term *= sign * ((d.size() % 2) ? Rational(-1) : Rational(1));
		rhs += term;
	}
	return lhs - rhs;
}

inline FormalSum<Word> relate_defect(const Polygon &p)
{
	return quotient(relate_raw_defect(p), q_spec(p.weight()));
}

// Lemma "fv linearization": exact form of lineartrees for (phi4, phi_fv)
inline FormalSum<Word> fvlin_defect(const Polygon &p)
{
	int n = p.weight();
	FormalSum<Word> lhs = lambda_phi(Rule::phi4, p) - lambda_phi(Rule::phi_fv, p);
	FormalSum<Word> rhs;
	for (int i = 2; i <= n; ++i)
	{
		SplitResult sr = split(p, Arrow{1, i});
		rhs += shuffle(lambda_phi(Rule::phi4, sr.left), lambda_phi(Rule::phi_fv, sr.right));
	}
	return lhs - rhs;
}

// --- fv_ofv: grafting sums ---------------------------------------------------

namespace detail {

struct MarkedTerm
{
	Rational coeff;
	Tree tree;
	int mark;
};

// all signed dissection trees of q under `rule`, marked at the region
// containing circle position `pos`
inline std::vector<MarkedTerm> marked_rule_sum(Rule rule, const Polygon &q, long pos)
{
	std::vector<MarkedTerm> out;
	for (auto const &d : enumerate_dissections(q))
	{
		DissectionTree dt = dissection_tree(rule, q, d);
		int mark = d.empty() ? 0 : dt.decomposition.region_at(pos);
		if (mark < 0)
			throw std::logic_error("mark position not inside any region");
		out.push_back({dt.coeff, dt.tree, mark});
	}
	return out;
}

// linearized grafting of one or two marked dissection-tree sums onto a new
// vertex labeled by each term of `label`; as_root grafts a root, otherwise a
// leaf
inline FormalSum<Word> lambda_graft(const FormalSum<Polygon> &label,
                                    const std::vector<std::vector<MarkedTerm>> &parts,
                                    bool as_root)
{
	// cartesian product over the parts
	std::vector<std::pair<Rational, MarkedForest>> combos{{Rational(1), {}}};
	for (auto const &part : parts)
	{
		std::vector<std::pair<Rational, MarkedForest>> next;
		for (auto const &[c, forest] : combos)
			for (auto const &term : part)
			{
				MarkedForest f = forest;
				f.push_back({term.tree, term.mark});
				next.emplace_back(c * term.coeff, std::move(f));
			}
		combos = std::move(next);
	}
	FormalSum<Word> out;
	for (auto const &[lab, lc] : label.terms())
		for (auto const &[c, forest] : combos)
		{
			Tree t = as_root ? graft_root(lab, forest) : graft_leaf(lab, forest);
			FormalSum<Word> lin = linearize(t);
			lin *= lc * c;
			out += lin;
		}
	return out;
}

} // namespace detail

// Lemma "fv vs sigma-fv" grafting identity, compared in the rotation
// quotient r_n: Lambda_fv(P) - Lambda_sigmafv(sigma P) equals a sum of
// root-grafted and leaf-grafted dissection-tree sums over the two flanking
// subpolygon families.
inline FormalSum<Word> fv_ofv_raw_defect(const Polygon &p)
{
	int n = p.weight(), m = p.side_count();
	if (n < 2)
		throw std::invalid_argument("fv_ofv requires weight >= 2");
	Polygon sp = sigma(p);
	FormalSum<Word> lhs =
	    lambda_phi(Rule::phi_fv, p) - lambda_phi(Rule::phi_sigma_fv, sp);

	FormalSum<Word> rhs;
	auto Mof = [](const Polygon &q) { return 16L * (q.side_count() + 2); };
	for (int i = 2; i <= n; ++i)
	{
		// root-grafted term: label s_i(s_{n+1}) - s_{n+1}(s_i)
		FormalSum<Polygon> g;
		g.add(Polygon({p.sides[i - 1], p.sides[m - 1]}), Rational(1));
		g.add(Polygon({p.sides[m - 1], p.sides[i - 1]}), Rational(-1));
		std::vector<std::vector<detail::MarkedTerm>> parts;
		if (i > 2)
		{
			Polygon sub = split(p, Arrow{2, i}).right;
			parts.push_back(detail::marked_rule_sum(Rule::phi4, sub, Mof(sub) - 1));
		}
		{
			Polygon sub = split(p, Arrow{1, i}).left;
			parts.push_back(detail::marked_rule_sum(Rule::phi_fv, sub, Mof(sub) + 1));
		}
		rhs += detail::lambda_graft(g, parts, true);

		// leaf-grafted term: label s_i(s_1) - s_1(s_i)
		FormalSum<Polygon> h;
		h.add(Polygon({p.sides[i - 1], p.sides[0]}), Rational(1));
		h.add(Polygon({p.sides[0], p.sides[i - 1]}), Rational(-1));
		std::vector<std::vector<detail::MarkedTerm>> lparts;
		if (i < n)
		{
			Polygon sub = split(sp, Arrow{n, i - 1}).left;
			long M = Mof(sub);
			lparts.push_back(detail::marked_rule_sum(
			    Rule::phi4, sub, (2L * sub.side_count() - 1) * M + 1));
		}
		{
			Polygon sub = split(sp, Arrow{m, i - 1}).right;
			long M = Mof(sub);
			lparts.push_back(detail::marked_rule_sum(
			    Rule::phi_sigma_fv, sub, (2L * sub.side_count() - 1) * M - 1));
		}
		FormalSum<Word> lterm = detail::lambda_graft(h, lparts, false);
		rhs -= lterm;
	}
	return lhs - rhs;
}

// compared in the rotation quotient r_n and with weight-1 factors reduced by
// the 2-gon cocycle relation (both reductions are needed)
inline FormalSum<Word> fv_ofv_defect(const Polygon &p)
{
	FormalSum<Word> raw = fv_ofv_raw_defect(p);
	std::string rho = smallest_label(raw);
	FormalSum<Word> q = quotient(raw, r_spec(p.weight()));
	return rho.empty() ? q : log_normalize(q, rho);
}

// --- coproduct identities ----------------------------------------------------

// sum over admissible dissections (trees with only root/leaf vertices) of
// shuffle(root labels) tensor shuffle(leaf labels); the rule applied to each
// label may depend on the region (used by the phi_re analysis)
inline FormalSum<WordTensor>
admissible_dissection_sum(Rule rule, const Polygon &p,
                          const std::function<Rule(const Region &)> &assign)
{
	FormalSum<WordTensor> out;
	for (auto const &d : enumerate_dissections(p))
	{
		DissectionTree dt = dissection_tree(rule, p, d);
		if (d.empty())
		{
			Rule r = assign(dt.decomposition.regions[0]);
			FormalSum<Word> full = lambda_phi(r, p);
			out += detail::tensor(full, detail::unit_word());
			out += detail::tensor(detail::unit_word(), full);
			continue;
		}
		int nv = dt.tree.vertex_count();
		std::vector<int> indeg(nv, 0), outdeg(nv, 0);
		for (auto [a, b] : dt.tree.edges)
		{
			++outdeg[a];
			++indeg[b];
		}
		bool admissible = true;
		for (int v = 0; v < nv; ++v)
			if (indeg[v] > 0 && outdeg[v] > 0)
				admissible = false;
		if (!admissible)
			continue;
		std::vector<FormalSum<Word>> roots, leaves;
		for (int v = 0; v < nv; ++v)
		{
			Rule r = assign(dt.decomposition.regions[v]);
			if (indeg[v] == 0)
				roots.push_back(lambda_phi(r, dt.tree.labels[v]));
			else
				leaves.push_back(lambda_phi(r, dt.tree.labels[v]));
		}
		FormalSum<WordTensor> term =
		    detail::tensor(detail::shuffle_fold(roots), detail::shuffle_fold(leaves));
		term *= dt.coeff;
		out += term;
	}
	return out;
}

// coproduct theorem for the Hopf rules: the deconcatenation coproduct of the
// linearization equals the admissible-dissection sum
inline FormalSum<WordTensor> admis_coproduct_defect(Rule rule, const Polygon &p)
{
	FormalSum<WordTensor> lhs = bar_coproduct(lambda_phi(rule, p));
	FormalSum<WordTensor> rhs =
	    admissible_dissection_sum(rule, p, [rule](const Region &) { return rule; });
	return lhs - rhs;
}

// phi_re non-Hopf analysis. Positive part: the coproduct component of
// Lambda_re(P) at a forward non-root-ending arrow factors as
// Lambda_re(root part) (x) Lambda_2(cutoff part). Negative part (the
// witness, weight >= 3): the phi_2 factor cannot be replaced by phi_re.
struct PhiReWitness
{
	bool component_matches = false; // mixed phi_re (x) phi_2 factorization holds
	bool pure_differs = false;      // all-phi_re factorization fails
	bool mixed_coproduct = false;   // full Delta factors with phi_re on root-side regions
	Arrow arrow{};
	FormalSum<WordTensor> defect;
};

inline PhiReWitness phi_re_not_hopf_check(const Polygon &p)
{
	int m = p.side_count();
	// deterministic choice: first forward non-root-ending arrow, preferring a
	// cutoff of weight >= 2 so that phi_2 and phi_re differ on it
	Arrow chosen{0, 0};
	for (Arrow a : nontrivial_arrows(p))
	{
		if (arrow_is_backward(a) || a.j == m)
			continue;
		if (chosen.i == 0)
			chosen = a;
		if (split(p, a).cutoff_polygon.weight() >= 2)
		{
			chosen = a;
			break;
		}
	}
	if (chosen.i == 0)
		throw std::invalid_argument("no forward non-root-ending arrow available");

	FormalSum<WordTensor> component;
	for (auto const &d : enumerate_dissections(p))
	{
		if (std::find(d.begin(), d.end(), chosen) == d.end())
			continue;
		DissectionTree dt = dissection_tree(Rule::phi_re, p, d);
		size_t k = std::find(dt.arrows.begin(), dt.arrows.end(), chosen) - dt.arrows.begin();
		auto [src, dst] = dt.tree.edges[k];
		// components of the tree with edge k removed
		int nv = dt.tree.vertex_count();
		std::vector<int> comp(nv, -1);
		for (int start : {src, dst})
		{
			int tag = (start == src) ? 0 : 1;
			std::vector<int> stack{start};
			comp[start] = tag;
			while (!stack.empty())
			{
				int u = stack.back();
				stack.pop_back();
				for (size_t e = 0; e < dt.tree.edges.size(); ++e)
				{
					if (e == k)
						continue;
					auto [a, b] = dt.tree.edges[e];
					int w = (a == u) ? b : (b == u ? a : -1);
					if (w >= 0 && comp[w] < 0)
					{
						comp[w] = tag;
						stack.push_back(w);
					}
				}
			}
		}
		std::vector<int> rootside, cutside;
		for (int v = 0; v < nv; ++v)
			(comp[v] == 0 ? rootside : cutside).push_back(v);
		FormalSum<Word> left = linearize(induced_subtree(dt.tree, rootside));
		FormalSum<Word> right = linearize(induced_subtree(dt.tree, cutside));
		FormalSum<WordTensor> term = detail::tensor(left, right);
		term *= dt.coeff;
		component += term;
	}

	SplitResult sr = split(p, chosen);
	PhiReWitness out;
	out.arrow = chosen;
	FormalSum<WordTensor> mixed = detail::tensor(lambda_phi(Rule::phi_re, sr.root_polygon),
	                                             lambda_phi(Rule::phi2, sr.cutoff_polygon));
	FormalSum<WordTensor> pure = detail::tensor(lambda_phi(Rule::phi_re, sr.root_polygon),
	                                            lambda_phi(Rule::phi_re, sr.cutoff_polygon));
	out.defect = component - mixed;
	out.component_matches = out.defect.is_zero();
	out.pure_differs = !(component == pure);
	// full coproduct: regions rooted at a piece of the original root side keep
	// phi_re, every other region switches to phi_2
	FormalSum<WordTensor> mixed_full = admissible_dissection_sum(
	    Rule::phi_re, p, [m](const Region &r) { return r.root_side == m ? Rule::phi_re : Rule::phi2; });
	out.mixed_coproduct = (bar_coproduct(lambda_phi(Rule::phi_re, p)) == mixed_full);
	return out;
}

// --- registry ----------------------------------------------------------------

inline const std::vector<std::string> &identity_names()
{
	static const std::vector<std::string> names = {
	    "trees_2I",
	    "edgeswitch_phi4_phi3",
	    "edgeswitch_phi2_phi_re",
	    "lineartrees_phi2_phi_re",
	    "lineartrees_phi4_phi_fv",
	    "lineartrees_phi4_phi_sigma_fv",
	    "lineartrees_leaf_phi2_phi_re",
	    "lineartrees_leaf_phi4_phi_fv",
	    "lineartrees_leaf_phi4_phi_sigma_fv",
	    "redif",
	    "orientsign",
	    "tau_combined",
	    "relate",
	    "fvlin",
	    "fv_ofv",
	    "admis_coproduct_phi2",
	    "admis_coproduct_phi4",
	    "phi_re_not_hopf",
	};
	return names;
}

// weight range supported by an identity
inline std::pair<int, int> identity_weight_range(const std::string &id)
{
	if (id == "phi_re_not_hopf")
		return {3, 1000};
	return {2, 1000};
}

inline IdentityReport verify(const std::string &id, const Polygon &p)
{
	auto t0 = std::chrono::steady_clock::now();
	IdentityReport rep;
	rep.identity = id;
	rep.polygon = p;
	auto [lo, hi] = identity_weight_range(id);
	if (p.weight() < lo || p.weight() > hi)
		throw std::invalid_argument("identity '" + id + "' does not support weight " +
		                            std::to_string(p.weight()));

	FormalSum<Word> defect;
	bool tensor_identity = false;
	std::string tensor_defect_text;
	if (id == "trees_2I")
		defect = trees_2I_defect(p);
	else if (id == "edgeswitch_phi4_phi3")
		defect = edgeswitch_defect(Rule::phi4, Rule::phi3, p);
	else if (id == "edgeswitch_phi2_phi_re")
		defect = edgeswitch_defect(Rule::phi2, Rule::phi_re, p);
	else if (id == "lineartrees_phi2_phi_re")
		defect = lineartrees_defect(Rule::phi2, Rule::phi_re, p);
	else if (id == "lineartrees_phi4_phi_fv")
		defect = lineartrees_defect(Rule::phi4, Rule::phi_fv, p);
	else if (id == "lineartrees_phi4_phi_sigma_fv")
		defect = lineartrees_defect(Rule::phi4, Rule::phi_sigma_fv, p);
	else if (id == "lineartrees_leaf_phi2_phi_re")
		defect = lineartrees_leaf_defect(Rule::phi2, Rule::phi_re, p);
	else if (id == "lineartrees_leaf_phi4_phi_fv")
		defect = lineartrees_leaf_defect(Rule::phi4, Rule::phi_fv, p);
	else if (id == "lineartrees_leaf_phi4_phi_sigma_fv")
		defect = lineartrees_leaf_defect(Rule::phi4, Rule::phi_sigma_fv, p);
	else if (id == "redif")
		defect = redif_defect(p);
	else if (id == "orientsign")
		defect = orientsign_defect(p);
	else if (id == "tau_combined")
		defect = tau_combined_defect(p);
	else if (id == "relate")
		defect = relate_defect(p);
	else if (id == "fvlin")
		defect = fvlin_defect(p);
	else if (id == "fv_ofv")
		defect = fv_ofv_defect(p);
	else if (id == "admis_coproduct_phi2" || id == "admis_coproduct_phi4")
	{
		tensor_identity = true;
		Rule r = (id == "admis_coproduct_phi2") ? Rule::phi2 : Rule::phi4;
		FormalSum<WordTensor> td = admis_coproduct_defect(r, p);
		rep.holds = td.is_zero();
		tensor_defect_text = detail::tensor_text(td);
	}
	else if (id == "phi_re_not_hopf")
	{
		tensor_identity = true;
		PhiReWitness w = phi_re_not_hopf_check(p);
		rep.holds = w.component_matches && w.pure_differs && w.mixed_coproduct;
		if (rep.holds)
			tensor_defect_text = "0";
		else if (!w.component_matches)
			tensor_defect_text = detail::tensor_text(w.defect);
		else if (!w.pure_differs)
			tensor_defect_text = "pure phi_re factorization unexpectedly matches";
		else
			tensor_defect_text = "mixed-rule coproduct factorization fails";
	}
	else
		throw std::invalid_argument("unknown identity '" + id + "'");

	if (!tensor_identity)
	{
		rep.holds = defect.is_zero();
		rep.defect = detail::sum_text(defect);
	}
	else
		rep.defect = tensor_defect_text;
	auto t1 = std::chrono::steady_clock::now();
	rep.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
	return rep;
}

// standard representative polygon of a given weight: sides 1,2,...,n+1
inline Polygon standard_polygon(int weight)
{
	std::vector<std::string> sides;
	for (int i = 1; i <= weight + 1; ++i)
		sides.push_back(std::to_string(i));
	return Polygon(std::move(sides));
}

inline int default_thread_count()
{
	if (const char *env = std::getenv("POLYHOPF_THREADS"))
	{
		int n = std::atoi(env);
		if (n > 0)
			return n;
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw ? (int)hw : 1;
}

// every registered identity on the standard polygon of every supported
// weight up to max_weight; reports come back in deterministic
// (identity-order, weight) order regardless of the thread count
inline std::vector<IdentityReport> verify_all(int max_weight, int threads = 0)
{
	if (threads <= 0)
		threads = default_thread_count();
	std::vector<std::pair<std::string, Polygon>> jobs;
	for (auto const &id : identity_names())
	{
		auto [lo, hi] = identity_weight_range(id);
		for (int n = std::max(2, lo); n <= std::min(max_weight, hi); ++n)
			jobs.emplace_back(id, standard_polygon(n));
	}
	std::vector<IdentityReport> reports(jobs.size());
	std::atomic<size_t> next{0};
	auto worker = [&]() {
		for (;;)
		{
			size_t k = next.fetch_add(1);
			if (k >= jobs.size())
				return;
			reports[k] = verify(jobs[k].first, jobs[k].second);
		}
	};
	std::vector<std::thread> pool;
	for (int t = 1; t < threads; ++t)
		pool.emplace_back(worker);
	worker();
	for (auto &th : pool)
		th.join();
	return reports;
}

} // namespace polyhopf
