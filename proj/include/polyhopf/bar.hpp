// Bar-complex layer over words of wedge blocks: the polygon boundary induced
// by a rule, the two bar differentials, the deconcatenation coproduct, and
// the symmetry quotients used by the identity verifiers.
#pragma once

#include "polyhopf/rules.hpp"
#include "polyhopf/word.hpp"
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyhopf {

// differential of a single polygon: sum over single-arrow trees of the wedge
// of the edge-tail label with the edge-head label (invariant under the
// perturbations, since reversing an edge flips both the sign and the wedge)
inline FormalSum<WedgeBlock> boundary(Rule rule, const Polygon &p)
{
	FormalSum<WedgeBlock> out;
	for (Arrow a : nontrivial_arrows(p))
	{
		EdgeLabels el = edge_labels(rule, p, a);
		FormalSum<WedgeBlock> w = wedge(el.source, el.target);
		w *= el.coeff;
		out += w;
	}
	return out;
}

// Leibniz extension to blocks: factor i contributes with sign (-1)^(i-1)
inline FormalSum<WedgeBlock> block_boundary(Rule rule, const WedgeBlock &b)
{
	FormalSum<WedgeBlock> out;
	for (size_t i = 0; i < b.factors.size(); ++i)
	{
		FormalSum<WedgeBlock> db = boundary(rule, b.factors[i]);
		for (auto const &[piece, c] : db.terms())
		{
			std::vector<Polygon> factors(b.factors.begin(), b.factors.begin() + i);
			factors.insert(factors.end(), piece.factors.begin(), piece.factors.end());
			factors.insert(factors.end(), b.factors.begin() + i + 1, b.factors.end());
			Rational sign = (i % 2) ? Rational(-1) : Rational(1);
			out += block_sum(std::move(factors), sign * c);
		}
	}
	return out;
}

// D1: merge neighbouring blocks, sign (-1)^((deg b_1 + ... + deg b_i) - 1)
inline FormalSum<Word> d1(const Word &w)
{
	FormalSum<Word> out;
	int degsum = 0;
	for (size_t i = 0; i + 1 < w.blocks.size(); ++i)
	{
		degsum += w.blocks[i].degree();
		FormalSum<WedgeBlock> merged = wedge(w.blocks[i], w.blocks[i + 1]);
		Rational sign = ((degsum - 1) % 2) ? Rational(-1) : Rational(1);
		for (auto const &[blk, c] : merged.terms())
		{
			Word u{std::vector<WedgeBlock>(w.blocks.begin(), w.blocks.begin() + i)};
			u.blocks.push_back(blk);
			u.blocks.insert(u.blocks.end(), w.blocks.begin() + i + 2, w.blocks.end());
			out.add(std::move(u), sign * c);
		}
	}
	return out;
}

// D2: apply the rule differential inside block j, sign
// (-1)^((deg b_1 + ... + deg b_{j-1}) - 1); in particular d2([P]) = -[dP]
inline FormalSum<Word> d2(Rule rule, const Word &w)
{
	FormalSum<Word> out;
	int degsum = 0;
	for (size_t j = 0; j < w.blocks.size(); ++j)
	{
		Rational sign = ((degsum - 1) % 2) ? Rational(-1) : Rational(1);
		FormalSum<WedgeBlock> db = block_boundary(rule, w.blocks[j]);
		for (auto const &[blk, c] : db.terms())
		{
			Word u{std::vector<WedgeBlock>(w.blocks.begin(), w.blocks.begin() + j)};
			u.blocks.push_back(blk);
			u.blocks.insert(u.blocks.end(), w.blocks.begin() + j + 1, w.blocks.end());
			out.add(std::move(u), sign * c);
		}
		degsum += w.blocks[j].degree();
	}
	return out;
}

inline FormalSum<Word> d1(const FormalSum<Word> &x)
{
	return x.map<Word>([](const Word &w) { return d1(w); });
}

inline FormalSum<Word> d2(Rule rule, const FormalSum<Word> &x)
{
	return x.map<Word>([rule](const Word &w) { return d2(rule, w); });
}

// (D1 + D2) applied to the linearization of the rule; zero iff the
// linearization is a bar cocycle
inline FormalSum<Word> cocycle_defect(Rule rule, const Polygon &p)
{
	FormalSum<Word> lp = lambda_phi(rule, p);
	return d1(lp) + d2(rule, lp);
}

using WordTensor = std::pair<Word, Word>;

inline std::string to_string(const WordTensor &t)
{
	return to_string(t.first) + " (x) " + to_string(t.second);
}

// deconcatenation coproduct on words
inline FormalSum<WordTensor> bar_coproduct(const Word &w)
{
	FormalSum<WordTensor> out;
	for (auto &[a, b] : deconcatenations(w))
		out.add({a, b}, Rational(1));
	return out;
}

inline FormalSum<WordTensor> bar_coproduct(const FormalSum<Word> &x)
{
	return x.map<WordTensor>([](const Word &w) { return bar_coproduct(w); });
}

// --- symmetry quotients ---------------------------------------------------

// Factorwise projection onto dihedral-orbit representatives: polygon factors
// of weight 2..max_weight are replaced by the minimal polygon in their orbit
// under the enabled symmetries. Rotation acts with sign +1; reflection acts
// with sign (-1)^(weight+1). A factor whose orbit forces Q = -Q maps to zero.
struct QuotientSpec
{
	bool reflections = true;
	bool rotations = true;
	int max_weight = 0;
};

inline QuotientSpec q_spec(int n) { return QuotientSpec{true, false, n}; }
inline QuotientSpec r_spec(int n) { return QuotientSpec{false, true, n}; }

namespace detail {

// (sign, representative); sign 0 means the factor dies in the quotient
inline std::pair<int, Polygon> orbit_representative(const Polygon &q, const QuotientSpec &spec)
{
	int k = q.weight();
	if (k < 2 || k > spec.max_weight)
		return {1, q};
	int tau_sign = (k % 2 == 0) ? -1 : 1; // (-1)^(k+1)
	std::map<Polygon, int> seen;
	std::vector<Polygon> queue{q};
	seen[q] = 1;
	while (!queue.empty())
	{
		Polygon cur = queue.back();
		queue.pop_back();
		int s = seen[cur];
		std::vector<std::pair<Polygon, int>> next;
		if (spec.rotations)
			next.emplace_back(sigma(cur), s);
		if (spec.reflections)
			next.emplace_back(tau(cur), s * tau_sign);
		for (auto &[img, si] : next)
		{
			auto it = seen.find(img);
			if (it == seen.end())
			{
				seen[img] = si;
				queue.push_back(img);
			}
			else if (it->second != si)
				return {0, q};
		}
	}
	auto rep = seen.begin(); // std::map: minimal polygon first
	return {rep->second, rep->first};
}

} // namespace detail

inline FormalSum<Word> quotient(const FormalSum<Word> &x, const QuotientSpec &spec)
{
	return x.map<Word>([&spec](const Word &w) -> FormalSum<Word> {
		Rational coeff(1);
		Word out;
		for (auto const &blk : w.blocks)
		{
			std::vector<Polygon> factors;
			for (auto const &q : blk.factors)
			{
				auto [s, rep] = detail::orbit_representative(q, spec);
				if (s == 0)
					return FormalSum<Word>();
				coeff *= Rational(s);
				factors.push_back(rep);
			}
			auto sb = make_block(std::move(factors));
			if (!sb)
				return FormalSum<Word>();
			coeff *= Rational(sb->first);
			out.blocks.push_back(sb->second);
		}
		FormalSum<Word> res(std::move(out));
		res *= coeff;
		return res;
	});
}

// Weight-1 normalization by the 2-gon cocycle relation: a factor (a,b) is
// replaced by (a,rho) - (b,rho) for a fixed reference label rho, with
// (rho,rho) dropped; expands multilinearly inside blocks. Factors of higher
// weight are untouched.
inline FormalSum<Word> log_normalize(const FormalSum<Word> &x, const std::string &rho)
{
	return x.map<Word>([&rho](const Word &w) -> FormalSum<Word> {
		FormalSum<Word> acc(Word{});
		for (auto const &blk : w.blocks)
		{
			// expand the block multilinearly over its weight-1 factors
			FormalSum<WedgeBlock> blksum = block_sum({});
			for (auto const &q : blk.factors)
			{
				FormalSum<Polygon> replacement;
				if (q.weight() == 1)
				{
					if (q.sides[0] != rho)
						replacement.add(Polygon({q.sides[0], rho}), Rational(1));
					if (q.sides[1] != rho)
						replacement.add(Polygon({q.sides[1], rho}), Rational(-1));
				}
				else
					replacement.add(q, Rational(1));
				FormalSum<WedgeBlock> next;
				for (auto const &[partial, c1] : blksum.terms())
					for (auto const &[poly, c2] : replacement.terms())
					{
						std::vector<Polygon> factors = partial.factors;
						factors.push_back(poly);
						next += block_sum(std::move(factors), c1 * c2);
					}
				blksum = std::move(next);
			}
			FormalSum<Word> nextacc;
			for (auto const &[prefix, c1] : acc.terms())
				for (auto const &[blk2, c2] : blksum.terms())
				{
					Word u = prefix;
					u.blocks.push_back(blk2);
					nextacc.add(std::move(u), c1 * c2);
				}
			acc = std::move(nextacc);
		}
		return acc;
	});
}

// smallest side label occurring in an expression (reference point for
// log_normalize); empty when the expression is zero
inline std::string smallest_label(const FormalSum<Word> &x)
{
	std::string best;
	for (auto const &[w, c] : x.terms())
		for (auto const &blk : w.blocks)
			for (auto const &p : blk.factors)
				for (auto const &s : p.sides)
					if (best.empty() || s < best)
						best = s;
	return best;
}

} // namespace polyhopf
