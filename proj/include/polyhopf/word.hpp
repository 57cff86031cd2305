// Words of wedge blocks: the target of the linearization map and the bar
// complex underlying it.
//
// A WedgeBlock is an exterior product of polygons; factors are kept sorted
// and the reordering sign is returned at construction time (a repeated factor
// makes the block zero). A Word is a tensor string of blocks; the empty word
// is the unit.
#pragma once

#include "polyhopf/formal_sum.hpp"
#include "polyhopf/polygon.hpp"
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyhopf {

struct WedgeBlock
{
	std::vector<Polygon> factors; // strictly increasing in canonical order

	friend bool operator<(const WedgeBlock &a, const WedgeBlock &b)
	{
		return a.factors < b.factors;
	}
	friend bool operator==(const WedgeBlock &a, const WedgeBlock &b)
	{
		return a.factors == b.factors;
	}
	friend bool operator!=(const WedgeBlock &a, const WedgeBlock &b) { return !(a == b); }

	int degree() const { return (int)factors.size(); }
	int weight() const
	{
		int w = 0;
		for (auto const &p : factors)
			w += p.weight();
		return w;
	}
};

// Sort the factors, returning (sign, block); nullopt when a factor repeats
// (the block is zero).
inline std::optional<std::pair<int, WedgeBlock>> make_block(std::vector<Polygon> factors)
{
	int sign = 1;
	// insertion sort counting inversions (blocks are tiny)
	for (size_t k = 1; k < factors.size(); ++k)
		for (size_t t = k; t > 0 && factors[t] < factors[t - 1]; --t)
		{
			std::swap(factors[t], factors[t - 1]);
			sign = -sign;
		}
	for (size_t k = 0; k + 1 < factors.size(); ++k)
		if (factors[k] == factors[k + 1])
			return std::nullopt;
	return std::make_pair(sign, WedgeBlock{std::move(factors)});
}

inline FormalSum<WedgeBlock> block_sum(std::vector<Polygon> factors, Rational coeff = Rational(1))
{
	auto sb = make_block(std::move(factors));
	FormalSum<WedgeBlock> out;
	if (sb)
		out.add(sb->second, Rational(sb->first) * coeff);
	return out;
}

// exterior product of two blocks
inline FormalSum<WedgeBlock> wedge(const WedgeBlock &a, const WedgeBlock &b)
{
	std::vector<Polygon> factors = a.factors;
	factors.insert(factors.end(), b.factors.begin(), b.factors.end());
	return block_sum(std::move(factors));
}

inline FormalSum<WedgeBlock> wedge(const Polygon &a, const Polygon &b)
{
	return block_sum({a, b});
}

struct Word
{
	std::vector<WedgeBlock> blocks;

	friend bool operator<(const Word &a, const Word &b) { return a.blocks < b.blocks; }
	friend bool operator==(const Word &a, const Word &b) { return a.blocks == b.blocks; }
	friend bool operator!=(const Word &a, const Word &b) { return !(a == b); }

	size_t length() const { return blocks.size(); }
	int weight() const
	{
		int w = 0;
		for (auto const &bl : blocks)
			w += bl.weight();
		return w;
	}
};

inline Word word_of(const Polygon &p) { return Word{{WedgeBlock{{p}}}}; }

inline Word concat(const Word &a, const Word &b)
{
	Word out = a;
	out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
	return out;
}

inline std::string to_string(const WedgeBlock &b)
{
	std::string out;
	for (size_t k = 0; k < b.factors.size(); ++k)
	{
		if (k)
			out += "^";
		out += to_string(b.factors[k]);
	}
	return out;
}

inline std::string to_string(const Word &w)
{
	if (w.blocks.empty())
		return "()";
	std::string out = "[";
	for (size_t k = 0; k < w.blocks.size(); ++k)
	{
		if (k)
			out += "|";
		out += to_string(w.blocks[k]);
	}
	return out + "]";
}

inline WedgeBlock block_from_string(const std::string &text)
{
	std::vector<Polygon> factors;
	std::string cur;
	for (char ch : text)
	{
		if (ch == '^')
		{
			factors.push_back(polygon_from_string(cur));
			cur.clear();
		}
		else
			cur += ch;
	}
	factors.push_back(polygon_from_string(cur));
	auto sb = make_block(std::move(factors));
	if (!sb || sb->first != 1)
		throw std::invalid_argument("block '" + text + "' is not in canonical form");
	return sb->second;
}

inline Word word_from_string(const std::string &text)
{
	std::string body = text;
	if (!body.empty() && body.front() == '[')
	{
		if (body.back() != ']')
			throw std::invalid_argument("unbalanced brackets in word '" + text + "'");
		body = body.substr(1, body.size() - 2);
	}
	if (body.empty() || body == "()")
		return Word{};
	Word w;
	std::string cur;
	for (char ch : body)
	{
		if (ch == '|')
		{
			w.blocks.push_back(block_from_string(cur));
			cur.clear();
		}
		else
			cur += ch;
	}
	w.blocks.push_back(block_from_string(cur));
	return w;
}

// --- shuffle product -------------------------------------------------------

inline FormalSum<Word> shuffle(const Word &u, const Word &v)
{
	FormalSum<Word> out;
	std::vector<WedgeBlock> buf;
	auto rec = [&](auto &&self, size_t i, size_t j) -> void {
		if (i == u.blocks.size() && j == v.blocks.size())
		{
			out.add(Word{buf}, Rational(1));
			return;
		}
		if (i < u.blocks.size())
		{
			buf.push_back(u.blocks[i]);
			self(self, i + 1, j);
			buf.pop_back();
		}
		if (j < v.blocks.size())
		{
			buf.push_back(v.blocks[j]);
			self(self, i, j + 1);
			buf.pop_back();
		}
	};
	rec(rec, 0, 0);
	return out;
}

inline FormalSum<Word> shuffle(const FormalSum<Word> &x, const FormalSum<Word> &y)
{
	FormalSum<Word> out;
	for (auto const &[u, cu] : x.terms())
		for (auto const &[v, cv] : y.terms())
		{
			FormalSum<Word> s = shuffle(u, v);
			s *= cu * cv;
			out += s;
		}
	return out;
}

// all splittings w = prefix . suffix, including the empty ends
inline std::vector<std::pair<Word, Word>> deconcatenations(const Word &w)
{
	std::vector<std::pair<Word, Word>> out;
	for (size_t k = 0; k <= w.blocks.size(); ++k)
	{
		Word a{std::vector<WedgeBlock>(w.blocks.begin(), w.blocks.begin() + k)};
		Word b{std::vector<WedgeBlock>(w.blocks.begin() + k, w.blocks.end())};
		out.emplace_back(std::move(a), std::move(b));
	}
	return out;
}

} // namespace polyhopf
