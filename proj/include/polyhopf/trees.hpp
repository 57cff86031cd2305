// Rooted-forest Hopf-algebra layer: polygon-labeled trees with directed
// edges, canonical forms, admissible-cut coproduct, linear extensions, and
// the two grafting operators.
//
// A Tree is stored with explicit vertex indices; `normalize` renumbers it
// into a canonical isomorphism-class representative (centered AHU encoding
// with edge-direction flags), so canonical trees compare with plain
// (labels, edges) ordering. A Forest is a sorted multiset of canonical trees
// and represents a product of trees (the empty forest is the unit).
#pragma once

#include "polyhopf/formal_sum.hpp"
#include "polyhopf/polygon.hpp"
#include "polyhopf/word.hpp"
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyhopf {

struct Tree
{
	std::vector<Polygon> labels;            // labels[v] for vertex v
	std::vector<std::pair<int, int>> edges; // directed (from, to)

	int vertex_count() const { return (int)labels.size(); }

	friend bool operator<(const Tree &a, const Tree &b)
	{
		if (a.labels != b.labels)
			return a.labels < b.labels;
		return a.edges < b.edges;
	}
	friend bool operator==(const Tree &a, const Tree &b)
	{
		return a.labels == b.labels && a.edges == b.edges;
	}
	friend bool operator!=(const Tree &a, const Tree &b) { return !(a == b); }
};

inline std::string to_string(const Tree &t)
{
	std::string out = "tree(";
	for (size_t k = 0; k < t.labels.size(); ++k)
	{
		if (k)
			out += ";";
		out += to_string(t.labels[k]);
	}
	out += ")[";
	for (size_t k = 0; k < t.edges.size(); ++k)
	{
		if (k)
			out += ",";
		out += std::to_string(t.edges[k].first) + ">" + std::to_string(t.edges[k].second);
	}
	return out + "]";
}

namespace detail {

struct AdjEntry
{
	int to;
	bool outgoing; // true when the stored edge points away from this vertex
};

inline std::vector<std::vector<AdjEntry>> adjacency(const Tree &t)
{
	std::vector<std::vector<AdjEntry>> adj(t.labels.size());
	for (auto [a, b] : t.edges)
	{
		adj[a].push_back({b, true});
		adj[b].push_back({a, false});
	}
	return adj;
}

// 1 or 2 centers of the underlying undirected tree (leaf peeling)
inline std::vector<int> tree_centers(const Tree &t)
{
	int n = t.vertex_count();
	if (n == 1)
		return {0};
	auto adj = adjacency(t);
	std::vector<int> deg(n);
	std::vector<int> layer;
	for (int v = 0; v < n; ++v)
	{
		deg[v] = (int)adj[v].size();
		if (deg[v] == 1)
			layer.push_back(v);
	}
	int remaining = n;
	while (remaining > 2)
	{
		std::vector<int> next;
		remaining -= (int)layer.size();
		for (int v : layer)
			for (auto e : adj[v])
				if (--deg[e.to] == 1)
					next.push_back(e.to);
		layer = std::move(next);
	}
	std::sort(layer.begin(), layer.end());
	return layer;
}

// AHU-style encoding of the tree rooted at `root`; direction flags ('>'
// away from the root, '<' toward it) make the encoding direction-aware.
inline std::string encode_rooted(const Tree &t, const std::vector<std::vector<AdjEntry>> &adj,
                                 int v, int parent)
{
	std::string out = "(" + to_string(t.labels[v]);
	std::vector<std::string> kids;
	for (auto e : adj[v])
		if (e.to != parent)
			kids.push_back((e.outgoing ? ">" : "<") + encode_rooted(t, adj, e.to, v));
	std::sort(kids.begin(), kids.end());
	for (auto &k : kids)
		out += k;
	return out + ")";
}

inline void renumber_dfs(const Tree &t, const std::vector<std::vector<AdjEntry>> &adj, int v,
                         int parent, std::vector<int> &newindex, int &counter)
{
	newindex[v] = counter++;
	std::vector<std::pair<std::string, int>> kids;
	for (auto e : adj[v])
		if (e.to != parent)
			kids.emplace_back((e.outgoing ? ">" : "<") + encode_rooted(t, adj, e.to, v), e.to);
	std::sort(kids.begin(), kids.end());
	for (auto &[key, c] : kids)
		renumber_dfs(t, adj, c, v, newindex, counter);
}

} // namespace detail

// canonical representative of the isomorphism class (labels + directions)
inline Tree normalize(const Tree &t)
{
	if (t.labels.empty())
		return t;
	auto adj = detail::adjacency(t);
	std::vector<int> centers = detail::tree_centers(t);
	int best = centers[0];
	if (centers.size() == 2)
	{
		std::string e0 = detail::encode_rooted(t, adj, centers[0], -1);
		std::string e1 = detail::encode_rooted(t, adj, centers[1], -1);
		if (e1 < e0)
			best = centers[1];
	}
	std::vector<int> newindex(t.labels.size(), -1);
	int counter = 0;
	detail::renumber_dfs(t, adj, best, -1, newindex, counter);
	Tree out;
	out.labels.resize(t.labels.size());
	for (size_t v = 0; v < t.labels.size(); ++v)
		out.labels[newindex[v]] = t.labels[v];
	for (auto [a, b] : t.edges)
		out.edges.emplace_back(newindex[a], newindex[b]);
	std::sort(out.edges.begin(), out.edges.end());
	return out;
}

struct Forest
{
	std::vector<Tree> trees; // canonical trees, sorted

	friend bool operator<(const Forest &a, const Forest &b) { return a.trees < b.trees; }
	friend bool operator==(const Forest &a, const Forest &b) { return a.trees == b.trees; }
	friend bool operator!=(const Forest &a, const Forest &b) { return !(a == b); }

	bool empty() const { return trees.empty(); }
	int vertex_count() const
	{
		int n = 0;
		for (auto const &t : trees)
			n += t.vertex_count();
		return n;
	}
};

inline Forest make_forest(std::vector<Tree> trees)
{
	for (auto &t : trees)
		t = normalize(t);
	std::sort(trees.begin(), trees.end());
	return Forest{std::move(trees)};
}

inline Forest forest_of(const Tree &t) { return make_forest({t}); }

inline Forest merge(const Forest &a, const Forest &b)
{
	std::vector<Tree> all = a.trees;
	all.insert(all.end(), b.trees.begin(), b.trees.end());
	std::sort(all.begin(), all.end());
	return Forest{std::move(all)};
}

inline std::string to_string(const Forest &f)
{
	if (f.trees.empty())
		return "1";
	std::string out;
	for (size_t k = 0; k < f.trees.size(); ++k)
	{
		if (k)
			out += "*";
		out += to_string(f.trees[k]);
	}
	return out;
}

inline Tree flip_edges(const Tree &t, const std::vector<std::pair<int, int>> &which)
{
	Tree out = t;
	for (auto &e : out.edges)
		if (std::find(which.begin(), which.end(), e) != which.end())
			std::swap(e.first, e.second);
	return out;
}

// --- admissible cuts / coproduct -------------------------------------------

// One admissible cut: the components of T minus the cut edges, split into
// those whose incident cut edges all flow out of them (the R side) and those
// whose cut edges all flow into them (the L side). Components are given as
// original vertex-index sets so callers can track marked vertices.
struct AdmissibleCut
{
	std::vector<std::pair<int, int>> cut_edges;
	std::vector<std::vector<int>> r_components;
	std::vector<std::vector<int>> l_components;
};

inline Tree induced_subtree(const Tree &t, const std::vector<int> &vertices)
{
	std::map<int, int> idx;
	Tree out;
	for (int v : vertices)
	{
		idx[v] = (int)out.labels.size();
		out.labels.push_back(t.labels[v]);
	}
	for (auto [a, b] : t.edges)
		if (idx.count(a) && idx.count(b))
			out.edges.emplace_back(idx[a], idx[b]);
	return out;
}

// all nonempty admissible cuts of t
inline std::vector<AdmissibleCut> admissible_cuts(const Tree &t)
{
	std::vector<AdmissibleCut> out;
	size_t ne = t.edges.size();
	int n = t.vertex_count();
	for (size_t mask = 1; mask < (size_t(1) << ne); ++mask)
	{
		// connected components of T minus the selected edges
		std::vector<int> comp(n, -1);
		int ncomp = 0;
		for (int v = 0; v < n; ++v)
		{
			if (comp[v] >= 0)
				continue;
			comp[v] = ncomp;
			std::vector<int> stack{v};
			while (!stack.empty())
			{
				int u = stack.back();
				stack.pop_back();
				for (size_t e = 0; e < ne; ++e)
				{
					if (mask & (size_t(1) << e))
						continue;
					auto [a, b] = t.edges[e];
					int w = a == u ? b : (b == u ? a : -1);
					if (w >= 0 && comp[w] < 0)
					{
						comp[w] = ncomp;
						stack.push_back(w);
					}
				}
			}
			++ncomp;
		}
		// admissibility: every component sees its cut edges in one direction
		std::vector<int> dir(ncomp, 0); // 0 unseen, +1 all-out, -1 all-in
		bool ok = true;
		for (size_t e = 0; e < ne && ok; ++e)
		{
			if (!(mask & (size_t(1) << e)))
				continue;
			auto [a, b] = t.edges[e];
			for (auto [c, d] : {std::pair<int, int>{comp[a], +1}, {comp[b], -1}})
			{
				if (dir[c] == 0)
					dir[c] = d;
				else if (dir[c] != d)
					ok = false;
			}
		}
		if (!ok)
			continue;
		AdmissibleCut cut;
		for (size_t e = 0; e < ne; ++e)
			if (mask & (size_t(1) << e))
				cut.cut_edges.push_back(t.edges[e]);
		std::vector<std::vector<int>> groups(ncomp);
		for (int v = 0; v < n; ++v)
			groups[comp[v]].push_back(v);
		for (int c = 0; c < ncomp; ++c)
		{
			if (dir[c] > 0)
				cut.r_components.push_back(groups[c]);
			else
				cut.l_components.push_back(groups[c]);
		}
		out.push_back(std::move(cut));
	}
	return out;
}

using ForestTensor = std::pair<Forest, Forest>;

inline std::string to_string(const ForestTensor &t)
{
	return to_string(t.first) + " (x) " + to_string(t.second);
}

// Delta(T) = T (x) 1 + 1 (x) T + sum over nonempty admissible cuts of
// R-forest (x) L-forest.
inline FormalSum<ForestTensor> coproduct(const Tree &t)
{
	FormalSum<ForestTensor> out;
	out.add({forest_of(t), Forest{}}, Rational(1));
	out.add({Forest{}, forest_of(t)}, Rational(1));
	for (auto const &cut : admissible_cuts(t))
	{
		std::vector<Tree> r, l;
		for (auto const &c : cut.r_components)
			r.push_back(induced_subtree(t, c));
		for (auto const &c : cut.l_components)
			l.push_back(induced_subtree(t, c));
		out.add({make_forest(std::move(r)), make_forest(std::move(l))}, Rational(1));
	}
	return out;
}

// multiplicative extension to forests
inline FormalSum<ForestTensor> coproduct(const Forest &f)
{
	FormalSum<ForestTensor> out(ForestTensor{Forest{}, Forest{}});
	for (auto const &t : f.trees)
	{
		FormalSum<ForestTensor> next;
		FormalSum<ForestTensor> dt = coproduct(t);
		for (auto const &[xy, c1] : out.terms())
			for (auto const &[uv, c2] : dt.terms())
				next.add({merge(xy.first, uv.first), merge(xy.second, uv.second)}, c1 * c2);
		out = std::move(next);
	}
	return out;
}

// --- linear extensions ------------------------------------------------------

// Sum over linear extensions of the edge order (edge u->v forces u before v),
// taken over all vertices of the forest; each extension becomes a word of
// degree-1 blocks.
inline FormalSum<Word> linear_extensions(const std::vector<Tree> &trees)
{
	// flatten to one vertex set
	std::vector<Polygon> labels;
	std::vector<std::pair<int, int>> edges;
	for (auto const &t : trees)
	{
		int base = (int)labels.size();
		labels.insert(labels.end(), t.labels.begin(), t.labels.end());
		for (auto [a, b] : t.edges)
			edges.emplace_back(base + a, base + b);
	}
	int n = (int)labels.size();
	std::vector<int> indeg(n, 0);
	for (auto [a, b] : edges)
		++indeg[b];
	std::vector<bool> used(n, false);
	std::vector<WedgeBlock> buf;
	FormalSum<Word> out;
	auto rec = [&](auto &&self, int placed) -> void {
		if (placed == n)
		{
			out.add(Word{buf}, Rational(1));
			return;
		}
		for (int v = 0; v < n; ++v)
		{
			if (used[v] || indeg[v] != 0)
				continue;
			used[v] = true;
			for (auto [a, b] : edges)
				if (a == v)
					--indeg[b];
			buf.push_back(WedgeBlock{{labels[v]}});
			self(self, placed + 1);
			buf.pop_back();
			for (auto [a, b] : edges)
				if (a == v)
					++indeg[b];
			used[v] = false;
		}
	};
	rec(rec, 0);
	return out;
}

inline FormalSum<Word> linearize(const Tree &t) { return linear_extensions({t}); }
inline FormalSum<Word> linearize(const Forest &f) { return linear_extensions(f.trees); }

// --- grafting ----------------------------------------------------------------

struct MarkedTree
{
	Tree tree;
	int mark = 0; // distinguished vertex (original index of `tree`)

	friend bool operator<(const MarkedTree &a, const MarkedTree &b)
	{
		if (!(a.tree == b.tree))
			return a.tree < b.tree;
		return a.mark < b.mark;
	}
};

using MarkedForest = std::vector<MarkedTree>;

inline bool marks_valid(const MarkedForest &f)
{
	for (auto const &mt : f)
		if (mt.mark < 0 || mt.mark >= mt.tree.vertex_count())
			return false;
	return true;
}

namespace detail {

inline Tree graft(const std::string &, const Polygon &label, const MarkedForest &f, bool as_root)
{
	Tree out;
	out.labels.push_back(label);
	for (auto const &mt : f)
	{
		int base = (int)out.labels.size();
		out.labels.insert(out.labels.end(), mt.tree.labels.begin(), mt.tree.labels.end());
		for (auto [a, b] : mt.tree.edges)
			out.edges.emplace_back(base + a, base + b);
		if (as_root)
			out.edges.emplace_back(0, base + mt.mark);
		else
			out.edges.emplace_back(base + mt.mark, 0);
	}
	return out;
}

} // namespace detail

// new vertex labeled `label` with edges flowing out to every marked vertex;
// the empty forest gives the single-vertex tree
inline Tree graft_root(const Polygon &label, const MarkedForest &f)
{
	return detail::graft("root", label, f, true);
}

// mirror operator: edges flow from the marked vertices into the new vertex
inline Tree graft_leaf(const Polygon &label, const MarkedForest &f)
{
	return detail::graft("leaf", label, f, false);
}

} // namespace polyhopf
