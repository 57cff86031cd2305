// R-deco polygons: ordered side labels with the last side distinguished as the
// root; arrows, dissections, and the region decomposition obtained by
// contracting the arrows of a dissection.
//
// Geometry convention (fixed by the trivial-arrow condition and the figures):
// on a circle with 2(n+1) ticks, vertex i sits at tick 2i-1 and side j spans
// ticks (2j-1, 2j+1), so vertex i lies between sides i-1 and i (mod n+1).
// Vertex 1 (the first vertex) is the counterclockwise endpoint of the root
// side. Several arrows may land on one side; they are separated by a
// deterministic symbolic perturbation so that compatible arrows never touch.
#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhopf {

struct Polygon
{
	std::vector<std::string> sides; // last entry = root side

	Polygon() = default;
	explicit Polygon(std::vector<std::string> s) : sides(std::move(s))
	{
		if (sides.size() < 2)
			throw std::invalid_argument("polygon needs at least 2 sides");
	}

	int weight() const { return (int)sides.size() - 1; }
	int side_count() const { return (int)sides.size(); }

	// canonical order: weight first, then lexicographic on the label sequence
	friend bool operator<(const Polygon &a, const Polygon &b)
	{
		if (a.sides.size() != b.sides.size())
			return a.sides.size() < b.sides.size();
		return a.sides < b.sides;
	}
	friend bool operator==(const Polygon &a, const Polygon &b) { return a.sides == b.sides; }
	friend bool operator!=(const Polygon &a, const Polygon &b) { return !(a == b); }
};

inline std::string to_string(const Polygon &p)
{
	std::string out;
	for (size_t k = 0; k < p.sides.size(); ++k)
	{
		if (k)
			out += ",";
		out += p.sides[k];
	}
	return out;
}

inline Polygon polygon_from_string(const std::string &text)
{
	std::vector<std::string> sides;
	std::string cur;
	for (char ch : text)
	{
		if (ch == ',')
		{
			sides.push_back(cur);
			cur.clear();
		}
		else if (!isspace((unsigned char)ch))
			cur += ch;
	}
	sides.push_back(cur);
	for (auto const &s : sides)
		if (s.empty())
			throw std::invalid_argument("empty side label in polygon '" + text + "'");
	return Polygon(sides);
}

// convenience for tests/CLI: "1234" -> polygon with 1-char labels
inline Polygon pgon(const std::string &compact)
{
	std::vector<std::string> sides;
	for (char c : compact)
		sides.emplace_back(1, c);
	return Polygon(sides);
}

// root side unchanged, remaining sides reversed (an involution)
inline Polygon tau(const Polygon &p)
{
	Polygon q = p;
	std::reverse(q.sides.begin(), q.sides.end() - 1);
	return q;
}

// rotate labels one position: sigma(1,...,n+1) = (2,...,n+1,1)
inline Polygon sigma(const Polygon &p)
{
	Polygon q = p;
	std::rotate(q.sides.begin(), q.sides.begin() + 1, q.sides.end());
	return q;
}

// Arrow _i alpha_j: from vertex i to the interior of side j.
struct Arrow
{
	int i = 0; // start vertex, 1..n+1
	int j = 0; // end side, 1..n+1

	friend bool operator<(const Arrow &a, const Arrow &b)
	{
		return a.i != b.i ? a.i < b.i : a.j < b.j;
	}
	friend bool operator==(const Arrow &a, const Arrow &b) { return a.i == b.i && a.j == b.j; }
	friend bool operator!=(const Arrow &a, const Arrow &b) { return !(a == b); }
};

inline std::string to_string(const Arrow &a)
{
	return std::to_string(a.i) + "->" + std::to_string(a.j);
}

inline Arrow arrow_from_string(const std::string &text)
{
	auto pos = text.find("->");
	if (pos == std::string::npos)
		throw std::invalid_argument("arrow syntax is i->j, got '" + text + "'");
	return Arrow{std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

using Dissection = std::vector<Arrow>; // kept sorted by (i,j)

inline std::string to_string(const Dissection &d)
{
	std::string out = "{";
	for (size_t k = 0; k < d.size(); ++k)
	{
		if (k)
			out += ",";
		out += to_string(d[k]);
	}
	return out + "}";
}

inline Dissection dissection_from_string(const std::string &text)
{
	std::string body = text;
	if (!body.empty() && body.front() == '{')
	{
		if (body.back() != '}')
			throw std::invalid_argument("unbalanced braces in dissection '" + text + "'");
		body = body.substr(1, body.size() - 2);
	}
	Dissection d;
	std::string cur;
	auto flush = [&]() {
		if (!cur.empty())
		{
			d.push_back(arrow_from_string(cur));
			cur.clear();
		}
	};
	for (char ch : body)
	{
		if (ch == ',')
			flush();
		else if (!isspace((unsigned char)ch))
			cur += ch;
	}
	flush();
	std::sort(d.begin(), d.end());
	return d;
}

inline bool arrow_in_range(const Polygon &p, Arrow a)
{
	int m = p.side_count();
	return a.i >= 1 && a.i <= m && a.j >= 1 && a.j <= m;
}

// trivial: lands on a side adjacent to the start vertex (j = i or i-1 mod m)
inline bool arrow_is_trivial(const Polygon &p, Arrow a)
{
	int m = p.side_count();
	int prev = a.i == 1 ? m : a.i - 1;
	return a.j == a.i || a.j == prev;
}

inline bool arrow_is_backward(Arrow a) { return a.j < a.i; }
inline bool arrow_ends_on_root(const Polygon &p, Arrow a) { return a.j == p.side_count(); }
inline bool arrow_from_first_vertex(Arrow a) { return a.i == 1; }

inline std::vector<Arrow> nontrivial_arrows(const Polygon &p)
{
	std::vector<Arrow> out;
	int m = p.side_count();
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= m; ++j)
			if (!arrow_is_trivial(p, Arrow{i, j}))
				out.push_back(Arrow{i, j});
	return out;
}

namespace detail {

// x strictly inside the ccw arc from s to e (positions mod L)
inline bool in_open_arc(long x, long s, long e, long L)
{
	long dx = ((x - s) % L + L) % L;
	long de = ((e - s) % L + L) % L;
	return dx > 0 && dx < de;
}

} // namespace detail

// Chord-interleaving test on the tick circle. Arrows sharing their start
// vertex never intersect; arrows landing on the same side never intersect
// (their landing points can always be drawn apart).
inline bool arrows_intersect(const Polygon &p, Arrow a, Arrow b)
{
	assert(!arrow_is_trivial(p, a) && !arrow_is_trivial(p, b));
	if (a.i == b.i || a.j == b.j)
		return false;
	long L = 2 * p.side_count();
	long a1 = 2 * a.i - 1, a2 = 2 * a.j;
	bool b1in = detail::in_open_arc(2 * b.i - 1, a1, a2, L);
	bool b2in = detail::in_open_arc(2 * b.j, a1, a2, L);
	return b1in != b2in;
}

// All pairwise-compatible subsets of non-trivial arrows, empty set included.
// Depth-first with incremental pruning; output sorted canonically.
inline std::vector<Dissection> enumerate_dissections(const Polygon &p)
{
	std::vector<Arrow> arrows = nontrivial_arrows(p);
	std::vector<Dissection> out;
	Dissection cur;
	auto rec = [&](auto &&self, size_t k) -> void {
		if (k == arrows.size())
		{
			out.push_back(cur);
			return;
		}
		self(self, k + 1); // skip arrows[k]
		for (Arrow prev : cur)
			if (arrows_intersect(p, prev, arrows[k]))
				return;
		cur.push_back(arrows[k]);
		self(self, k + 1);
		cur.pop_back();
	};
	rec(rec, 0);
	std::sort(out.begin(), out.end(),
	          [](const Dissection &x, const Dissection &y) {
		          if (x.size() != y.size())
			          return x.size() < y.size();
		          return x < y;
	          });
	return out;
}

inline bool is_dissection(const Polygon &p, const Dissection &d)
{
	for (Arrow a : d)
		if (!arrow_in_range(p, a) || arrow_is_trivial(p, a))
			return false;
	for (size_t x = 0; x < d.size(); ++x)
		for (size_t y = x + 1; y < d.size(); ++y)
		{
			if (d[x] == d[y])
				return false;
			if (arrows_intersect(p, d[x], d[y]))
				return false;
		}
	return true;
}

// --- region decomposition ------------------------------------------------

struct Region
{
	Polygon poly;
	bool contains_root_side = false;   // the unique region holding root + first vertex
	bool contains_first_vertex = false;
	int root_side = 0; // index of the side the region is rooted at (its own root piece)

	// internal: boundary arcs (side occurrence, ccw positions) for adjacency
	struct Occ
	{
		int side;
		long lo, hi;
	};
	std::vector<Occ> occs;
};

struct ArrowInfo
{
	Arrow arrow;
	int root_side_region = -1;   // region on the path to the root region
	int cutoff_side_region = -1;
	int left_region = -1;  // forward arrow: left = root side; backward: left = cutoff side
	int right_region = -1;
};

struct RegionDecomposition
{
	std::vector<Region> regions;
	std::vector<ArrowInfo> arrows;
	int root_region = -1;

	// region whose boundary arc strictly contains the given circle position
	int region_at(long pos) const
	{
		for (size_t r = 0; r < regions.size(); ++r)
			for (auto const &o : regions[r].occs)
			{
				long len = hi_minus_lo(o);
				long dx = ((pos - o.lo) % L + L) % L;
				if (dx > 0 && dx < len)
					return (int)r;
			}
		return -1;
	}

	long L = 0;
	long hi_minus_lo(const Region::Occ &o) const { return ((o.hi - o.lo) % L + L) % L; }
};

namespace detail {

struct RawRegion
{
	std::vector<Region::Occ> occs; // ccw order
	long marker;                   // strictly inside some occ; identifies the root side
	std::vector<Arrow> arrows;
};

} // namespace detail

inline RegionDecomposition regions(const Polygon &p, const Dissection &d)
{
	int m = p.side_count();
	long M = 16L * (m + 2);
	long L = 2L * m * M;
	auto modL = [&](long x) { return ((x % L) + L) % L; };

	auto start_pos = [&](Arrow a) { return modL((2L * a.i - 1) * M); };
	auto land_pos = [&](Arrow a) {
		long arcd = ((2L * a.i - 1) - (2L * a.j + 1));
		arcd = ((arcd % (2 * m)) + 2 * m) % (2 * m);
		return modL(2L * a.j * M - 4 * arcd);
	};

	detail::RawRegion whole;
	for (int j = 1; j <= m; ++j)
		whole.occs.push_back({j, modL((2L * j - 1) * M), modL((2L * j + 1) * M)});
	whole.marker = 1; // just past the root side's midpoint, before the first vertex
	whole.arrows.assign(d.begin(), d.end());

	std::vector<detail::RawRegion> done;
	std::vector<detail::RawRegion> work{whole};
	while (!work.empty())
	{
		detail::RawRegion R = std::move(work.back());
		work.pop_back();
		if (R.arrows.empty())
		{
			done.push_back(std::move(R));
			continue;
		}
		Arrow al = R.arrows.back();
		R.arrows.pop_back();
		long sp = start_pos(al), ep = land_pos(al);

		// split the occurrence containing ep
		size_t idx = R.occs.size();
		for (size_t k = 0; k < R.occs.size(); ++k)
			if (detail::in_open_arc(ep, R.occs[k].lo, R.occs[k].hi, L))
			{
				idx = k;
				break;
			}
		if (idx == R.occs.size())
			throw std::logic_error("arrow landing point not inside region");
		Region::Occ occA{R.occs[idx].side, R.occs[idx].lo, ep};
		Region::Occ occB{R.occs[idx].side, ep, R.occs[idx].hi};

		// ccw list starting just after ep
		std::vector<Region::Occ> seq;
		seq.push_back(occB);
		for (size_t k = 1; k < R.occs.size(); ++k)
			seq.push_back(R.occs[(idx + k) % R.occs.size()]);
		seq.push_back(occA);

		// Boundary position where sp sits: between consecutive occurrences,
		// either as a shared endpoint or strictly inside the chordal gap that
		// opens up when several arrows leave the same vertex.
		size_t t = seq.size();
		for (size_t k = 1; k < seq.size(); ++k)
		{
			long a = seq[k - 1].hi, b = seq[k].lo;
			if (sp == a || sp == b || (a != b && detail::in_open_arc(sp, a, b, L)))
			{
				t = k;
				break;
			}
		}
		if (t >= seq.size())
			throw std::logic_error("arrow start vertex not on region boundary");

		detail::RawRegion R1, R2; // R1 spans (ep -> sp), R2 spans (sp -> ep)
		R1.occs.assign(seq.begin(), seq.begin() + t);
		R2.occs.assign(seq.begin() + t, seq.end());
		bool marker_in_1 = detail::in_open_arc(R.marker, ep, sp, L);
		R1.marker = marker_in_1 ? R.marker : modL(ep + 1);
		R2.marker = marker_in_1 ? modL(ep - 1) : R.marker;
		for (Arrow b : R.arrows)
		{
			if (detail::in_open_arc(land_pos(b), ep, sp, L))
				R1.arrows.push_back(b);
			else
				R2.arrows.push_back(b);
		}
		work.push_back(std::move(R1));
		work.push_back(std::move(R2));
	}

	RegionDecomposition out;
	out.L = L;
	long vertex1 = M;
	for (auto &raw : done)
	{
		// root occurrence = the one strictly containing the marker
		size_t rootk = raw.occs.size();
		for (size_t k = 0; k < raw.occs.size(); ++k)
			if (detail::in_open_arc(raw.marker, raw.occs[k].lo, raw.occs[k].hi, L))
			{
				rootk = k;
				break;
			}
		if (rootk == raw.occs.size())
			throw std::logic_error("region marker lost");
		Region reg;
		reg.root_side = raw.occs[rootk].side;
		std::vector<std::string> labels;
		for (size_t k = 1; k <= raw.occs.size(); ++k)
			labels.push_back(p.sides[raw.occs[(rootk + k) % raw.occs.size()].side - 1]);
		reg.poly = Polygon(labels);
		reg.contains_root_side = (raw.marker == 1);
		reg.occs = raw.occs;
		for (auto const &o : raw.occs)
			if (o.lo == vertex1 || o.hi == vertex1)
				reg.contains_first_vertex = true;
		out.regions.push_back(std::move(reg));
	}

	// deterministic region order: by smallest boundary position measured from
	// the first vertex going counterclockwise
	{
		std::vector<size_t> order(out.regions.size());
		for (size_t k = 0; k < order.size(); ++k)
			order[k] = k;
		auto keyof = [&](const Region &r) {
			long best = L;
			for (auto const &o : r.occs)
				best = std::min(best, ((o.lo - vertex1) % L + L) % L);
			return best;
		};
		std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
			return keyof(out.regions[x]) < keyof(out.regions[y]);
		});
		std::vector<Region> sorted;
		for (size_t k : order)
			sorted.push_back(std::move(out.regions[k]));
		out.regions = std::move(sorted);
	}

	for (size_t r = 0; r < out.regions.size(); ++r)
		if (out.regions[r].contains_root_side)
			out.root_region = (int)r;

	// arrow adjacency: the two regions having the landing point as an
	// occurrence boundary
	for (Arrow a : d)
	{
		long ep = land_pos(a);
		ArrowInfo info;
		info.arrow = a;
		int found[2] = {-1, -1};
		int cnt = 0;
		for (size_t r = 0; r < out.regions.size(); ++r)
			for (auto const &o : out.regions[r].occs)
				if (o.lo == ep || o.hi == ep)
				{
					if (cnt < 2 && (cnt == 0 || found[0] != (int)r))
						found[cnt++] = (int)r;
					break;
				}
		if (cnt != 2)
			throw std::logic_error("arrow adjacency not found");
		info.root_side_region = found[0];
		info.cutoff_side_region = found[1];
		out.arrows.push_back(info);
	}

	// orient adjacency toward the root region (BFS over the region tree)
	{
		size_t n = out.regions.size();
		std::vector<int> dist(n, -1);
		dist[out.root_region] = 0;
		bool changed = true;
		while (changed)
		{
			changed = false;
			for (auto &ai : out.arrows)
			{
				int a = ai.root_side_region, b = ai.cutoff_side_region;
				if (dist[a] >= 0 && dist[b] < 0)
				{
					dist[b] = dist[a] + 1;
					changed = true;
				}
				else if (dist[b] >= 0 && dist[a] < 0)
				{
					dist[a] = dist[b] + 1;
					changed = true;
				}
			}
		}
		for (auto &ai : out.arrows)
		{
			if (dist[ai.root_side_region] > dist[ai.cutoff_side_region])
				std::swap(ai.root_side_region, ai.cutoff_side_region);
			// forward arrow: left = root-side region; backward: left = cutoff side
			if (arrow_is_backward(ai.arrow))
			{
				ai.left_region = ai.cutoff_side_region;
				ai.right_region = ai.root_side_region;
			}
			else
			{
				ai.left_region = ai.root_side_region;
				ai.right_region = ai.cutoff_side_region;
			}
		}
	}
	return out;
}

struct SplitResult
{
	Polygon root_polygon;
	Polygon cutoff_polygon;
	Polygon left, right;
	bool cutoff_contains_first_vertex = false;
	bool root_contains_first_vertex = true; // always true by construction
};

inline SplitResult split(const Polygon &p, Arrow a)
{
	if (!arrow_in_range(p, a) || arrow_is_trivial(p, a))
		throw std::invalid_argument("split requires a non-trivial arrow");
	RegionDecomposition rd = regions(p, Dissection{a});
	const ArrowInfo &ai = rd.arrows[0];
	SplitResult out;
	out.root_polygon = rd.regions[ai.root_side_region].poly;
	out.cutoff_polygon = rd.regions[ai.cutoff_side_region].poly;
	out.left = rd.regions[ai.left_region].poly;
	out.right = rd.regions[ai.right_region].poly;
	out.cutoff_contains_first_vertex = rd.regions[ai.cutoff_side_region].contains_first_vertex;
	return out;
}

// weight of the cutoff polygon
inline int chi(const Polygon &p, Arrow a) { return split(p, a).cutoff_polygon.weight(); }

struct ArrowClasses
{
	std::vector<Arrow> re; // ending on the root side, i = 2..n
	std::vector<Arrow> b;  // backward: j < i
	std::vector<Arrow> fv; // starting at the first vertex
};

inline ArrowClasses arrow_classes(const Polygon &p)
{
	ArrowClasses out;
	for (Arrow a : nontrivial_arrows(p))
	{
		if (arrow_ends_on_root(p, a))
			out.re.push_back(a);
		if (arrow_is_backward(a))
			out.b.push_back(a);
		if (arrow_from_first_vertex(a))
			out.fv.push_back(a);
	}
	return out;
}

inline Arrow sigma_arrow(const Polygon &p, Arrow a)
{
	int m = p.side_count();
	auto dec = [&](int x) { return x == 1 ? m : x - 1; };
	return Arrow{dec(a.i), dec(a.j)};
}

inline Arrow tau_arrow(const Polygon &p, Arrow a)
{
	int m = p.side_count();
	int n = p.weight();
	auto wrap = [&](int x) { return ((x - 1) % m + m) % m + 1; };
	if (a.j == m)
		return Arrow{wrap(n - a.i + 2), m};
	return Arrow{wrap(n - a.i + 2), wrap(n - a.j + 1)};
}

} // namespace polyhopf
