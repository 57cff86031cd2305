// Polygons, dihedral maps, arrows, dissections, and the circle-geometry
// region decomposition, frozen against hand-worked examples.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyhopf/polygon.hpp"
#include <set>

using namespace polyhopf;

namespace {

Polygon standard(int m)
{
	std::vector<std::string> s;
	for (int i = 1; i <= m; ++i)
		s.push_back(std::to_string(i));
	return Polygon(s);
}

} // namespace

TEST_CASE("polygon basics and parsing")
{
	Polygon p = polygon_from_string("a,b,c");
	CHECK(p.side_count() == 3);
	CHECK(p.weight() == 2);
	CHECK(to_string(p) == "a,b,c");
	CHECK(pgon("abc") == p);
	CHECK(polygon_from_string(to_string(standard(6))) == standard(6));
}

TEST_CASE("tau reverses the non-root sides and is an involution")
{
	CHECK(tau(pgon("abc")) == pgon("bac"));
	CHECK(tau(pgon("abcd")) == pgon("cbad"));
	for (int m = 3; m <= 6; ++m)
		CHECK(tau(tau(standard(m))) == standard(m));
}

TEST_CASE("sigma rotates with order m and the dihedral relation holds")
{
	Polygon p = standard(4);
	Polygon q = p;
	for (int k = 0; k < 4; ++k)
		q = sigma(q);
	CHECK(q == p);
	CHECK(sigma(pgon("123")) == pgon("231"));
	// tau sigma tau = sigma^{-1}
	for (int m = 3; m <= 6; ++m)
	{
		Polygon s = standard(m);
		Polygon lhs = tau(sigma(tau(s)));
		Polygon rhs = s;
		for (int k = 0; k < m - 1; ++k)
			rhs = sigma(rhs);
		CHECK(lhs == rhs);
	}
}

TEST_CASE("arrow triviality, direction, and classes")
{
	Polygon p = standard(6);
	int m = 6;
	auto arrows = nontrivial_arrows(p);
	CHECK(arrows.size() == size_t(m * (m - 2)));
	for (Arrow a : arrows)
	{
		CHECK(!arrow_is_trivial(p, a));
		CHECK(arrow_is_backward(a) == (a.j < a.i));
	}
	// trivial: j == i or j == i-1 (mod m)
	CHECK(arrow_is_trivial(p, {3, 3}));
	CHECK(arrow_is_trivial(p, {3, 2}));
	CHECK(arrow_is_trivial(p, {1, 6}));
	CHECK(!arrow_is_trivial(p, {2, 6}));
	CHECK(to_string(Arrow{2, 6}) == "2->6");
	CHECK(arrow_from_string("2->6") == Arrow{2, 6});
}

TEST_CASE("sigma and tau act on arrows compatibly")
{
	int m = 6;
	Polygon p = standard(m);
	// tau is an involution on nontrivial arrows; sigma has order m
	for (Arrow a : nontrivial_arrows(p))
	{
		CHECK(tau_arrow(p, tau_arrow(p, a)) == a);
		Arrow b = a;
		for (int k = 0; k < m; ++k)
			b = sigma_arrow(p, b);
		CHECK(b == a);
		CHECK(!arrow_is_trivial(p, tau_arrow(p, a)));
		CHECK(!arrow_is_trivial(p, sigma_arrow(p, a)));
	}
	// root-ending arrows map to root-ending arrows under tau
	for (int i = 2; i < m; ++i)
		CHECK(tau_arrow(p, Arrow{i, m}) == Arrow{m - i + 1, m});
}

TEST_CASE("dissection enumeration matches the naive subset oracle")
{
	// every subset of pairwise compatible nontrivial arrows, nothing else
	for (int m = 3; m <= 5; ++m)
	{
		Polygon p = standard(m);
		auto arrows = nontrivial_arrows(p);
		std::set<Dissection> brute;
		for (size_t mask = 0; mask < (size_t(1) << arrows.size()); ++mask)
		{
			Dissection d;
			for (size_t k = 0; k < arrows.size(); ++k)
				if (mask & (size_t(1) << k))
					d.push_back(arrows[k]);
			std::sort(d.begin(), d.end());
			if (is_dissection(p, d))
				brute.insert(d);
		}
		auto fast = enumerate_dissections(p);
		std::set<Dissection> fastset(fast.begin(), fast.end());
		CHECK(fast.size() == fastset.size()); // no duplicates
		CHECK(fastset == brute);
	}
}

TEST_CASE("dissection counts are frozen")
{
	CHECK(enumerate_dissections(standard(3)).size() == 4);
	CHECK(enumerate_dissections(standard(4)).size() == 21);
	CHECK(enumerate_dissections(standard(5)).size() == 126);
	CHECK(enumerate_dissections(standard(6)).size() == 818);
}

TEST_CASE("crossing test is symmetric and ignores shared endpoints")
{
	Polygon p = standard(5);
	auto arrows = nontrivial_arrows(p);
	for (Arrow a : arrows)
		for (Arrow b : arrows)
		{
			CHECK(arrows_intersect(p, a, b) == arrows_intersect(p, b, a));
			if (a.i == b.i)
				CHECK(!arrows_intersect(p, a, b)); // common start vertex
		}
	// concrete cases on the 5-gon: {1,3} and {2,4} interleave, {3,4} nests
	// inside {2,5}, and {4,1} reaches around behind {1,3}
	CHECK(arrows_intersect(p, {1, 3}, {2, 4}));
	CHECK(arrows_intersect(p, {1, 3}, {4, 1}));
	CHECK(!arrows_intersect(p, {2, 5}, {3, 4}));
}

TEST_CASE("region decomposition invariants across all dissections")
{
	for (int m = 3; m <= 5; ++m)
	{
		Polygon p = standard(m);
		for (auto const &d : enumerate_dissections(p))
		{
			RegionDecomposition rd = regions(p, d);
			CHECK(rd.regions.size() == d.size() + 1);
			int wsum = 0, roots = 0, firsts = 0;
			for (auto const &r : rd.regions)
			{
				wsum += r.poly.weight();
				roots += r.contains_root_side ? 1 : 0;
				firsts += r.contains_first_vertex ? 1 : 0;
			}
			CHECK(wsum == p.weight());
			CHECK(roots == 1);
			// the first vertex sits on a side arc of exactly one region,
			// unless a chord starts there, in which case the two outermost
			// regions around that vertex both have an arc ending at it
			// (regions wedged between two such chords touch the vertex only
			// at a point and carry no side arc there)
			bool chord_at_first = false;
			for (Arrow a : d)
				chord_at_first |= (a.i == 1);
			CHECK(firsts == (chord_at_first ? 2 : 1));
			CHECK(rd.regions[rd.root_region].contains_first_vertex);
			CHECK(rd.regions[rd.root_region].contains_root_side);
			CHECK(rd.arrows.size() == d.size());
		}
	}
}

TEST_CASE("hexagon example: regions of {2->6,6->2,4->5}")
{
	Polygon p = pgon("123456");
	RegionDecomposition rd = regions(p, {{2, 6}, {6, 2}, {4, 5}});
	std::multiset<std::string> labels;
	for (auto const &r : rd.regions)
		labels.insert(to_string(r.poly));
	CHECK(labels == std::multiset<std::string>{"1,6", "2,6", "3,5,2", "4,5"});
}

TEST_CASE("split pieces and chi")
{
	Polygon h = pgon("123456");
	SplitResult sr = split(h, {2, 6});
	CHECK(to_string(sr.root_polygon) == "1,6");
	CHECK(to_string(sr.cutoff_polygon) == "2,3,4,5,6");
	CHECK(sr.left == sr.root_polygon); // forward arrow
	CHECK(sr.right == sr.cutoff_polygon);
	SplitResult bw = split(h, {6, 2});
	CHECK(bw.left == bw.cutoff_polygon); // backward arrow
	CHECK(chi(h, {2, 6}) == 4);
	CHECK(chi(h, {4, 5}) == 1);
	CHECK(chi(h, {6, 2}) == 3);
	// weights of the two pieces always add to the weight of the polygon
	for (int m = 3; m <= 6; ++m)
	{
		Polygon p = standard(m);
		for (Arrow a : nontrivial_arrows(p))
		{
			SplitResult s = split(p, a);
			CHECK(s.root_polygon.weight() + s.cutoff_polygon.weight() == p.weight());
			CHECK(chi(p, a) >= 1);
			CHECK(chi(p, a) <= p.weight() - 1);
		}
	}
}

TEST_CASE("many arrows from one vertex split correctly")
{
	// regression: chords meeting at a shared start vertex
	Polygon p = standard(5);
	RegionDecomposition rd = regions(p, {{4, 1}, {4, 2}, {4, 5}});
	CHECK(rd.regions.size() == 4);
	int wsum = 0;
	for (auto const &r : rd.regions)
		wsum += r.poly.weight();
	CHECK(wsum == 4);
}
