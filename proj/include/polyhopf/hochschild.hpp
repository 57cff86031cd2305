// Grafting operators as Hochschild 1-cocycles: the coproduct of a grafted
// forest factors through the marked coproduct of the forest, with the new
// vertex re-grafted onto the marked components of one tensor factor.
#pragma once

#include "polyhopf/trees.hpp"
#include <optional>
#include <vector>

namespace polyhopf {

namespace hochschild_detail {

struct MarkedPiece
{
	Tree tree;
	std::optional<int> mark; // vertex index within `tree`, when the original
	                         // marked vertex landed in this component
};

// one tensor term of the marked coproduct: pieces on each side keep track of
// whether they contain their tree's marked vertex
struct MarkedTensorTerm
{
	std::vector<MarkedPiece> left, right;
};

// marked coproduct of a single marked tree
inline std::vector<MarkedTensorTerm> marked_coproduct(const MarkedTree &mt)
{
	std::vector<MarkedTensorTerm> out;
	MarkedTensorTerm full;
	full.left.push_back({mt.tree, mt.mark});
	out.push_back(full); // T (x) 1
	MarkedTensorTerm empty;
	empty.right.push_back({mt.tree, mt.mark});
	out.push_back(empty); // 1 (x) T
	for (auto const &cut : admissible_cuts(mt.tree))
	{
		MarkedTensorTerm term;
		auto emit = [&](const std::vector<int> &verts, std::vector<MarkedPiece> &side) {
			Tree sub = induced_subtree(mt.tree, verts);
			std::optional<int> mark;
			for (size_t k = 0; k < verts.size(); ++k)
				if (verts[k] == mt.mark)
					mark = (int)k;
			side.push_back({sub, mark});
		};
		for (auto const &verts : cut.r_components)
			emit(verts, term.left);
		for (auto const &verts : cut.l_components)
			emit(verts, term.right);
		out.push_back(term);
	}
	return out;
}

// multiplicative extension to a marked forest (cartesian product of terms)
inline std::vector<MarkedTensorTerm> marked_coproduct(const MarkedForest &f)
{
	std::vector<MarkedTensorTerm> out{MarkedTensorTerm{}};
	for (auto const &mt : f)
	{
		std::vector<MarkedTensorTerm> next;
		for (auto const &acc : out)
			for (auto const &term : marked_coproduct(mt))
			{
				MarkedTensorTerm merged = acc;
				merged.left.insert(merged.left.end(), term.left.begin(),
				                   term.left.end());
				merged.right.insert(merged.right.end(), term.right.begin(),
				                    term.right.end());
				next.push_back(std::move(merged));
			}
		out = std::move(next);
	}
	return out;
}

// apply the grafting to the marked components of one side: unmarked pieces
// stay as forest factors, marked pieces are grafted onto the new vertex
// (which appears even when no marked piece survived: B(1) is the single
// vertex)
inline Forest graft_side(const Polygon &label, const std::vector<MarkedPiece> &side,
                         bool as_root)
{
	std::vector<Tree> loose;
	MarkedForest marked;
	for (auto const &piece : side)
	{
		if (piece.mark)
			marked.push_back({piece.tree, *piece.mark});
		else
			loose.push_back(piece.tree);
	}
	Tree g = as_root ? graft_root(label, marked) : graft_leaf(label, marked);
	loose.push_back(g);
	return make_forest(loose);
}

inline Forest plain_side(const std::vector<MarkedPiece> &side)
{
	std::vector<Tree> trees;
	for (auto const &piece : side)
		trees.push_back(piece.tree);
	return make_forest(trees);
}

} // namespace hochschild_detail

// Delta(B_r^s F) - (B_r (x) id)(Delta F) - 1 (x) B_r^s(F); zero iff B_r is a
// 1-cocycle on this input
inline FormalSum<ForestTensor> hochschild_root_defect(const Polygon &label,
                                                      const MarkedForest &f)
{
	using namespace hochschild_detail;
	Tree grafted = graft_root(label, f);
	FormalSum<ForestTensor> lhs = coproduct(forest_of(grafted));
	FormalSum<ForestTensor> rhs;
	rhs.add({Forest{}, forest_of(grafted)}, Rational(1));
	for (auto const &term : marked_coproduct(f))
		rhs.add({graft_side(label, term.left, true), plain_side(term.right)},
		        Rational(1));
	return lhs - rhs;
}

// mirror statement for leaf grafting: Delta(B_l F) = (id (x) B_l)(Delta F)
// + B_l(F) (x) 1
inline FormalSum<ForestTensor> hochschild_leaf_defect(const Polygon &label,
                                                      const MarkedForest &f)
{
	using namespace hochschild_detail;
	Tree grafted = graft_leaf(label, f);
	FormalSum<ForestTensor> lhs = coproduct(forest_of(grafted));
	FormalSum<ForestTensor> rhs;
	rhs.add({forest_of(grafted), Forest{}}, Rational(1));
	for (auto const &term : marked_coproduct(f))
		rhs.add({plain_side(term.left), graft_side(label, term.right, false)},
		        Rational(1));
	return lhs - rhs;
}

} // namespace polyhopf
