// Bar differentials, the deconcatenation coproduct, and the symmetry
// quotients, checked against hand-computed small cases and the structural
// laws d^2 = 0 and (D1 + D2) Lambda = 0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyhopf/bar.hpp"

using namespace polyhopf;

namespace {

std::string fmt(const FormalSum<Word> &s)
{
	return s.to_string([](const Word &w) { return to_string(w); });
}

FormalSum<Word> words(std::vector<std::pair<int, std::string>> terms)
{
	FormalSum<Word> out;
	for (auto const &[c, s] : terms)
		out.add(word_from_string(s), rat(c));
	return out;
}

} // namespace

TEST_CASE("triangle boundary under phi2 is the expected wedge sum")
{
	// three single-arrow trees of (a,b,c): 1->2 gives (a,c)^(b,c), 2->3 gives
	// (a,b)^(b,c) read as source^target = (b,c)^(a,b)... frozen directly:
	FormalSum<WedgeBlock> b = boundary(Rule::phi2, pgon("abc"));
	FormalSum<WedgeBlock> expect;
	expect += wedge(pgon("bc"), pgon("ab"));
	expect += wedge(pgon("ac"), pgon("bc"));
	expect -= wedge(pgon("ac"), pgon("ba"));
	CHECK(b == expect);
}

TEST_CASE("boundary is invariant under the edge perturbations")
{
	// reversing an edge flips both the sign and the wedge order, so the
	// induced boundary of a single polygon agrees across rule variants
	for (Polygon p : {pgon("abc"), pgon("abcd"), pgon("12345")})
	{
		FormalSum<WedgeBlock> base2 = boundary(Rule::phi2, p);
		CHECK(boundary(Rule::phi_re, p) == base2);
		FormalSum<WedgeBlock> base4 = boundary(Rule::phi4, p);
		CHECK(boundary(Rule::phi_fv, p) == base4);
		CHECK(boundary(Rule::phi_sigma_fv, p) == base4);
	}
}

TEST_CASE("d2 of a single-polygon word is minus the boundary")
{
	for (Rule r : {Rule::phi2, Rule::phi4})
		for (Polygon p : {pgon("abc"), pgon("abcd")})
		{
			Word w{{WedgeBlock{{p}}}};
			FormalSum<Word> lhs = d2(r, w);
			FormalSum<Word> rhs;
			for (auto const &[blk, c] : boundary(r, p).terms())
				rhs.add(Word{{blk}}, -c);
			CHECK(lhs == rhs);
		}
}

TEST_CASE("d1 merges adjacent blocks with the degree sign")
{
	Word w = word_from_string("[a,b|c,d|e,f]");
	FormalSum<Word> s = d1(w);
	// two merge positions, signs (-1)^(1-1)=+1 and (-1)^(2-1)=-1
	FormalSum<Word> expect = words({{1, "[a,b^c,d|e,f]"}, {-1, "[a,b|c,d^e,f]"}});
	CHECK_MESSAGE(s == expect, fmt(s));
	CHECK(d1(word_from_string("[a,b]")).is_zero());
	// merging equal factors kills the term
	CHECK(d1(word_from_string("[a,b|a,b]")).is_zero());
}

TEST_CASE("the decorated differentials square to zero")
{
	// the tau-decorated rules satisfy del^2 = 0 (extended as a derivation
	// over wedges); the raw-label rule phi1 does not, see the next case
	for (Rule r : {Rule::phi2, Rule::phi3, Rule::phi4, Rule::phi_re})
		for (Polygon p : {pgon("abcd"), pgon("12345")})
		{
			FormalSum<WedgeBlock> bb;
			for (auto const &[blk, c] : boundary(r, p).terms())
			{
				FormalSum<WedgeBlock> d = block_boundary(r, blk);
				d *= c;
				bb += d;
			}
			CHECK(bb.is_zero());
			FormalSum<Word> x(Word{{WedgeBlock{{p}}}});
			CHECK(d2(r, d2(r, x)).is_zero());
		}
}

TEST_CASE("the raw-label rule needs the decoration: phi1 fails from weight 3")
{
	// without the reversal decoration the double-boundary terms add instead
	// of cancelling; the simplest failure is a clean doubling
	Polygon p = pgon("abcd");
	FormalSum<Word> x(Word{{WedgeBlock{{p}}}});
	CHECK(!d2(Rule::phi1, d2(Rule::phi1, x)).is_zero());
	FormalSum<Word> defect = cocycle_defect(Rule::phi1, p);
	CHECK_MESSAGE(defect == words({{2, "[a,d|b,a^c,a]"}}), fmt(defect));
	// at weight 2 there is nothing to cancel yet
	CHECK(cocycle_defect(Rule::phi1, pgon("abc")).is_zero());
}

TEST_CASE("decorated linearizations are bar cocycles in small weight")
{
	for (Rule r : {Rule::phi2, Rule::phi3, Rule::phi4, Rule::phi_re})
		for (Polygon p : {pgon("abc"), pgon("abcd")})
			CHECK_MESSAGE(cocycle_defect(r, p).is_zero(),
			              to_string(r), " ", to_string(p), " defect ",
			              fmt(cocycle_defect(r, p)));
}

TEST_CASE("bar coproduct deconcatenates")
{
	Word w = word_from_string("[a,b|c,d]");
	FormalSum<WordTensor> cp = bar_coproduct(w);
	CHECK(cp.size() == 3);
	CHECK(cp.coefficient({Word{}, w}) == rat(1));
	CHECK(cp.coefficient({w, Word{}}) == rat(1));
	CHECK(cp.coefficient({word_from_string("[a,b]"), word_from_string("[c,d]")}) == rat(1));
}

TEST_CASE("reflection quotient identifies reversed factors with the parity sign")
{
	// weight 2: tau sign is (-1)^3 = -1, so (b,a,c) = -(a,b,c) ... with the
	// representative chosen as the orbit minimum
	FormalSum<Word> x(word_from_string("[b,a,c]"));
	FormalSum<Word> q = quotient(x, q_spec(2));
	CHECK_MESSAGE(q == words({{-1, "[a,b,c]"}}), fmt(q));
	// weight 3: tau sign is (-1)^4 = +1
	FormalSum<Word> y(word_from_string("[c,b,a,d]"));
	CHECK(quotient(y, q_spec(3)) == words({{1, "[a,b,c,d]"}}));
	// weight above the cutoff is untouched
	CHECK(quotient(y, q_spec(2)) == y);
	// weight-1 factors are untouched
	FormalSum<Word> z(word_from_string("[b,a]"));
	CHECK(quotient(z, q_spec(4)) == z);
}

TEST_CASE("reflection quotient kills self-reversed odd-sign factors")
{
	// tau(a,b,a) = (b,a,a)... find a genuinely self-paired case: (a,a,b) has
	// tau(a,a,b) = (a,a,b), forcing Q = -Q at weight 2
	Polygon p = pgon("aab");
	REQUIRE(tau(p) == p);
	FormalSum<Word> x{FormalSum<Word>(Word{{WedgeBlock{{p}}}})};
	CHECK(quotient(x, q_spec(2)).is_zero());
}

TEST_CASE("rotation quotient identifies cyclic shifts without sign")
{
	FormalSum<Word> x(word_from_string("[2,3,1]"));
	CHECK(quotient(x, r_spec(2)) == words({{1, "[1,2,3]"}}));
	FormalSum<Word> y(word_from_string("[b,c,d,a]"));
	CHECK(quotient(y, r_spec(3)) == words({{1, "[a,b,c,d]"}}));
}

TEST_CASE("log normalization rewrites weight-1 factors against the reference")
{
	FormalSum<Word> x(word_from_string("[a,b]"));
	CHECK(log_normalize(x, "a") == words({{-1, "[b,a]"}}));
	CHECK(log_normalize(x, "c") == words({{1, "[a,c]"}, {-1, "[b,c]"}}));
	// (rho, b) keeps only its own term
	FormalSum<Word> y(word_from_string("[c,b]"));
	CHECK(log_normalize(y, "c") == words({{-1, "[b,c]"}}));
	// higher-weight factors pass through
	FormalSum<Word> z(word_from_string("[a,b,c]"));
	CHECK(log_normalize(z, "a") == z);
	// multilinear expansion inside a wedge block
	FormalSum<Word> w(word_from_string("[a,b^c,d]"));
	FormalSum<Word> lw = log_normalize(w, "e");
	CHECK(lw == words({{1, "[a,e^c,e]"},
	                   {-1, "[a,e^d,e]"},
	                   {-1, "[b,e^c,e]"},
	                   {1, "[b,e^d,e]"}}));
}

TEST_CASE("smallest label scans all factors")
{
	CHECK(smallest_label(words({{1, "[c,d|b,e]"}})) == "b");
	CHECK(smallest_label(FormalSum<Word>()) == "");
}
