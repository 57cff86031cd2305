// Exact-arithmetic foundations: formal sums, wedge blocks, words, shuffles,
// deconcatenations, and the symbolic reversal/shuffle identity that the
// numeric module instantiates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyhopf/word.hpp"

using namespace polyhopf;

namespace {

Word letters(const std::string &s)
{
	Word w;
	for (char c : s)
		w.blocks.push_back(WedgeBlock{{Polygon({std::string(1, c), "z"})}});
	return w;
}

std::string fmt(const FormalSum<Word> &s)
{
	return s.to_string([](const Word &w) { return to_string(w); });
}

} // namespace

TEST_CASE("rational round trip")
{
	CHECK(to_string(rat(3, 6)) == "1/2");
	CHECK(to_string(rat(-4, 2)) == "-2");
	CHECK(rational_from_string("7/3") == rat(7, 3));
	CHECK(rational_from_string("-5") == rat(-5));
}

TEST_CASE("formal sums prune zeros and stay canonical")
{
	FormalSum<int> s;
	s.add(3, rat(1));
	s.add(3, rat(-1));
	CHECK(s.is_zero());
	s.add(1, rat(2));
	s.add(2, rat(-1, 2));
	FormalSum<int> t = s;
	t *= rat(2);
	CHECK(t.coefficient(1) == rat(4));
	CHECK(t.coefficient(2) == rat(-1));
	CHECK((s - s).is_zero());
	CHECK(-s + s == FormalSum<int>());
}

TEST_CASE("wedge blocks sort with sign and kill repeats")
{
	Polygon a = pgon("ab"), b = pgon("bc");
	auto sb = make_block({b, a});
	REQUIRE(sb.has_value());
	CHECK(sb->first == -1);
	CHECK(sb->second.factors == std::vector<Polygon>{a, b});
	CHECK(!make_block({a, a}).has_value());
	CHECK(wedge(a, b) == -wedge(b, a));
	CHECK(wedge(a, a).is_zero());
}

TEST_CASE("word formatting round trips")
{
	Word w = word_from_string("[a,b^b,c|a,b,c]");
	CHECK(to_string(w) == "[a,b^b,c|a,b,c]");
	CHECK(w.weight() == 4);
	CHECK(w.length() == 2);
	CHECK(to_string(Word{}) == "()");
	CHECK(word_from_string("()") == Word{});
}

TEST_CASE("shuffle product basics")
{
	Word ab = letters("ab"), c = letters("c");
	FormalSum<Word> s = shuffle(ab, c);
	CHECK(s.size() == 3); // cab, acb, abc
	CHECK(s.coefficient(letters("abc")) == rat(1));
	CHECK(s.coefficient(letters("cab")) == rat(1));
	// unit
	CHECK(shuffle(ab, Word{}) == FormalSum<Word>(ab));
	// commutativity and associativity on sums
	FormalSum<Word> x(letters("ab")), y(letters("cd")), z(letters("e"));
	CHECK(shuffle(x, y) == shuffle(y, x));
	CHECK(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z)));
	// repeated letters: (a) sha (a) = 2 aa
	CHECK(shuffle(letters("a"), letters("a")).coefficient(letters("aa")) == rat(2));
}

TEST_CASE("deconcatenations include the empty ends")
{
	Word w = letters("abc");
	auto dec = deconcatenations(w);
	REQUIRE(dec.size() == 4);
	CHECK(dec.front().first == Word{});
	CHECK(dec.front().second == w);
	CHECK(dec.back().first == w);
	CHECK(dec.back().second == Word{});
	CHECK(dec[1].first == letters("a"));
	CHECK(dec[1].second == letters("bc"));
}

TEST_CASE("shuffle is a deconcatenation-coproduct homomorphism (small cases)")
{
	// counting identity: number of shuffles of lengths p,q is binom(p+q,p)
	FormalSum<Word> s = shuffle(letters("abc"), letters("de"));
	Rational total;
	for (auto const &[w, c] : s.terms())
	{
		CHECK(w.length() == 5);
		total += c;
	}
	CHECK(total == rat(10));
}

// The reversal identity in the shuffle algebra, brute-forced over distinct
// letters: w + (-1)^n rev(w) = sum_{i=1}^{n-1} (-1)^(n-i+1) prefix_i sha
// rev(suffix_i). This is the exact statement the numeric module evaluates.
TEST_CASE("symbolic reversal/shuffle identity for n <= 5")
{
	const std::string pool = "abcde";
	for (int n = 2; n <= 5; ++n)
	{
		std::string word = pool.substr(0, n);
		std::string rev(word.rbegin(), word.rend());
		FormalSum<Word> lhs(letters(word));
		FormalSum<Word> r(letters(rev));
		r *= (n % 2) ? rat(-1) : rat(1);
		lhs += r;
		FormalSum<Word> rhs;
		for (int i = 1; i <= n - 1; ++i)
		{
			std::string pre = word.substr(0, i);
			std::string suf = word.substr(i);
			std::string sufrev(suf.rbegin(), suf.rend());
			FormalSum<Word> term = shuffle(letters(pre), letters(sufrev));
			term *= ((n - i + 1) % 2) ? rat(-1) : rat(1);
			rhs += term;
		}
		CHECK_MESSAGE(lhs == rhs, "n=", n, " lhs=", fmt(lhs), " rhs=", fmt(rhs));
	}
}

TEST_CASE("reversal identity fails with the uncorrected index range")
{
	// dropping the i=1 term (as a literal reading of the printed range would)
	// breaks the identity already at n=3
	int n = 3;
	std::string word = "abc", rev = "cba";
	FormalSum<Word> lhs(letters(word));
	lhs -= FormalSum<Word>(letters(rev)); // (-1)^3
	FormalSum<Word> rhs;
	for (int i = 2; i <= n - 1; ++i)
	{
		std::string pre = word.substr(0, i), suf = word.substr(i);
		std::string sufrev(suf.rbegin(), suf.rend());
		FormalSum<Word> term = shuffle(letters(pre), letters(sufrev));
		term *= ((n - i + 1) % 2) ? rat(-1) : rat(1);
		rhs += term;
	}
	CHECK(lhs != rhs);
}
