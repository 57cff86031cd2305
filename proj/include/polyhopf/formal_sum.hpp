// Finite formal linear combinations over exact rationals.
//
// Basis elements of type B must have a strict total order (operator<) that is
// canonical, i.e. equal mathematical objects compare equal. Zero coefficients
// are pruned eagerly so that emptiness == zero and serialization is
// deterministic.
#pragma once

#include "polyhopf/rational.hpp"
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyhopf {

template <class B> class FormalSum
{
  public:
	FormalSum() = default;

	explicit FormalSum(B b, Rational c = Rational(1)) { add(std::move(b), std::move(c)); }

	void add(B b, Rational c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(std::move(b), c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	FormalSum &operator+=(const FormalSum &other)
	{
		for (auto const &[b, c] : other.terms_)
			add(b, c);
		return *this;
	}

	FormalSum &operator-=(const FormalSum &other)
	{
		for (auto const &[b, c] : other.terms_)
			add(b, -c);
		return *this;
	}

	FormalSum &operator*=(const Rational &s)
	{
		if (s == 0)
			terms_.clear();
		else
			for (auto &[b, c] : terms_)
				c *= s;
		return *this;
	}

	friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
	friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
	friend FormalSum operator*(const Rational &s, FormalSum a) { return a *= s; }
	friend FormalSum operator-(FormalSum a)
	{
		for (auto &[b, c] : a.terms_)
			c = -c;
		return a;
	}

	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	const std::map<B, Rational> &terms() const & { return terms_; }
	// value overload: iterating `f().terms()` over a temporary must not dangle
	std::map<B, Rational> terms() && { return std::move(terms_); }

	Rational coefficient(const B &b) const
	{
		auto it = terms_.find(b);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	bool operator==(const FormalSum &other) const { return terms_ == other.terms_; }
	bool operator!=(const FormalSum &other) const { return !(*this == other); }

	// Apply a basis-to-sum linear map.
	template <class C>
	FormalSum<C> map(const std::function<FormalSum<C>(const B &)> &f) const
	{
		FormalSum<C> out;
		for (auto const &[b, c] : terms_)
		{
			FormalSum<C> fb = f(b);
			fb *= c;
			out += fb;
		}
		return out;
	}

	std::string to_string(const std::function<std::string(const B &)> &fmt) const
	{
		if (terms_.empty())
			return "0";
		std::string out;
		bool first = true;
		for (auto const &[b, c] : terms_)
		{
			std::string cs = polyhopf::to_string(c);
			if (first)
			{
				if (cs == "1")
					out += fmt(b);
				else if (cs == "-1")
					out += "-" + fmt(b);
				else
					out += cs + "*" + fmt(b);
				first = false;
				continue;
			}
			if (c > 0)
				out += " + " + (cs == "1" ? fmt(b) : cs + "*" + fmt(b));
			else
			{
				std::string mag = polyhopf::to_string(Rational(-c));
				out += " - " + (mag == "1" ? fmt(b) : mag + "*" + fmt(b));
			}
		}
		return out;
	}

  private:
	std::map<B, Rational> terms_;
};

// Tensor product of two sums, combining basis pairs with `mul`.
template <class A, class B, class C, class F>
FormalSum<C> combine(const FormalSum<A> &x, const FormalSum<B> &y, F mul)
{
	FormalSum<C> out;
	for (auto const &[a, ca] : x.terms())
		for (auto const &[b, cb] : y.terms())
			out.add(mul(a, b), ca * cb);
	return out;
}

} // namespace polyhopf
