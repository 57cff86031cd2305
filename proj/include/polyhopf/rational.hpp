// Exact rational scalars for the symbolic core.
//
// Backed by GMP's mpq_class: canonical form (lowest terms, positive
// denominator) is maintained by the library, so structural equality is
// mathematical equality.
#pragma once

#include <gmpxx.h>
#include <string>

namespace polyhopf {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational &r) { return r.get_str(); }

inline Rational rational_from_string(const std::string &s)
{
	Rational r(s);
	r.canonicalize();
	return r;
}

} // namespace polyhopf
