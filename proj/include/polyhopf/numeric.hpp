// Floating-point evaluation of the nested "all ones" polylogarithm series and
// of iterated integrals over strictly decreasing positive sample points, plus
// the numeric instantiation of the reversal/shuffle identity.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhopf {

struct EvalConfig
{
	int depth = 200;        // series truncation N
	double tolerance = 1e-8;
};

struct EvalResult
{
	double value = 0.0;
	double tail_bound = 0.0; // estimated truncation error
};

namespace numeric_detail {

// Truncated nested sum over 0 < k_1 < ... < k_r <= N, O(N*r). The recurrence
// is written in the trailing products T_j = z_j z_{j+1} ... z_r, which stay
// inside the unit disc even when individual z_j exceed 1 (reversed-argument
// case): with S~_j(k) the tail sum starting at k_j >= k rescaled by T_j^(-k),
//   S~_j(k) = T_j S~_j(k+1) + T_{j+1} S~_{j+1}(k+1) / k,  S~_{r+1} == 1,
// and the full sum is T_1 S~_1(1). Every intermediate stays bounded.
inline double li_ones_truncated(const std::vector<double> &z, int N)
{
	size_t r = z.size();
	if (r == 0)
		return 1.0; // empty product convention (unused by the public entry)
	std::vector<double> T(r + 2, 1.0);
	for (size_t j = r; j >= 1; --j)
		T[j] = T[j + 1] * z[j - 1];
	std::vector<double> next(N + 2, 1.0), cur(N + 2, 0.0);
	for (size_t j = r; j >= 1; --j)
	{
		std::fill(cur.begin(), cur.end(), 0.0);
		for (int k = N; k >= 1; --k)
			cur[k] = T[j] * cur[k + 1] + T[j + 1] * next[k + 1] / k;
		next = cur;
	}
	return T[1] * next[1];
}

} // namespace numeric_detail

// Convergence requires every trailing product z_j * z_{j+1} * ... * z_r to lie
// strictly inside the unit disc; the tail bound combines a doubling step with
// a geometric estimate at the worst trailing ratio.
inline EvalResult li_ones(const std::vector<double> &z, const EvalConfig &cfg = {})
{
	if (cfg.depth < 1 || cfg.tolerance <= 0)
		throw std::invalid_argument("invalid evaluation config");
	if (z.empty())
		return {0.0, 0.0}; // empty series
	double worst = 0.0, tail = 1.0;
	for (size_t j = z.size(); j-- > 0;)
	{
		tail *= std::fabs(z[j]);
		worst = std::max(worst, tail);
	}
	if (worst >= 1.0)
		throw std::domain_error("series diverges: trailing product >= 1");
	double at_n = numeric_detail::li_ones_truncated(z, cfg.depth);
	double at_2n = numeric_detail::li_ones_truncated(z, 2 * cfg.depth);
	double diff = std::fabs(at_2n - at_n);
	// terms past 2N are dominated by a geometric series with ratio `worst`
	EvalResult out;
	out.value = at_2n;
	out.tail_bound = diff + diff * worst / (1.0 - worst);
	return out;
}

struct SamplePoint
{
	std::vector<double> x; // x_1 > x_2 > ... > x_{n+1} > 0 for convergence
};

// (-1)^n I(0; x_1, ..., x_n; x_{n+1}) as the series in the consecutive ratios
inline EvalResult iterated_integral(const std::vector<double> &x, const EvalConfig &cfg = {})
{
	if (x.size() < 2)
		throw std::invalid_argument("iterated_integral needs at least two points");
	size_t n = x.size() - 1;
	std::vector<double> z;
	for (size_t j = 0; j + 1 < x.size(); ++j)
	{
		if (x[j] == 0.0)
			throw std::domain_error("zero interior point");
		z.push_back(x[j + 1] / x[j]);
	}
	EvalResult res = li_ones(z, cfg);
	if (n % 2)
	{
		res.value = -res.value;
	}
	return res;
}

struct ItershuffleResult
{
	bool holds = false;
	double lhs = 0.0;
	double rhs = 0.0;
	double tail_bound = 0.0;
};

// corrected reversal identity (established exactly in the shuffle algebra):
//   I(0; r_1..r_n; r_{n+1}) + (-1)^n I(0; r_n..r_1; r_{n+1})
//     = sum_{i=1}^{n-1} (-1)^(n-i+1) I(0; r_1..r_i; r_{n+1}) I(0; r_n..r_{i+1}; r_{n+1})
inline ItershuffleResult verify_itershuffle(const std::vector<double> &r,
                                            const EvalConfig &cfg = {})
{
	if (r.size() < 3)
		throw std::invalid_argument("verify_itershuffle needs n >= 2");
	size_t n = r.size() - 1;
	double y = r[n];
	auto I = [&](std::vector<double> pts) {
		pts.push_back(y);
		return iterated_integral(pts, cfg);
	};
	ItershuffleResult out;
	EvalResult fwd = I(std::vector<double>(r.begin(), r.begin() + n));
	std::vector<double> rev(r.begin(), r.begin() + n);
	std::reverse(rev.begin(), rev.end());
	EvalResult bwd = I(rev);
	out.lhs = fwd.value + ((n % 2) ? -bwd.value : bwd.value);
	out.tail_bound = fwd.tail_bound + bwd.tail_bound;
	for (size_t i = 1; i <= n - 1; ++i)
	{
		EvalResult a = I(std::vector<double>(r.begin(), r.begin() + i));
		std::vector<double> suf(r.begin() + i, r.begin() + n);
		std::reverse(suf.begin(), suf.end());
		EvalResult b = I(suf);
		double sign = ((n - i + 1) % 2) ? -1.0 : 1.0;
		out.rhs += sign * a.value * b.value;
		out.tail_bound += a.tail_bound * std::fabs(b.value) +
		                  b.tail_bound * std::fabs(a.value);
	}
	out.holds = std::fabs(out.lhs - out.rhs) < cfg.tolerance;
	return out;
}

} // namespace polyhopf
