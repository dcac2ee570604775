#pragma once

// Counting bounds evaluated in base-two log space with tracked error radii.
// Every verdict must clear ten times its accumulated error radius; anything
// closer is reported Indeterminate rather than guessed.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mtk/common.hpp"
#include "mtk/poly.hpp"

namespace mtk {

using Real = boost::multiprecision::cpp_bin_float_100;

// A base-two logarithm together with an absolute error bound on it.
struct LogBound {
  Real log2_value;
  Real error_radius;
};

// Decimal rendering with `digits` significant digits.
std::string real_str(const Real& x, int digits);

enum class Verdict { True, False, Indeterminate };
std::string verdict_str(Verdict v);

struct BoundCheck {
  Verdict verdict = Verdict::Indeterminate;
  Real margin = 0;        // log2-scale slack in favour of the claim
  Real error_radius = 0;  // margin must clear 10x this to yield a verdict
};

// log2 of the two matroid-count upper bounds:
//   log2_k(n, r)       = r(n-r) (n - 1.5 log2 n + 5)        0 <= r <= n, n >= 1
//   log2_k_prime(n, r) = n r^2 log2(n e / r)                1 <= r <= n, n >= 1
LogBound log2_k(int n, int r);
LogBound log2_k_prime(int n, int r);

// Exact C(Nd + m, m): the zero-pattern count bound for N polynomials of
// degree <= d in m variables.
Big rbg_pattern_bound(std::int64_t N, int d, int m);

// Does k > C(Nd+m, m) * (log2(3k) + N log2(c (eN)^d)) hold?  `log2k` carries
// the (possibly huge) k in log space.  Requires N >= 1, d >= 0, m >= 0,
// c >= 1.  Monotone in k above any point where it holds.
BoundCheck theorem2_holds(std::int64_t N, int d, int m, const Big& c,
                          const LogBound& log2k);

// delta(n) = n mod 2, and d(n) = (floor(n/2)-1)(ceil(n/2)-1); n >= 1.
int delta_of_n(std::int64_t n);
std::int64_t d_of_n(std::int64_t n);

// log2 of the classical lower bound 2^(C(n, floor(n/2))/n - n log2 n).
LogBound knuth_log2_lower(int n);

// log2 of (1 + delta(n)) * C(C(n, floor(n/2)), d(n) - 1); n >= 4.
// The first form is exact up to n = 30 and refuses beyond; the second runs
// through loggamma and works for any n the binomial argument allows.
LogBound conjecture_log2_count(int n);
LogBound conjecture_log2_count_lgamma(int n);

// Verifies log2(n+1) + max_r log2_k(n, r) <= n^3/4 for one n >= 12.
BoundCheck main_theorem_check(int n);

}  // namespace mtk
