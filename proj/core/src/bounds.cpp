#include "mtk/bounds.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <iomanip>
#include <limits>
#include <sstream>

namespace mtk {

namespace {

const Real& ln2() {
  static const Real v = boost::multiprecision::log(Real(2));
  return v;
}

const Real& log2_e() {
  static const Real v = 1 / boost::multiprecision::log(Real(2));
  return v;
}

Real log2r(const Real& x) { return boost::multiprecision::log(x) / ln2(); }

// generous per-operation rounding allowance: a handful of ulps of the value
Real eps_of(const Real& x, int ops) {
  Real mag = boost::multiprecision::abs(x);
  if (mag < 1) mag = 1;
  return mag * std::numeric_limits<Real>::epsilon() * (8 * ops);
}

// log2 of an exact positive big integer, with its tiny conversion error
LogBound log2_of_big(const Big& x) {
  if (x <= 0) throw input_error("log2_of_big: argument must be positive");
  Real v = log2r(Real(x));
  return {v, eps_of(v, 4)};
}

Verdict verdict_from_margin(const Real& margin, const Real& err) {
  if (margin > 10 * err) return Verdict::True;
  if (margin < -10 * err) return Verdict::False;
  return Verdict::Indeterminate;
}

}  // namespace

std::string real_str(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "indeterminate";
  }
}

LogBound log2_k(int n, int r) {
  if (n < 1) throw input_error("log2_k: n >= 1 required");
  if (r < 0 || r > n) throw input_error("log2_k: 0 <= r <= n required");
  Real v = Real(r) * Real(n - r) * (Real(n) - Real(3) / 2 * log2r(Real(n)) + 5);
  return {v, eps_of(v, 8)};
}

LogBound log2_k_prime(int n, int r) {
  if (n < 1) throw input_error("log2_k_prime: n >= 1 required");
  if (r < 1 || r > n)
    throw input_error("log2_k_prime: 1 <= r <= n required (log(ne/r) needs r >= 1)");
  Real e = boost::multiprecision::exp(Real(1));
  Real v = Real(n) * Real(r) * Real(r) * log2r(Real(n) * e / Real(r));
  return {v, eps_of(v, 8)};
}

Big rbg_pattern_bound(std::int64_t N, int d, int m) {
  if (N < 0 || d < 0 || m < 0)
    throw input_error("rbg_pattern_bound: arguments must be nonnegative");
  Big top = Big(N) * d + m;
  return big_binom(top, static_cast<std::uint64_t>(m));
}

BoundCheck theorem2_holds(std::int64_t N, int d, int m, const Big& c,
                          const LogBound& log2k) {
  if (N < 1) throw input_error("theorem2_holds: N >= 1 required");
  if (d < 0 || m < 0) throw input_error("theorem2_holds: d, m >= 0 required");
  if (c < 1) throw input_error("theorem2_holds: c >= 1 required");

  LogBound H = log2_of_big(rbg_pattern_bound(N, d, m));

  // inner = log2(3k) + N log2(c (eN)^d)
  Real inner = log2k.log2_value + log2r(Real(3)) +
               Real(N) * (log2r(Real(c)) + Real(d) * (log2r(Real(N)) + log2_e()));
  Real inner_err = log2k.error_radius + eps_of(inner, 12);

  BoundCheck out;
  if (inner <= inner_err) {
    // right-hand side is at most ~0 while k >= 1; the claim holds trivially
    out.margin = log2k.log2_value;
    out.error_radius = log2k.error_radius;
    out.verdict = verdict_from_margin(out.margin, out.error_radius);
    return out;
  }
  Real rhs = H.log2_value + log2r(inner);
  Real rhs_err = H.error_radius + inner_err / (inner * ln2()) + eps_of(rhs, 4);
  out.margin = log2k.log2_value - rhs;
  out.error_radius = log2k.error_radius + rhs_err;
  out.verdict = verdict_from_margin(out.margin, out.error_radius);
  return out;
}

int delta_of_n(std::int64_t n) {
  if (n < 1) throw input_error("delta_of_n: n >= 1 required");
  return static_cast<int>(n % 2);
}

std::int64_t d_of_n(std::int64_t n) {
  if (n < 1) throw input_error("d_of_n: n >= 1 required");
  return (n / 2 - 1) * ((n + 1) / 2 - 1);
}

LogBound knuth_log2_lower(int n) {
  if (n < 1) throw input_error("knuth_log2_lower: n >= 1 required");
  Big central = big_binom(Big(n), static_cast<std::uint64_t>(n / 2));
  Real v = Real(central) / Real(n) - Real(n) * log2r(Real(n));
  return {v, eps_of(v, 8)};
}

namespace {

LogBound conjecture_common(int n, bool exact) {
  if (n < 4) throw input_error("conjecture_log2_count: n >= 4 required (d(n) >= 1)");
  Big a = big_binom(Big(n), static_cast<std::uint64_t>(n / 2));
  std::uint64_t s = static_cast<std::uint64_t>(d_of_n(n) - 1);
  int mult = 1 + delta_of_n(n);
  if (exact) {
    if (n > 30)
      throw input_error("conjecture_log2_count: exact route capped at n = 30; "
                        "use the lgamma route beyond");
    Big count = Big(mult) * big_binom(a, s);
    return log2_of_big(count);
  }
  // log2 C(a, s) via loggamma
  Real ra(a);
  Real rs(static_cast<double>(s));
  Real lg = boost::math::lgamma(ra + 1) - boost::math::lgamma(rs + 1) -
            boost::math::lgamma(ra - rs + 1);
  Real v = lg / ln2() + log2r(Real(mult));
  // lgamma of boost is accurate to a few ulps of the result
  return {v, eps_of(v, 64)};
}

}  // namespace

LogBound conjecture_log2_count(int n) { return conjecture_common(n, true); }
LogBound conjecture_log2_count_lgamma(int n) { return conjecture_common(n, false); }

BoundCheck main_theorem_check(int n) {
  if (n < 12) throw input_error("main_theorem_check: n >= 12 required");
  Real best = 0;
  Real best_err = 0;
  for (int r = 0; r <= n; ++r) {
    LogBound b = log2_k(n, r);
    if (b.log2_value > best) {
      best = b.log2_value;
      best_err = b.error_radius;
    }
  }
  Real lhs = log2r(Real(n) + 1) + best;
  Real rhs = Real(n) * n * n / 4;
  BoundCheck out;
  out.margin = rhs - lhs;
  out.error_radius = best_err + eps_of(lhs, 8);
  out.verdict = verdict_from_margin(out.margin, out.error_radius);
  return out;
}

}  // namespace mtk
