#pragma once

// Multivariate polynomials with exact integer coefficients, their norms and
// degree bounds, and exhaustive zero-pattern enumeration over small finite
// fields.  A "zero pattern" of a system (f_1,...,f_N) at a point u is the
// set of indices i with f_i(u) != 0 (realisable sign-support, without signs).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtk/common.hpp"
#include "mtk/gf.hpp"

namespace mtk {

using Big = boost::multiprecision::cpp_int;

// Exact binomial coefficient with a big-integer top argument.
Big big_binom(const Big& n, std::uint64_t k);

// Exponent vectors have fixed length nvars; entry v is the exponent of
// variable x_{v+1}.
using ExpVec = std::vector<std::uint8_t>;

class IntPoly {
 public:
  explicit IntPoly(int nvars);
  static IntPoly constant(int nvars, const Big& c);
  static IntPoly variable(int nvars, int var);  // x_var, 1-based

  int nvars() const { return nvars_; }
  // Term map keyed by exponent vector; never holds zero coefficients.
  const std::map<ExpVec, Big>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExpVec& e, const Big& c);

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly&) const = default;

  std::string to_string() const;  // "3*x1^2*x2 - 5"; "0" for the zero poly

 private:
  int nvars_;
  std::map<ExpVec, Big> terms_;
};

// Total degree; 0 for the zero polynomial (convention used throughout).
int poly_deg(const IntPoly& f);
// Coefficient norm: max |coefficient|, 0 for the zero polynomial.
Big poly_norm(const IntPoly& f);
// C(d1+d2, d1) * norm(f) * norm(g), an upper bound for norm(f*g).
Big mul_norm_bound(const IntPoly& f, const IntPoly& g);

// Evaluates f over F at `point` (one field element per variable), mapping
// each integer coefficient through F.from_int.
gf_t eval_over(const IntPoly& f, const GFContext& F, const std::vector<gf_t>& point);

struct PolySystem {
  int nvars = 0;
  std::vector<IntPoly> polys;

  PolySystem() = default;
  PolySystem(int nvars_, std::vector<IntPoly> polys_);  // validates var counts

  int size() const { return static_cast<int>(polys.size()); }
  int max_degree() const;  // 0 if empty or all zero
  Big max_norm() const;
};

// All r-subsets of [n] in increasing mask order (the order minor systems
// and censuses use everywhere).
std::vector<mask_t> all_r_subsets(int n, int r);

// The C(n,r) maximal minors of [x | I_r], one polynomial per r-subset of
// column indices in increasing mask order.  Variables are the entries of
// the r x (n-r) block x in row-major order.  Every minor is nonzero, has
// norm 1 and degree <= r.  Throws budget_error when the expanded term
// count would be excessive.
PolySystem minors_polynomials(int n, int r);

// Subset of [N] as two 64-bit words; N <= 128.
struct PatternBits {
  std::array<std::uint64_t, 2> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  auto operator<=>(const PatternBits&) const = default;

  std::vector<int> indices() const;  // ascending, 0-based
};

struct PatternWitness {
  int q = 0;                  // field the witness lives in
  std::vector<gf_t> point;    // least realising point in odometer order
};

using PatternSet = std::map<PatternBits, PatternWitness>;

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

// Exhaustively scans all q^nvars points (odometer order: the last variable
// cycles fastest) and collects every realisable zero pattern with its least
// witness.  Refuses up front with budget_error when q^nvars > budget; the
// error reports the required budget.  Deterministic for any worker count.
PatternSet enumerate_patterns(const PolySystem& sys, const GFContext& F,
                              std::uint64_t budget = kDefaultEvalBudget,
                              int workers = 1);

// Union over several fields; a pattern's witness comes from the first field
// (in the given order) that realises it.  Budget errors name the field.
PatternSet patterns_across_fields(const PolySystem& sys,
                                  const std::vector<GFContext>& fields,
                                  std::uint64_t budget = kDefaultEvalBudget,
                                  int workers = 1);

}  // namespace mtk
