#include "mtk/poly.hpp"

#include <algorithm>
#include <cmath>

namespace mtk {

Big big_binom(const Big& n, std::uint64_t k) {
  if (n < 0) throw input_error("big_binom: negative n");
  if (Big(k) > n) return 0;
  Big acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= n - Big(k) + Big(i);
    acc /= Big(i);  // exact: acc == C(n-k+i, i)
  }
  return acc;
}

IntPoly::IntPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw input_error("IntPoly: negative variable count");
}

IntPoly IntPoly::constant(int nvars, const Big& c) {
  IntPoly p(nvars);
  if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), c);
  return p;
}

IntPoly IntPoly::variable(int nvars, int var) {
  if (var < 1 || var > nvars)
    throw input_error("IntPoly::variable: index " + std::to_string(var) +
                      " outside [1," + std::to_string(nvars) + "]");
  IntPoly p(nvars);
  ExpVec e(nvars, 0);
  e[var - 1] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

void IntPoly::add_term(const ExpVec& e, const Big& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw input_error("IntPoly::add_term: exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  if (nvars_ != o.nvars_) throw input_error("IntPoly: variable count mismatch in +");
  IntPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  if (nvars_ != o.nvars_) throw input_error("IntPoly: variable count mismatch in -");
  IntPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (nvars_ != o.nvars_) throw input_error("IntPoly: variable count mismatch in *");
  IntPoly out(nvars_);
  ExpVec e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) {
        int s = e1[v] + e2[v];
        if (s > 255) throw input_error("IntPoly: exponent overflow in *");
        e[v] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, c1 * c2);
    }
  return out;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  // highest-degree-first reads more naturally; ties by descending exponents
  std::vector<const std::pair<const ExpVec, Big>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  auto deg_of = [](const ExpVec& e) {
    int d = 0;
    for (std::uint8_t x : e) d += x;
    return d;
  };
  std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
    int da = deg_of(a->first), db = deg_of(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    const Big& c = t->second;
    Big ac = c < 0 ? Big(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    bool any_var = false;
    for (std::uint8_t e : t->first)
      if (e) any_var = true;
    std::string vars;
    for (int v = 0; v < nvars_; ++v) {
      if (t->first[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(v + 1);
      if (t->first[v] > 1) vars += "^" + std::to_string(int(t->first[v]));
    }
    if (!any_var) {
      s += ac.str();
    } else if (ac == 1) {
      s += vars;
    } else {
      s += ac.str() + "*" + vars;
    }
  }
  return s;
}

int poly_deg(const IntPoly& f) {
  int d = 0;
  for (const auto& [e, c] : f.terms()) {
    int t = 0;
    for (std::uint8_t x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Big poly_norm(const IntPoly& f) {
  Big m = 0;
  for (const auto& [e, c] : f.terms()) {
    Big ac = c < 0 ? Big(-c) : c;
    if (ac > m) m = ac;
  }
  return m;
}

Big mul_norm_bound(const IntPoly& f, const IntPoly& g) {
  Big nf = poly_norm(f), ng = poly_norm(g);
  if (nf == 0 || ng == 0) return 0;
  int d1 = poly_deg(f), d2 = poly_deg(g);
  return big_binom(Big(d1 + d2), static_cast<std::uint64_t>(d1)) * nf * ng;
}

gf_t eval_over(const IntPoly& f, const GFContext& F, const std::vector<gf_t>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw input_error("eval_over: point length != variable count");
  for (gf_t x : point)
    if (x >= F.q()) throw input_error("eval_over: point entry outside the field");
  gf_t acc = 0;
  for (const auto& [e, c] : f.terms()) {
    long long rem = static_cast<long long>(c % F.p());
    gf_t t = F.from_int(rem);
    for (int v = 0; v < f.nvars() && t != 0; ++v)
      if (e[v]) t = F.mul(t, F.pow(point[v], e[v]));
    acc = F.add(acc, t);
  }
  return acc;
}

PolySystem::PolySystem(int nvars_, std::vector<IntPoly> polys_)
    : nvars(nvars_), polys(std::move(polys_)) {
  if (nvars < 0) throw input_error("PolySystem: negative variable count");
  for (const IntPoly& f : polys)
    if (f.nvars() != nvars)
      throw input_error("PolySystem: polynomial has wrong variable count");
}

int PolySystem::max_degree() const {
  int d = 0;
  for (const IntPoly& f : polys) d = std::max(d, poly_deg(f));
  return d;
}

Big PolySystem::max_norm() const {
  Big m = 0;
  for (const IntPoly& f : polys) m = std::max(m, poly_norm(f));
  return m;
}

std::vector<mask_t> all_r_subsets(int n, int r) {
  if (n < 0 || r < 0 || r > n) throw input_error("all_r_subsets: need 0 <= r <= n");
  std::vector<mask_t> out;
  if (r == 0) return {0};
  mask_t s = first_subset(r);
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

namespace {

// Symbolic determinant of one maximal minor of [x | I_r].  Identity columns
// pin their row; the remaining rows-to-columns assignments are enumerated
// directly, so each term is a product of distinct variables with sign the
// parity of the full permutation.
void minor_det(int n, int r, mask_t B, IntPoly& out) {
  std::vector<int> cols = mask_elements(B);  // ascending
  // perm[row] = column position in `cols` (0-based); -1 = free
  std::vector<int> perm(r, -1);
  std::vector<int> free_rows;
  std::vector<int> free_cols;
  for (int t = 0; t < r; ++t) {
    int e = cols[t];
    if (e > n - r) {
      perm[e - (n - r) - 1] = t;
    } else {
      free_cols.push_back(t);
    }
  }
  for (int i = 0; i < r; ++i)
    if (perm[i] < 0) free_rows.push_back(i);

  int k = static_cast<int>(free_rows.size());
  std::vector<bool> used(k, false);
  ExpVec e(static_cast<std::size_t>(r) * (n - r), 0);

  auto emit = [&] {
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::fill(e.begin(), e.end(), 0);
    for (int a = 0; a < k; ++a) {
      int row = free_rows[a];                 // 0-based row of x
      int col = cols[perm[free_rows[a]]] - 1; // 0-based column of x
      e[static_cast<std::size_t>(row) * (n - r) + col] = 1;
    }
    out.add_term(e, (inv % 2 == 0) ? Big(1) : Big(-1));
  };

  auto go = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      emit();
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      used[c] = true;
      perm[free_rows[depth]] = free_cols[c];
      self(self, depth + 1);
      used[c] = false;
    }
  };
  go(go, 0);
}

}  // namespace

PolySystem minors_polynomials(int n, int r) {
  if (n < 0 || r < 0 || r > n || n > kMaxGroundSet)
    throw input_error("minors_polynomials: need 0 <= r <= n <= " +
                      std::to_string(kMaxGroundSet));
  int m = r * (n - r);
  // term count is sum over subsets of (free block size)!; refuse runaway sizes
  double est = 0;
  {
    std::vector<double> fact(r + 1, 1);
    for (int i = 1; i <= r; ++i) fact[i] = fact[i - 1] * i;
    for (mask_t B : all_r_subsets(n, r)) {
      int t = popcount(B & full_mask(n - r));
      est += fact[t];
    }
  }
  if (est > 1e7)
    throw budget_error("minors_polynomials: ~" + std::to_string(static_cast<std::uint64_t>(est)) +
                           " expanded terms exceed the 1e7 cap",
                       static_cast<std::uint64_t>(est));

  std::vector<IntPoly> polys;
  for (mask_t B : all_r_subsets(n, r)) {
    IntPoly p(m);
    minor_det(n, r, B, p);
    polys.push_back(std::move(p));
  }
  return PolySystem(m, std::move(polys));
}

std::vector<int> PatternBits::indices() const {
  std::vector<int> out;
  for (int w64 = 0; w64 < 2; ++w64) {
    std::uint64_t x = w[w64];
    while (x) {
      out.push_back(w64 * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

namespace {

struct ReducedPoly {
  // exponent vectors alongside nonzero field coefficients
  std::vector<std::pair<ExpVec, gf_t>> terms;
};

ReducedPoly reduce_poly(const IntPoly& f, const GFContext& F) {
  ReducedPoly out;
  for (const auto& [e, c] : f.terms()) {
    long long rem = static_cast<long long>(c % F.p());
    gf_t fc = F.from_int(rem);
    if (fc != 0) out.terms.emplace_back(e, fc);
  }
  return out;
}

}  // namespace

PatternSet enumerate_patterns(const PolySystem& sys, const GFContext& F,
                              std::uint64_t budget, int workers) {
  int N = sys.size();
  if (N > 128) throw input_error("enumerate_patterns: more than 128 polynomials");
  int m = sys.nvars;
  int q = F.q();

  // q^m, refusing when it does not fit 64 bits or exceeds the budget
  std::uint64_t points = 1;
  bool overflow = false;
  for (int i = 0; i < m && !overflow; ++i) {
    if (points > ~std::uint64_t{0} / static_cast<std::uint64_t>(q))
      overflow = true;
    else
      points *= static_cast<std::uint64_t>(q);
  }
  if (overflow || points > budget) {
    double bits = m * std::log2(double(q));
    throw budget_error(
        "enumerate_patterns: " + std::to_string(q) + "^" + std::to_string(m) +
            " ~= 2^" + std::to_string(bits) + " points exceed budget " +
            std::to_string(budget),
        overflow ? ~std::uint64_t{0} : points);
  }

  std::vector<ReducedPoly> red;
  red.reserve(N);
  int maxdeg = 0;
  for (const IntPoly& f : sys.polys) {
    red.push_back(reduce_poly(f, F));
    maxdeg = std::max(maxdeg, poly_deg(f));
  }

  int nchunks = std::max(1, workers);
  std::uint64_t chunk = (points + nchunks - 1) / std::max<std::uint64_t>(1, nchunks);
  std::vector<std::map<PatternBits, std::uint64_t>> found(nchunks);

  GFContext::Ops ops = F.ops();
  parallel_for(static_cast<std::size_t>(nchunks), workers, [&](std::size_t ci) {
    std::uint64_t lo = ci * chunk;
    std::uint64_t hi = std::min(points, lo + chunk);
    if (lo >= hi) return;
    auto& local = found[ci];

    // digits of the current point; the last variable cycles fastest
    std::vector<gf_t> u(m, 0);
    {
      std::uint64_t t = lo;
      for (int v = m - 1; v >= 0; --v) {
        u[v] = static_cast<gf_t>(t % q);
        t /= q;
      }
    }
    // power tables refreshed per point
    std::vector<std::vector<gf_t>> pw(m, std::vector<gf_t>(maxdeg + 1, 1));

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      for (int v = 0; v < m; ++v)
        for (int e = 1; e <= maxdeg; ++e) pw[v][e] = ops.mul(pw[v][e - 1], u[v]);
      PatternBits pb;
      for (int i = 0; i < N; ++i) {
        gf_t acc = 0;
        for (const auto& [e, c] : red[i].terms) {
          gf_t t = c;
          for (int v = 0; v < m && t != 0; ++v)
            if (e[v]) t = ops.mul(t, pw[v][e[v]]);
          acc = ops.add(acc, t);
        }
        if (acc != 0) pb.set(i);
      }
      local.try_emplace(pb, idx);

      // odometer step
      for (int v = m - 1; v >= 0; --v) {
        if (++u[v] < q) break;
        u[v] = 0;
      }
    }
  });

  PatternSet out;
  for (int ci = 0; ci < nchunks; ++ci)
    for (const auto& [pb, idx] : found[ci]) {
      auto it = out.find(pb);
      if (it == out.end()) {
        std::vector<gf_t> u(m, 0);
        std::uint64_t t = idx;
        for (int v = m - 1; v >= 0; --v) {
          u[v] = static_cast<gf_t>(t % q);
          t /= q;
        }
        out.emplace(pb, PatternWitness{q, std::move(u)});
      }
      // chunks scan disjoint ascending ranges in order, so the first time a
      // pattern appears across ci is its least witness
    }
  return out;
}

PatternSet patterns_across_fields(const PolySystem& sys,
                                  const std::vector<GFContext>& fields,
                                  std::uint64_t budget, int workers) {
  PatternSet out;
  for (const GFContext& F : fields) {
    PatternSet one;
    try {
      one = enumerate_patterns(sys, F, budget, workers);
    } catch (const budget_error& e) {
      throw budget_error(F.name() + ": " + e.what(), e.required);
    }
    for (auto& [pb, w] : one) out.try_emplace(pb, std::move(w));
  }
  return out;
}

}  // namespace mtk
