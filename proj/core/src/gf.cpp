#include "mtk/gf.hpp"

#include <array>
#include <sstream>

namespace mtk {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fixed irreducible moduli (coefficients of x^0..x^k, leading 1 implicit in
// position k).  Only the orders reachable with q <= 16 appear.
std::vector<int> modulus_for(int p, int k) {
  if (k == 1) return {0, 1};                    // x (unused)
  if (p == 2 && k == 2) return {1, 1, 1};       // x^2+x+1
  if (p == 2 && k == 3) return {1, 1, 0, 1};    // x^3+x+1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1}; // x^4+x+1
  if (p == 3 && k == 2) return {1, 0, 1};       // x^2+1
  throw input_error("gf: no modulus table for p=" + std::to_string(p) +
                    " k=" + std::to_string(k));
}

}  // namespace

struct GFContext::Impl {
  int p = 0, k = 0, q = 0;
  std::array<std::array<gf_t, 16>, 16> add_t{};
  std::array<std::array<gf_t, 16>, 16> mul_t{};
  std::array<gf_t, 16> neg_t{};
  std::array<gf_t, 16> inv_t{};
};

GFContext::GFContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

GFContext GFContext::make(int p, int k) {
  if (!is_prime(p)) throw input_error("gf_make: p must be prime, got " + std::to_string(p));
  if (k < 1) throw input_error("gf_make: k must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxFieldOrder)
    throw input_error("gf_make: order " + std::to_string(q) + " exceeds " +
                      std::to_string(kMaxFieldOrder));

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<int>(q);

  // digits of z in base p, least significant first
  auto digits = [&](int z) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) { d[i] = z % p; z /= p; }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int z = 0;
    for (int i = k - 1; i >= 0; --i) z = z * p + d[i];
    return z;
  };

  std::vector<int> mod = modulus_for(p, k);

  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      impl->add_t[a][b] = static_cast<gf_t>(undigits(s));

      // schoolbook product, then reduce by the modulus
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
          prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p * p) % p;
      }
      prod.resize(k);
      impl->mul_t[a][b] = static_cast<gf_t>(undigits(prod));
    }
    auto dn = digits(a);
    for (int i = 0; i < k; ++i) dn[i] = (p - dn[i]) % p;
    impl->neg_t[a] = static_cast<gf_t>(undigits(dn));
  }

  impl->inv_t[0] = 0;  // never consulted; inv(0) throws
  for (int a = 1; a < q; ++a) {
    int found = -1;
    for (int b = 1; b < q; ++b)
      if (impl->mul_t[a][b] == 1) { found = b; break; }
    if (found < 0) throw std::logic_error("gf_make: no inverse for element " + std::to_string(a));
    impl->inv_t[a] = static_cast<gf_t>(found);
  }

  // Exhaustive axiom check over all q^3 triples.  q <= 16 keeps this cheap,
  // and it turns any table-construction bug into a hard failure right here.
  auto& A = impl->add_t;
  auto& M = impl->mul_t;
  for (int a = 0; a < q; ++a) {
    if (A[a][0] != a) throw std::logic_error("gf_make: additive identity fails");
    if (M[a][1] != a) throw std::logic_error("gf_make: multiplicative identity fails");
    if (A[a][impl->neg_t[a]] != 0) throw std::logic_error("gf_make: negation fails");
    if (a != 0 && M[a][impl->inv_t[a]] != 1) throw std::logic_error("gf_make: inverse fails");
    for (int b = 0; b < q; ++b) {
      if (A[a][b] != A[b][a]) throw std::logic_error("gf_make: + not commutative");
      if (M[a][b] != M[b][a]) throw std::logic_error("gf_make: * not commutative");
      if (a != 0 && b != 0 && M[a][b] == 0) throw std::logic_error("gf_make: zero divisors");
      for (int c = 0; c < q; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) throw std::logic_error("gf_make: + not associative");
        if (M[M[a][b]][c] != M[a][M[b][c]]) throw std::logic_error("gf_make: * not associative");
        if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) throw std::logic_error("gf_make: not distributive");
      }
    }
  }

  return GFContext(std::move(impl));
}

GFContext GFContext::from_order(int q) {
  if (q < 2 || q > kMaxFieldOrder)
    throw input_error("gf: unsupported field order " + std::to_string(q));
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int k = 0;
    long long t = 1;
    while (t < q) { t *= p; ++k; }
    if (t == q) return make(p, k);
  }
  throw input_error("gf: " + std::to_string(q) + " is not a prime power");
}

int GFContext::p() const { return impl_->p; }
int GFContext::k() const { return impl_->k; }
int GFContext::q() const { return impl_->q; }
std::string GFContext::name() const { return "GF(" + std::to_string(impl_->q) + ")"; }

gf_t GFContext::add(gf_t a, gf_t b) const { return impl_->add_t[a][b]; }
gf_t GFContext::sub(gf_t a, gf_t b) const { return impl_->add_t[a][impl_->neg_t[b]]; }
gf_t GFContext::mul(gf_t a, gf_t b) const { return impl_->mul_t[a][b]; }
gf_t GFContext::neg(gf_t a) const { return impl_->neg_t[a]; }

gf_t GFContext::inv(gf_t a) const {
  if (a == 0) throw input_error(name() + ": inverse of zero");
  return impl_->inv_t[a];
}

gf_t GFContext::pow(gf_t a, std::uint64_t e) const {
  gf_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

gf_t GFContext::from_int(long long z) const {
  long long r = z % impl_->p;
  if (r < 0) r += impl_->p;
  return static_cast<gf_t>(r);  // constant polynomial: digit 0 only
}

bool GFContext::operator==(const GFContext& o) const {
  return impl_ == o.impl_ || (impl_->p == o.impl_->p && impl_->k == o.impl_->k);
}

GFContext::Ops GFContext::ops() const {
  return Ops{&impl_->add_t[0][0], &impl_->mul_t[0][0], impl_->neg_t.data(),
             impl_->inv_t.data(), impl_->q};
}

std::vector<GFContext> parse_field_list(const std::string& csv) {
  std::vector<GFContext> out;
  std::vector<int> seen;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw input_error("field list: empty entry in '" + csv + "'");
    tok = tok.substr(a, b - a + 1);
    int q = 0;
    try {
      size_t used = 0;
      q = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("field list: bad order '" + tok + "'");
    }
    for (int s : seen)
      if (s == q) throw input_error("field list: duplicate order " + std::to_string(q));
    seen.push_back(q);
    out.push_back(GFContext::from_order(q));
  }
  if (out.empty()) throw input_error("field list: no orders in '" + csv + "'");
  return out;
}

GFMatrix::GFMatrix(GFContext ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw input_error("GFMatrix: negative dimension");
}

GFMatrix::GFMatrix(GFContext ctx, int rows, int cols, std::vector<gf_t> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw input_error("GFMatrix: negative dimension");
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw input_error("GFMatrix: entry count does not match dimensions");
  for (gf_t x : a_)
    if (x >= ctx_.q()) throw input_error("GFMatrix: entry out of field range");
}

bool GFMatrix::operator==(const GFMatrix& o) const {
  return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// In-place elimination on a scratch copy; returns (rank, det-if-square).
std::pair<int, gf_t> eliminate(const GFContext& F, std::vector<gf_t>& m,
                               int rows, int cols) {
  int rk = 0;
  gf_t d = 1;
  auto at = [&](int i, int j) -> gf_t& { return m[static_cast<std::size_t>(i) * cols + j]; };
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) { d = 0; continue; }
    if (piv != rk) {
      for (int j = col; j < cols; ++j) std::swap(at(piv, j), at(rk, j));
      d = F.neg(d);
    }
    gf_t pv = at(rk, col);
    d = F.mul(d, pv);
    gf_t pvinv = F.inv(pv);
    for (int i = rk + 1; i < rows; ++i) {
      gf_t f = F.mul(at(i, col), pvinv);
      if (f == 0) continue;
      for (int j = col; j < cols; ++j)
        at(i, j) = F.sub(at(i, j), F.mul(f, at(rk, j)));
    }
    ++rk;
  }
  return {rk, d};
}

}  // namespace

gf_t det(const GFMatrix& a) {
  if (a.rows() != a.cols()) throw input_error("det: matrix not square");
  if (a.rows() == 0) return 1;
  std::vector<gf_t> m(static_cast<std::size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[static_cast<std::size_t>(i) * a.cols() + j] = a.at(i, j);
  auto [rk, d] = eliminate(a.ctx(), m, a.rows(), a.cols());
  return rk == a.rows() ? d : 0;
}

int rank(const GFMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<gf_t> m(static_cast<std::size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[static_cast<std::size_t>(i) * a.cols() + j] = a.at(i, j);
  return eliminate(a.ctx(), m, a.rows(), a.cols()).first;
}

GFMatrix gf_mul(const GFMatrix& a, const GFMatrix& b) {
  if (!(a.ctx() == b.ctx())) throw input_error("gf_mul: mixed fields");
  if (a.cols() != b.rows()) throw input_error("gf_mul: dimension mismatch");
  const GFContext& F = a.ctx();
  GFMatrix c(F, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      gf_t x = a.at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = F.add(c.at(i, j), F.mul(x, b.at(l, j)));
    }
  return c;
}

bool is_nonsingular_cols(const GFMatrix& a, mask_t cols) {
  if (popcount(cols) != a.rows())
    throw input_error("is_nonsingular_cols: need exactly rows() columns");
  if (!mask_in_range(cols, a.cols()))
    throw input_error("is_nonsingular_cols: column out of range");
  int r = a.rows();
  if (r == 0) return true;  // empty determinant is 1
  std::vector<gf_t> m(static_cast<std::size_t>(r) * r);
  int j = 0;
  for (int c : mask_elements(cols)) {
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i) * r + j] = a.at(i, c - 1);
    ++j;
  }
  return eliminate(a.ctx(), m, r, r).first == r;
}

GFMatrix hstack_identity(const GFMatrix& u) {
  int r = u.rows();
  GFMatrix a(u.ctx(), r, u.cols() + r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < u.cols(); ++j) a.at(i, j) = u.at(i, j);
    a.at(i, u.cols() + i) = 1;
  }
  return a;
}

}  // namespace mtk
