#pragma once

// Arithmetic over GF(p^k) for small prime powers q = p^k <= 16, via lookup
// tables that are exhaustively verified against the field axioms when a
// context is built.  Extension fields use fixed irreducible moduli so that
// element encodings are stable across runs and platforms:
//   GF(4):  x^2 + x + 1     GF(8):  x^3 + x + 1
//   GF(9):  x^2 + 1         GF(16): x^4 + x + 1
// An element is encoded as an integer in [0, q): the base-p digit string of
// its polynomial coefficients (constant term = least significant digit).
// 0 and 1 are the additive and multiplicative identities in every field.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mtk/common.hpp"

namespace mtk {

inline constexpr int kMaxFieldOrder = 16;

using gf_t = std::uint8_t;

class GFContext {
 public:
  // Builds GF(p^k).  Throws input_error unless p is prime, k >= 1 and
  // p^k <= 16.  Construction verifies every field axiom over all q^3
  // element triples and aborts (logic_error) if any table is wrong.
  static GFContext make(int p, int k);
  // Same, from the order q = p^k.
  static GFContext from_order(int q);

  int p() const;
  int k() const;
  int q() const;
  std::string name() const;  // "GF(9)"

  gf_t add(gf_t a, gf_t b) const;
  gf_t sub(gf_t a, gf_t b) const;
  gf_t mul(gf_t a, gf_t b) const;
  gf_t neg(gf_t a) const;
  gf_t inv(gf_t a) const;  // throws input_error on a == 0
  gf_t pow(gf_t a, std::uint64_t e) const;

  // The ring homomorphism Z -> GF(p^k): z mod p, mapped to the constant
  // polynomial.  Handles negative z.
  gf_t from_int(long long z) const;

  bool operator==(const GFContext& o) const;

  // Raw table view for hot loops (valid while this context is alive).
  struct Ops {
    const gf_t* add_t;  // 16x16 row-major
    const gf_t* mul_t;
    const gf_t* neg_t;
    const gf_t* inv_t;  // inv_t[0] is meaningless
    int q;
    gf_t add(gf_t a, gf_t b) const { return add_t[(a << 4) | b]; }
    gf_t mul(gf_t a, gf_t b) const { return mul_t[(a << 4) | b]; }
    gf_t sub(gf_t a, gf_t b) const { return add_t[(a << 4) | neg_t[b]]; }
    gf_t neg(gf_t a) const { return neg_t[a]; }
    gf_t inv_unchecked(gf_t a) const { return inv_t[a]; }
  };
  Ops ops() const;

 private:
  struct Impl;
  explicit GFContext(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Parses "2,3,4,9" into contexts; rejects duplicates, non-prime-powers and
// orders above kMaxFieldOrder.
std::vector<GFContext> parse_field_list(const std::string& csv);

// Dense row-major matrix over one field.
class GFMatrix {
 public:
  GFMatrix(GFContext ctx, int rows, int cols);  // zero-filled
  GFMatrix(GFContext ctx, int rows, int cols, std::vector<gf_t> entries);

  const GFContext& ctx() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  gf_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  gf_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const GFMatrix& o) const;

 private:
  GFContext ctx_;
  int rows_, cols_;
  std::vector<gf_t> a_;
};

// Gaussian elimination over the matrix's field.
gf_t det(const GFMatrix& a);  // throws input_error unless square
int rank(const GFMatrix& a);
GFMatrix gf_mul(const GFMatrix& a, const GFMatrix& b);

// True iff the square submatrix of `a` on all rows and the columns selected
// by `cols` (bit j-1 = column j, 1-based) is nonsingular.  Requires
// popcount(cols) == rows().
bool is_nonsingular_cols(const GFMatrix& a, mask_t cols);

// [u | I_r]: appends an identity block to the right of u (r = u.rows()).
GFMatrix hstack_identity(const GFMatrix& u);

}  // namespace mtk
