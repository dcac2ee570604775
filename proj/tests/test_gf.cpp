#include <doctest.h>

#include <random>
#include <vector>

#include "mtk/common.hpp"
#include "mtk/gf.hpp"

using namespace mtk;

TEST_CASE("field construction and basic identities") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto F = GFContext::from_order(q);
    CHECK(F.q() == q);
    CHECK(F.name() == "GF(" + std::to_string(q) + ")");
    for (int a = 0; a < q; ++a) {
      gf_t x = static_cast<gf_t>(a);
      CHECK(F.add(x, 0) == x);
      CHECK(F.mul(x, 1) == x);
      CHECK(F.add(x, F.neg(x)) == 0);
      CHECK(F.sub(x, x) == 0);
      if (a != 0) CHECK(F.mul(x, F.inv(x)) == 1);
    }
    CHECK_THROWS_AS((void)F.inv(0), input_error);
  }
  CHECK_THROWS_AS((void)GFContext::from_order(6), input_error);
  CHECK_THROWS_AS((void)GFContext::from_order(1), input_error);
  CHECK_THROWS_AS((void)GFContext::from_order(17), input_error);
  CHECK_THROWS_AS((void)GFContext::make(4, 1), input_error);
  CHECK(GFContext::make(2, 2) == GFContext::from_order(4));
}

TEST_CASE("GF(4) and GF(9) extension arithmetic") {
  // GF(4) with modulus x^2+x+1: the element x (encoded 2) has x^2 = x+1 (3)
  // and x^3 = 1.
  auto F4 = GFContext::from_order(4);
  CHECK(F4.mul(2, 2) == 3);
  CHECK(F4.mul(2, 3) == 1);
  CHECK(F4.pow(2, 3) == 1);
  CHECK(F4.add(2, 3) == 1);  // characteristic 2: x + (x+1) = 1

  // GF(9) with modulus x^2+1: x*x = -1 = 2; encoding digit base 3, x = 3.
  auto F9 = GFContext::from_order(9);
  CHECK(F9.mul(3, 3) == 2);
  CHECK(F9.p() == 3);
  CHECK(F9.k() == 2);
  // x has multiplicative order 4 (x^2 = -1, x^4 = 1), not 8.
  CHECK(F9.pow(3, 4) == 1);
  CHECK(F9.pow(3, 2) == 2);
}

TEST_CASE("from_int is the mod-p homomorphism") {
  auto F3 = GFContext::from_order(3);
  CHECK(F3.from_int(-1) == 2);
  CHECK(F3.from_int(5) == 2);
  CHECK(F3.from_int(-6) == 0);
  CHECK(F3.from_int(7) == 1);
  auto F9 = GFContext::from_order(9);
  CHECK(F9.from_int(-1) == 2);  // constant polynomial 2, not element 8
  CHECK(F9.from_int(4) == 1);
  auto F16 = GFContext::from_order(16);
  CHECK(F16.from_int(-3) == 1);  // mod 2
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto F = GFContext::from_order(q);
    for (long long z = -20; z <= 20; ++z) {
      // homomorphism property against small sums/products
      CHECK(F.add(F.from_int(z), F.from_int(z + 3)) == F.from_int(2 * z + 3));
      CHECK(F.mul(F.from_int(z), F.from_int(3)) == F.from_int(3 * z));
    }
  }
}

TEST_CASE("ops view matches the checked interface") {
  for (int q : {2, 5, 8, 9, 16}) {
    auto F = GFContext::from_order(q);
    auto ops = F.ops();
    CHECK(ops.q == q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto x = static_cast<gf_t>(a), y = static_cast<gf_t>(b);
        CHECK(ops.add(x, y) == F.add(x, y));
        CHECK(ops.mul(x, y) == F.mul(x, y));
        CHECK(ops.sub(x, y) == F.sub(x, y));
        CHECK(ops.neg(x) == F.neg(x));
        if (a != 0) CHECK(ops.inv_unchecked(x) == F.inv(x));
      }
  }
}

TEST_CASE("parse_field_list") {
  auto fields = parse_field_list("2,3,4,9");
  REQUIRE(fields.size() == 4);
  CHECK(fields[0].q() == 2);
  CHECK(fields[3].q() == 9);
  auto single = parse_field_list(" 5 ");
  REQUIRE(single.size() == 1);
  CHECK(single[0].q() == 5);
  CHECK_THROWS_AS((void)parse_field_list("2,2"), input_error);
  CHECK_THROWS_AS((void)parse_field_list("2,6"), input_error);
  CHECK_THROWS_AS((void)parse_field_list(""), input_error);
  CHECK_THROWS_AS((void)parse_field_list("2,,3"), input_error);
  CHECK_THROWS_AS((void)parse_field_list("32"), input_error);
}

TEST_CASE("determinant and rank basics") {
  auto F3 = GFContext::from_order(3);
  GFMatrix a(F3, 2, 2, {1, 1, 1, 2});
  CHECK(det(a) == 1);
  CHECK(rank(a) == 2);
  GFMatrix sing(F3, 2, 2, {1, 2, 2, 1});  // det = 1 - 4 = -3 = 0 mod 3
  CHECK(det(sing) == 0);
  CHECK(rank(sing) == 1);
  GFMatrix zero(F3, 3, 3);
  CHECK(det(zero) == 0);
  CHECK(rank(zero) == 0);
  GFMatrix empty(F3, 0, 0);
  CHECK(det(empty) == 1);  // empty product
  CHECK(rank(empty) == 0);
  GFMatrix rect(F3, 2, 3, {1, 0, 2, 0, 1, 1});
  CHECK(rank(rect) == 2);
  CHECK_THROWS_AS((void)det(rect), input_error);
}

TEST_CASE("det is multiplicative and rank is invariant under row ops") {
  std::mt19937_64 rng(20260818);
  for (int q : {2, 3, 4, 5, 7, 9}) {
    auto F = GFContext::from_order(q);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + static_cast<int>(rng() % 4);
      auto rand_mat = [&](int r, int c) {
        GFMatrix m(F, r, c);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j)
            m.at(i, j) = static_cast<gf_t>(rng() % q);
        return m;
      };
      GFMatrix a = rand_mat(n, n), b = rand_mat(n, n);
      CHECK(det(gf_mul(a, b)) == F.mul(det(a), det(b)));

      // Adding a multiple of one row to another preserves the determinant
      // and the rank.
      if (n >= 2) {
        GFMatrix c = a;
        gf_t lambda = static_cast<gf_t>(rng() % q);
        for (int j = 0; j < n; ++j)
          c.at(0, j) = F.add(c.at(0, j), F.mul(lambda, c.at(1, j)));
        CHECK(det(c) == det(a));
        CHECK(rank(c) == rank(a));
      }
    }
  }
}

TEST_CASE("is_nonsingular_cols and hstack_identity") {
  auto F2 = GFContext::from_order(2);
  // u = [[1],[1]] over GF(2); [u | I2] = [[1,1,0],[1,0,1]].
  GFMatrix u(F2, 2, 1, {1, 1});
  GFMatrix m = hstack_identity(u);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.at(1, 2) == 1);
  CHECK(is_nonsingular_cols(m, 0b011));  // cols 1,2 -> [[1,1],[1,0]]
  CHECK(is_nonsingular_cols(m, 0b101));  // cols 1,3 -> [[1,0],[1,1]]
  CHECK(is_nonsingular_cols(m, 0b110));  // identity block
  CHECK_THROWS_AS((void)is_nonsingular_cols(m, 0b111), input_error);
  CHECK_THROWS_AS((void)is_nonsingular_cols(m, 0b1000), input_error);

  // Cross-check against det on explicit submatrices over random matrices.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int q = std::vector<int>{2, 3, 4, 5}[rng() % 4];
    auto F = GFContext::from_order(q);
    int r = 1 + static_cast<int>(rng() % 3);
    int c = r + static_cast<int>(rng() % 3);
    GFMatrix a(F, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = static_cast<gf_t>(rng() % q);
    mask_t cols = first_subset(r);
    do {
      GFMatrix sub(F, r, r);
      int jj = 0;
      for (int j : mask_elements(cols)) {
        for (int i = 0; i < r; ++i) sub.at(i, jj) = a.at(i, j - 1);
        ++jj;
      }
      CHECK(is_nonsingular_cols(a, cols) == (det(sub) != 0));
    } while (next_subset(cols, c));
  }
}
