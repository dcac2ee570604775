#pragma once

// Matroids on ground set [n] = {1,...,n}, stored as their basis family
// (bitmask-encoded r-subsets, sorted ascending).  Validation enforces the
// basis-exchange axiom, so a constructed Matroid is always a matroid.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mtk/common.hpp"

namespace mtk {

// perm[i-1] is the image of element i; the values are a bijection of [n].
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
mask_t apply_perm_mask(mask_t m, const Perm& p);

// True iff `family` (interpreted as a set of subsets of [n]) is nonempty,
// equicardinal, and satisfies basis exchange: for all B, B' in the family
// and every e in B' \ B there is f in B \ B' with (B \ {f}) | {e} in the
// family.  This is exactly the condition a Matroid's basis list must meet.
bool check_exchange(int n, std::vector<mask_t> family);

class Matroid {
 public:
  // Validates: 0 <= n <= kMaxGroundSet, masks within [n], family nonempty,
  // no duplicates, equicardinal, exchange axiom.  Throws input_error.
  Matroid(int n, std::vector<mask_t> bases);

  // Skips validation; `sorted_bases` must be strictly ascending and satisfy
  // the axioms (used by algorithms whose output is correct by construction).
  static Matroid trusted(int n, int r, std::vector<mask_t> sorted_bases);

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<mask_t>& bases() const { return bases_; }
  bool is_basis(mask_t b) const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid() = default;
  int n_ = 0;
  int r_ = 0;
  std::vector<mask_t> bases_;  // strictly ascending
};

// Dual matroid: bases are the complements of the bases.
Matroid dual(const Matroid& m);

// All r-subsets of [n] that are not bases, ascending.
std::vector<mask_t> nonbases(const Matroid& m);

// The relabelled matroid p(M).
Matroid apply_permutation(const Matroid& m, const Perm& p);

Matroid uniform_matroid(int n, int r);

// Total order on isomorphism classes: equal keys iff isomorphic matroids.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

inline constexpr int kCanonicalMaxN = 9;

// Canonicalisation searches all relabellings with branch-and-bound pruning
// on a prefix order, so it is exact (never hashes) but capped at
// n <= kCanonicalMaxN; beyond the cap it throws input_error.
CanonicalKey canonical_key(const Matroid& m);
Matroid canonical_form(const Matroid& m);
std::uint64_t automorphism_count(const Matroid& m);

}  // namespace mtk
