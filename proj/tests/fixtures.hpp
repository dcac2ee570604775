#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "mtk/matroid.hpp"

namespace fixtures {

inline mtk::mask_t mask_of(std::initializer_list<int> elems) {
  mtk::mask_t m = 0;
  for (int e : elems) m |= mtk::element_bit(e);
  return m;
}

inline mtk::Matroid matroid_from(int n, std::vector<std::vector<int>> bases) {
  std::vector<mtk::mask_t> fam;
  for (const auto& b : bases) {
    mtk::mask_t m = 0;
    for (int e : b) m |= mtk::element_bit(e);
    fam.push_back(m);
  }
  return mtk::Matroid(n, fam);
}

// Fano plane: rank-3 matroid on [7] whose bases are the 3-subsets {a,b,c}
// with a xor b xor c != 0 (the non-lines of PG(2,2)).
inline mtk::Matroid fano() {
  std::vector<mtk::mask_t> fam;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c)
        if ((a ^ b ^ c) != 0)
          fam.push_back(mtk::element_bit(a) | mtk::element_bit(b) | mtk::element_bit(c));
  return mtk::Matroid(7, fam);
}

// Vamos matroid: rank-4 sparse paving matroid on [8]; every 4-subset is a
// basis except the five circuit-hyperplanes below ({5,6,7,8} stays a basis).
inline mtk::Matroid vamos() {
  const std::vector<mtk::mask_t> nonbases = {
      mask_of({1, 2, 3, 4}), mask_of({1, 2, 5, 6}), mask_of({1, 2, 7, 8}),
      mask_of({3, 4, 5, 6}), mask_of({3, 4, 7, 8})};
  std::vector<mtk::mask_t> fam;
  mtk::mask_t s = mtk::first_subset(4);
  do {
    if (std::find(nonbases.begin(), nonbases.end(), s) == nonbases.end())
      fam.push_back(s);
  } while (mtk::next_subset(s, 8));
  return mtk::Matroid(8, fam);
}

// Literal three-loop transcription of the basis-exchange definition over a
// family of equal-size subsets, kept deliberately independent of the bitmask
// implementation: sets of ints, explicit set difference, no early tricks.
inline bool oracle_exchange(const std::vector<std::set<int>>& family) {
  if (family.empty()) return false;
  for (const auto& A : family) {
    for (const auto& B : family) {
      for (int a : A) {
        if (B.count(a)) continue;  // a must lie in A \ B
        bool found = false;
        for (int b : B) {
          if (A.count(b)) continue;  // b must lie in B \ A
          std::set<int> C = A;
          C.erase(a);
          C.insert(b);
          for (const auto& D : family)
            if (D == C) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// All r-subsets of [n] as int sets, ascending colex order.
inline std::vector<std::set<int>> r_subsets_as_sets(int n, int r) {
  std::vector<std::set<int>> out;
  if (r < 0 || r > n) return out;
  mtk::mask_t s = mtk::first_subset(r);
  if (r == 0) {
    out.push_back({});
    return out;
  }
  do {
    std::set<int> cur;
    for (int e : mtk::mask_elements(s)) cur.insert(e);
    out.push_back(cur);
  } while (mtk::next_subset(s, n));
  return out;
}

// Brute-force labeled matroid count for one rank: walk every nonempty
// subfamily of the r-subsets of [n] and keep those passing the oracle.
inline std::uint64_t naive_labeled_count_rank(int n, int r) {
  auto subsets = r_subsets_as_sets(n, r);
  const std::size_t k = subsets.size();
  std::uint64_t count = 0;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<std::set<int>> family;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (std::uint64_t{1} << i)) family.push_back(subsets[i]);
    if (oracle_exchange(family)) ++count;
  }
  return count;
}

inline std::uint64_t naive_labeled_count(int n) {
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) total += naive_labeled_count_rank(n, r);
  return total;
}

}  // namespace fixtures
