#include "mtk/matroid.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace mtk {

bool is_permutation(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

Perm inverse_perm(const Perm& p) {
  if (!is_permutation(p)) throw input_error("inverse_perm: not a permutation");
  Perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i] - 1] = i + 1;
  return q;
}

mask_t apply_perm_mask(mask_t m, const Perm& p) {
  mask_t out = 0;
  while (m) {
    int b = std::countr_zero(m);
    out |= element_bit(p[b]);
    m &= m - 1;
  }
  return out;
}

bool check_exchange(int n, std::vector<mask_t> family) {
  if (n < 0 || n > kMaxGroundSet)
    throw input_error("check_exchange: n outside [0," +
                      std::to_string(kMaxGroundSet) + "]");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty()) return false;
  int r = popcount(family.front());
  for (mask_t b : family)
    if (!mask_in_range(b, n) || popcount(b) != r) return false;

  auto member = [&](mask_t m) {
    return std::binary_search(family.begin(), family.end(), m);
  };
  for (mask_t b1 : family)
    for (mask_t b2 : family) {
      if (b1 == b2) continue;
      mask_t in2not1 = b2 & ~b1;
      mask_t in1not2 = b1 & ~b2;
      for (mask_t em = in2not1; em;) {
        mask_t e = em & -em;
        em &= em - 1;
        bool ok = false;
        for (mask_t fm = in1not2; fm;) {
          mask_t f = fm & -fm;
          fm &= fm - 1;
          if (member((b1 & ~f) | e)) { ok = true; break; }
        }
        if (!ok) return false;
      }
    }
  return true;
}

Matroid::Matroid(int n, std::vector<mask_t> bases) {
  if (n < 0 || n > kMaxGroundSet)
    throw input_error("Matroid: n out of range [0," + std::to_string(kMaxGroundSet) + "]");
  if (bases.empty()) throw input_error("Matroid: basis family is empty");
  std::sort(bases.begin(), bases.end());
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end())
    throw input_error("Matroid: duplicate basis");
  int r = popcount(bases.front());
  for (mask_t b : bases) {
    if (!mask_in_range(b, n)) throw input_error("Matroid: basis has element outside [n]");
    if (popcount(b) != r) throw input_error("Matroid: bases are not equicardinal");
  }
  if (!check_exchange(n, bases))
    throw input_error("Matroid: basis family fails the exchange axiom");
  n_ = n;
  r_ = r;
  bases_ = std::move(bases);
}

Matroid Matroid::trusted(int n, int r, std::vector<mask_t> sorted_bases) {
  assert(std::is_sorted(sorted_bases.begin(), sorted_bases.end()));
  assert(!sorted_bases.empty());
  Matroid m;
  m.n_ = n;
  m.r_ = r;
  m.bases_ = std::move(sorted_bases);
  return m;
}

bool Matroid::is_basis(mask_t b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

Matroid dual(const Matroid& m) {
  mask_t full = full_mask(m.n());
  std::vector<mask_t> co;
  co.reserve(m.bases().size());
  for (mask_t b : m.bases()) co.push_back(full & ~b);
  std::sort(co.begin(), co.end());
  return Matroid::trusted(m.n(), m.n() - m.rank(), std::move(co));
}

std::vector<mask_t> nonbases(const Matroid& m) {
  std::vector<mask_t> out;
  if (m.rank() == 0) return out;  // the empty set is the unique 0-subset
  mask_t s = first_subset(m.rank());
  if (!mask_in_range(s, m.n())) return out;
  do {
    if (!m.is_basis(s)) out.push_back(s);
  } while (next_subset(s, m.n()));
  return out;
}

Matroid apply_permutation(const Matroid& m, const Perm& p) {
  if (static_cast<int>(p.size()) != m.n() || !is_permutation(p))
    throw input_error("apply_permutation: p is not a permutation of [n]");
  std::vector<mask_t> bs;
  bs.reserve(m.bases().size());
  for (mask_t b : m.bases()) bs.push_back(apply_perm_mask(b, p));
  std::sort(bs.begin(), bs.end());
  return Matroid::trusted(m.n(), m.rank(), std::move(bs));
}

Matroid uniform_matroid(int n, int r) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n)
    throw input_error("uniform_matroid: need 0 <= r <= n <= " + std::to_string(kMaxGroundSet));
  std::vector<mask_t> bs;
  mask_t s = first_subset(r);
  if (r == 0) return Matroid::trusted(n, 0, {0});
  do {
    bs.push_back(s);
  } while (next_subset(s, n));
  return Matroid::trusted(n, r, std::move(bs));
}

namespace {

// Exact canonicalisation by branch-and-bound over all relabellings.
//
// A relabelling phi assigns original elements to new labels 1..n level by
// level.  Its characteristic vector lists, over all r-subsets S of new
// labels in increasing mask order, whether phi(S) is a basis.  Because the
// subsets whose maximum new label is m form a contiguous block (and those
// blocks appear in level order), the vector's prefix is decided as soon as
// labels 1..m have preimages.  We search for the lexicographically greatest
// vector; that is equivalent to the relabelling whose sorted basis list is
// lexicographically least.  Ties at every level are automorphisms, which
// orbit-stabilizer turns into labelled-orbit sizes.
struct CanonSearch {
  int n, r;
  std::array<bool, 1u << kCanonicalMaxN> basis_tab{};
  std::vector<std::vector<mask_t>> block;  // block[m]: new-label masks, max element m
  std::vector<std::size_t> offset;         // block m starts at offset[m] in the vector
  std::size_t total = 0;

  std::vector<std::uint8_t> best, cur;
  std::vector<int> chosen;  // chosen[l-1] = original element with new label l
  std::uint64_t ties = 0;

  explicit CanonSearch(const Matroid& M) : n(M.n()), r(M.rank()) {
    for (mask_t b : M.bases()) basis_tab[b] = true;
    block.resize(n + 1);
    offset.resize(n + 2, 0);
    if (r == 0) {
      // only the empty subset; nothing depends on the labelling
      total = 1;
    } else {
      for (int m = 1; m <= n; ++m) {
        if (m >= r) {
          mask_t top = element_bit(m);
          if (r == 1) {
            block[m].push_back(top);
          } else {
            mask_t s = first_subset(r - 1);
            do {
              block[m].push_back(s | top);
            } while (next_subset(s, m - 1));
          }
        }
        offset[m + 1] = offset[m] + block[m].size();
      }
      total = offset[n + 1];
    }
    best.assign(total, 0);
    cur.assign(total, 0);
    chosen.assign(n, 0);
    if (r == 0) {
      best[0] = 1;
      cur[0] = 1;
    }
  }

  void seed_identity(const Matroid& M) {
    // start from the identity labelling so `best` is always attainable
    std::size_t i = 0;
    for (int m = 1; m <= n; ++m)
      for (mask_t s : block[m]) best[i++] = basis_tab[s] ? 1 : 0;
  }

  void run() {
    if (r == 0) {
      // every labelling ties
      std::uint64_t f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      ties = f;
      return;
    }
    mask_t used = 0;
    dfs(1, used);
  }

  void dfs(int level, mask_t used) {
    if (level > n) {
      ++ties;
      return;
    }
    std::size_t off = offset[level];
    const auto& blk = block[level];
    for (int o = 1; o <= n; ++o) {
      if (mask_has(used, o)) continue;
      chosen[level - 1] = o;
      // fill this level's block and compare against best
      int cmp = 0;  // -1 worse, 0 tie, +1 strictly better somewhere
      for (std::size_t t = 0; t < blk.size(); ++t) {
        mask_t nm = blk[t];
        mask_t om = 0;
        while (nm) {
          int b = std::countr_zero(nm);
          om |= element_bit(chosen[b]);
          nm &= nm - 1;
        }
        std::uint8_t bit = basis_tab[om] ? 1 : 0;
        cur[off + t] = bit;
        if (cmp == 0 && bit != best[off + t]) cmp = bit > best[off + t] ? 1 : -1;
      }
      if (cmp < 0) continue;
      if (cmp > 0) {
        // new leader: adopt the prefix, clear everything deeper, restart ties
        std::copy(cur.begin() + off, cur.begin() + off + blk.size(), best.begin() + off);
        std::fill(best.begin() + off + blk.size(), best.end(), 0);
        ties = 0;
      }
      dfs(level + 1, used | element_bit(o));
    }
  }
};

CanonSearch canonical_search(const Matroid& m) {
  if (m.n() > kCanonicalMaxN)
    throw input_error("canonical_key: n > " + std::to_string(kCanonicalMaxN) +
                      " (exact canonicalisation cap)");
  CanonSearch s(m);
  s.seed_identity(m);
  s.run();
  return s;
}

}  // namespace

CanonicalKey canonical_key(const Matroid& m) {
  CanonSearch s = canonical_search(m);
  std::string bytes;
  bytes.reserve(2 + s.total);
  bytes.push_back(static_cast<char>(m.n()));
  bytes.push_back(static_cast<char>(m.rank()));
  for (std::uint8_t b : s.best) bytes.push_back(b ? '1' : '0');
  return CanonicalKey{std::move(bytes)};
}

Matroid canonical_form(const Matroid& m) {
  CanonSearch s = canonical_search(m);
  std::vector<mask_t> bs;
  if (m.rank() == 0) return Matroid::trusted(m.n(), 0, {0});
  std::size_t i = 0;
  for (int lv = 1; lv <= m.n(); ++lv)
    for (mask_t sm : s.block[lv]) {
      if (s.best[i]) bs.push_back(sm);
      ++i;
    }
  std::sort(bs.begin(), bs.end());
  return Matroid::trusted(m.n(), m.rank(), std::move(bs));
}

std::uint64_t automorphism_count(const Matroid& m) {
  CanonSearch s = canonical_search(m);
  return s.ties;
}

}  // namespace mtk
