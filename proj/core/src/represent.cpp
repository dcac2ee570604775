#include "mtk/represent.hpp"

#include <algorithm>

namespace mtk {

std::string rep_status_str(RepStatus s) {
  switch (s) {
    case RepStatus::Found: return "found";
    case RepStatus::NotRepresentable: return "not-representable-over-this-field";
    default: return "budget-exceeded";
  }
}

std::string rep_verdict_str(RepVerdict v) {
  switch (v) {
    case RepVerdict::Representable: return "representable";
    case RepVerdict::NotOverTestedFields: return "not-over-tested-fields";
    case RepVerdict::Inconclusive: return "inconclusive";
    default: return "vacuous";
  }
}

std::pair<Matroid, Perm> normalize_to_last_basis(const Matroid& m) {
  int n = m.n(), r = m.rank();
  mask_t b = m.bases().front();  // least basis
  Perm p(n);
  int next_low = 1, next_high = n - r + 1;
  for (int e = 1; e <= n; ++e)
    p[e - 1] = mask_has(b, e) ? next_high++ : next_low++;
  return {apply_permutation(m, p), p};
}

std::vector<std::vector<bool>> fundamental_pattern(const Matroid& m) {
  int n = m.n(), r = m.rank();
  mask_t ident = full_mask(n) & ~full_mask(n - r);
  if (!m.is_basis(ident))
    throw input_error("fundamental_pattern: last r elements are not a basis "
                      "(run normalize_to_last_basis first)");
  std::vector<std::vector<bool>> pat(r, std::vector<bool>(n - r, false));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n - r; ++j) {
      mask_t b = (ident & ~element_bit(n - r + i + 1)) | element_bit(j + 1);
      pat[i][j] = m.is_basis(b);
    }
  return pat;
}

namespace {

// One maximal-minor constraint of [u | I_r], reduced to a square block of u:
// the r-subset B meets the identity in some rows; the complementary rows x
// the u-columns of B form the minor that must (not) vanish.
struct MinorCheck {
  std::vector<int> rows;   // 0-based rows of u, ascending
  std::vector<int> ucols;  // 0-based columns of u, ascending
  bool expect_basis;
};

struct Searcher {
  const Matroid& M;
  GFContext::Ops F;
  int n, r, w;  // w = n - r
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<bool>> pat;
  std::vector<gf_t> u;  // row-major r x w
  // checks[j][i]: minors whose u-columns all lie in 1..j+1 with max = j+1
  // and whose deepest row is i; ready right after u[i][j] is set
  std::vector<std::vector<std::vector<MinorCheck>>> checks;

  Searcher(const Matroid& m, const GFContext& f, std::uint64_t b)
      : M(m), F(f.ops()), n(m.n()), r(m.rank()), w(m.n() - m.rank()), budget(b) {
    pat = fundamental_pattern(m);
    u.assign(static_cast<std::size_t>(r) * w, 0);
    checks.assign(w, {});
    for (int j = 0; j < w; ++j) checks[j].assign(r, {});
    mask_t ident = full_mask(n) & ~full_mask(w);
    mask_t s = first_subset(r);
    if (r == 0) return;
    do {
      mask_t ucols_mask = s & full_mask(w);
      if (ucols_mask == 0) continue;  // B == identity: no constraint on u
      int maxcol = 0;
      for (int c : mask_elements(ucols_mask)) maxcol = c;
      MinorCheck mc;
      for (int c : mask_elements(ucols_mask)) mc.ucols.push_back(c - 1);
      mask_t ident_part = s & ident;
      for (int i = 0; i < r; ++i)
        if (!mask_has(ident_part, w + i + 1)) mc.rows.push_back(i);
      mc.expect_basis = M.is_basis(s);
      int maxrow = mc.rows.back();
      checks[maxcol - 1][maxrow].push_back(std::move(mc));
    } while (next_subset(s, n));
    // cheap minors first, so contradictions surface before big eliminations
    for (int j = 0; j < w; ++j)
      for (int i = 0; i < r; ++i)
        std::stable_sort(checks[j][i].begin(), checks[j][i].end(),
                         [](const MinorCheck& a, const MinorCheck& b) {
                           return a.rows.size() < b.rows.size();
                         });
  }

  gf_t minor_det(const MinorCheck& mc) const {
    int k = static_cast<int>(mc.rows.size());
    if (k == 1) return u[static_cast<std::size_t>(mc.rows[0]) * w + mc.ucols[0]];
    gf_t m2[kMaxGroundSet][kMaxGroundSet];
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        m2[a][b] = u[static_cast<std::size_t>(mc.rows[a]) * w + mc.ucols[b]];
    if (k == 2)
      return F.sub(F.mul(m2[0][0], m2[1][1]), F.mul(m2[0][1], m2[1][0]));
    // in-place elimination
    gf_t d = 1;
    for (int c = 0; c < k; ++c) {
      int piv = -1;
      for (int a = c; a < k; ++a)
        if (m2[a][c] != 0) { piv = a; break; }
      if (piv < 0) return 0;
      if (piv != c) {
        for (int b = c; b < k; ++b) std::swap(m2[piv][b], m2[c][b]);
        d = F.neg(d);
      }
      d = F.mul(d, m2[c][c]);
      gf_t inv = F.inv_unchecked(m2[c][c]);
      for (int a = c + 1; a < k; ++a) {
        gf_t f = F.mul(m2[a][c], inv);
        if (f == 0) continue;
        for (int b = c; b < k; ++b) m2[a][b] = F.sub(m2[a][b], F.mul(f, m2[c][b]));
      }
    }
    return d;
  }

  bool checks_pass(int j, int i) const {
    for (const MinorCheck& mc : checks[j][i])
      if ((minor_det(mc) != 0) != mc.expect_basis) return false;
    return true;
  }

  // returns: 0 found, 1 exhausted, 2 budget
  int column(int j) {
    if (j == w) return 0;
    // first forced-nonzero row of this column is pinned to 1 (column scaling)
    int pivot_row = -1;
    for (int i = 0; i < r; ++i)
      if (pat[i][j]) { pivot_row = i; break; }
    return entry(j, 0, pivot_row);
  }

  int entry(int j, int i, int pivot_row) {
    if (i == r) return column(j + 1);
    gf_t lo, hi;
    if (!pat[i][j]) {
      lo = 0; hi = 0;
    } else if (i == pivot_row) {
      lo = 1; hi = 1;
    } else {
      lo = 1; hi = static_cast<gf_t>(F.q - 1);
    }
    for (int v = lo; v <= hi; ++v) {
      if (++nodes > budget) return 2;
      u[static_cast<std::size_t>(i) * w + j] = static_cast<gf_t>(v);
      if (!checks_pass(j, i)) continue;
      int res = entry(j, i + 1, pivot_row);
      if (res != 1) return res;
    }
    u[static_cast<std::size_t>(i) * w + j] = 0;
    return 1;
  }
};

}  // namespace

RepResult find_representation(const Matroid& m, const GFContext& F,
                              std::uint64_t budget) {
  int n = m.n(), r = m.rank(), w = n - r;
  mask_t ident = full_mask(n) & ~full_mask(w);
  if (!m.is_basis(ident))
    throw input_error("find_representation: last r elements are not a basis "
                      "(run normalize_to_last_basis first)");
  // every r-subset is one minor constraint; refuse sizes that would swamp
  // memory before the node budget can bite
  std::uint64_t nsub = binom64(n, r);
  if (nsub > 1'000'000)
    throw budget_error("find_representation: C(" + std::to_string(n) + "," +
                           std::to_string(r) + ") = " + std::to_string(nsub) +
                           " minor constraints exceed the 10^6 structural cap",
                       nsub);
  RepResult out;
  if (r == 0 || w == 0) {
    out.status = RepStatus::Found;
    out.witness = GFMatrix(F, r, w);
    out.nodes = 0;
    if (!verify_representation(m, *out.witness))
      throw std::logic_error("find_representation: trivial witness failed verification");
    return out;
  }

  Searcher s(m, F, budget);
  int res = s.column(0);
  out.nodes = s.nodes;
  if (res == 2) {
    out.status = RepStatus::BudgetExceeded;
    return out;
  }
  if (res == 1) {
    out.status = RepStatus::NotRepresentable;
    return out;
  }
  out.status = RepStatus::Found;
  std::vector<gf_t> entries(s.u.begin(), s.u.end());
  out.witness = GFMatrix(F, r, w, std::move(entries));
  if (!verify_representation(m, *out.witness))
    throw std::logic_error("find_representation: witness failed re-verification");
  return out;
}

bool verify_representation(const Matroid& m, const GFMatrix& u) {
  int n = m.n(), r = m.rank();
  if (u.rows() != r || u.cols() != n - r)
    throw input_error("verify_representation: u must be rank x (n - rank)");
  GFMatrix a = hstack_identity(u);
  if (r == 0) return m.bases() == std::vector<mask_t>{0};
  mask_t s = first_subset(r);
  do {
    if (is_nonsingular_cols(a, s) != m.is_basis(s)) return false;
  } while (next_subset(s, n));
  return true;
}

RepSummary representable_over_any(const Matroid& m,
                                  const std::vector<GFContext>& fields,
                                  std::uint64_t budget) {
  auto [norm, perm] = normalize_to_last_basis(m);
  RepSummary out{RepVerdict::Vacuous, std::move(perm), std::move(norm), {}};
  bool any_budget = false;
  for (const GFContext& F : fields) {
    RepResult r = find_representation(out.normalized, F, budget);
    RepStatus st = r.status;
    out.per_field.emplace_back(F.q(), std::move(r));
    if (st == RepStatus::Found) {
      out.verdict = RepVerdict::Representable;
      return out;
    }
    if (st == RepStatus::BudgetExceeded) any_budget = true;
  }
  if (!fields.empty())
    out.verdict = any_budget ? RepVerdict::Inconclusive : RepVerdict::NotOverTestedFields;
  return out;
}

}  // namespace mtk
