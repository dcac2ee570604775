#include "mtk/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mtk/bounds.hpp"  // d_of_n

namespace mtk {

Big Census::labeled_count() const {
  Big total = 0;
  for (const CensusItem& it : items) total += it.labeled_multiplicity;
  return total;
}

namespace {

// One exchange obligation: if slots a and b are both bases, at least one
// witness slot must also be a basis.  Constraints are bucketed by the last
// slot (in colex order) they mention, so each is checked exactly once per
// decision that completes it.
struct Constraint {
  std::uint32_t a, b;
  std::vector<std::uint32_t> witnesses;
};

struct EnumSearch {
  int n, r;
  std::vector<mask_t> subs;        // colex order
  std::vector<std::uint32_t> pos;  // mask -> slot
  // completed_at[t]: constraints whose last-mentioned slot is t; each is
  // checked exactly once per decision of t (either branch can complete it)
  std::vector<std::vector<Constraint>> completed_at;
  std::vector<std::int8_t> assign;  // -1 undecided, 0 nonbasis, 1 basis

  std::map<CanonicalKey, std::pair<Matroid, std::uint64_t>> classes;

  EnumSearch(int n_, int r_) : n(n_), r(r_) {
    subs = all_r_subsets(n, r);
    pos.assign(std::size_t{1} << n, 0);
    for (std::uint32_t i = 0; i < subs.size(); ++i) pos[subs[i]] = i;
    assign.assign(subs.size(), -1);
    build_constraints();
  }

  void build_constraints() {
    std::uint32_t K = static_cast<std::uint32_t>(subs.size());
    completed_at.assign(K, {});
    for (std::uint32_t ia = 0; ia < K; ++ia) {
      mask_t B1 = subs[ia];
      for (std::uint32_t ib = 0; ib < K; ++ib) {
        if (ia == ib) continue;
        mask_t B2 = subs[ib];
        mask_t in2not1 = B2 & ~B1;
        mask_t in1not2 = B1 & ~B2;
        for (mask_t em = in2not1; em;) {
          mask_t e = em & -em;
          em &= em - 1;
          Constraint c;
          c.a = ia;
          c.b = ib;
          bool trivial = false;
          std::uint32_t last = std::max(ia, ib);
          for (mask_t fm = in1not2; fm;) {
            mask_t f = fm & -fm;
            fm &= fm - 1;
            std::uint32_t wslot = pos[(B1 & ~f) | e];
            if (wslot == ib) { trivial = true; break; }  // witness == B2: can never fire
            c.witnesses.push_back(wslot);
            last = std::max(last, wslot);
          }
          if (trivial) continue;
          completed_at[last].push_back(std::move(c));
        }
      }
    }
  }

  // all slots the constraint mentions are decided once `last` is decided
  bool violated(const Constraint& c) const {
    if (assign[c.a] != 1 || assign[c.b] != 1) return false;
    for (std::uint32_t w : c.witnesses)
      if (assign[w] == 1) return false;
    return true;
  }

  void record_leaf() {
    std::vector<mask_t> bases;
    for (std::uint32_t i = 0; i < subs.size(); ++i)
      if (assign[i] == 1) bases.push_back(subs[i]);
    if (bases.empty()) return;
    Matroid m = Matroid::trusted(n, r, std::move(bases));
    CanonicalKey key = canonical_key(m);
    auto it = classes.find(key);
    if (it != classes.end()) {
      ++it->second.second;
      return;
    }
    // the key's tail is the characteristic vector of the canonical form
    // over the same colex slots, so the form decodes straight from it
    std::vector<mask_t> cb;
    for (std::uint32_t i = 0; i < subs.size(); ++i)
      if (key.bytes[2 + i] == '1') cb.push_back(subs[i]);
    classes.emplace(std::move(key),
                    std::make_pair(Matroid::trusted(n, r, std::move(cb)), std::uint64_t{1}));
  }

  void dfs(std::uint32_t slot) {
    if (slot == subs.size()) {
      record_leaf();
      return;
    }
    for (std::int8_t val : {std::int8_t{1}, std::int8_t{0}}) {
      assign[slot] = val;
      bool ok = true;
      for (const Constraint& c : completed_at[slot])
        if (violated(c)) { ok = false; break; }
      if (ok) dfs(slot + 1);
    }
    assign[slot] = -1;
  }
};

}  // namespace

Census enumerate_matroids(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw input_error("enumerate_matroids: need 0 <= r <= n");
  if (n > kEnumMaxN) {
    std::uint64_t slots = ~std::uint64_t{0};
    try {
      slots = binom64(n, r);
    } catch (const input_error&) {
      // C(n,r) itself over 64 bits: report the saturated value
    }
    throw budget_error("enumerate_matroids: n = " + std::to_string(n) +
                           " exceeds the cap " + std::to_string(kEnumMaxN) +
                           " (assignment space 2^" + std::to_string(slots) + ")",
                       slots);
  }

  Census out;
  out.n = n;
  out.r = r;
  if (r == 0 || r == n) {
    // a single family: {empty set} or {[n]}
    Matroid m = (r == 0) ? Matroid::trusted(n, 0, {0})
                         : Matroid::trusted(n, n, {full_mask(n)});
    out.items.push_back(CensusItem{m, canonical_key(m), 1});
    return out;
  }

  EnumSearch search(n, r);
  search.dfs(0);
  out.items.reserve(search.classes.size());
  for (auto& [key, val] : search.classes)
    out.items.push_back(CensusItem{std::move(val.first), key, val.second});
  return out;
}

RepCensusReport census_representability(const Census& census,
                                        const std::vector<GFContext>& fields,
                                        std::uint64_t budget, int workers) {
  RepCensusReport rep;
  rep.n = census.n;
  rep.r = census.r;
  for (const GFContext& f : fields) rep.fields.push_back(f.q());
  rep.verdicts.assign(census.items.size(), RepVerdict::Vacuous);
  rep.summaries.resize(census.items.size());

  parallel_for(census.items.size(), workers, [&](std::size_t i) {
    rep.summaries[i] = representable_over_any(census.items[i].matroid, fields, budget);
    rep.verdicts[i] = rep.summaries[i].verdict;
  });

  std::uint64_t slots = binom64(census.n, census.r);
  for (std::size_t i = 0; i < census.items.size(); ++i) {
    const CensusItem& it = census.items[i];
    int nb = static_cast<int>(slots - it.matroid.bases().size());
    auto& h = rep.nonbasis_histogram[nb];
    ++h.first;
    ++rep.unlabeled_total;
    rep.labeled_total += it.labeled_multiplicity;
    switch (rep.verdicts[i]) {
      case RepVerdict::Representable:
        ++rep.unlabeled_representable;
        rep.labeled_representable += it.labeled_multiplicity;
        ++h.second;
        break;
      case RepVerdict::Inconclusive:
        ++rep.unlabeled_inconclusive;
        rep.labeled_inconclusive += it.labeled_multiplicity;
        break;
      default:
        ++rep.unlabeled_not;
        rep.labeled_not += it.labeled_multiplicity;
        break;
    }
  }
  return rep;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
  // unbiased rejection sampling from the top of the 64-bit range
  std::uint64_t lim = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = g();
    if (x >= lim) return x % bound;
  }
}

}  // namespace

SampleReport sample_nonbasis_candidates(int n, int r, std::uint64_t trials,
                                        std::uint64_t seed,
                                        const std::vector<GFContext>& fields,
                                        std::uint64_t budget) {
  if (n < 4 || n > kMaxGroundSet)
    throw input_error("sample_nonbasis_candidates: need 4 <= n <= " +
                      std::to_string(kMaxGroundSet) + " (d(n) >= 1)");
  if (r != n / 2 && r != (n + 1) / 2)
    throw input_error("sample_nonbasis_candidates: r must be floor(n/2) or ceil(n/2)");
  std::int64_t s = d_of_n(n) - 1;
  std::uint64_t slots = binom64(n, r);
  if (static_cast<std::uint64_t>(s) > slots)
    throw input_error("sample_nonbasis_candidates: d(n)-1 exceeds C(n,r)");

  SampleReport rep;
  rep.n = n;
  rep.r = r;
  rep.trials = trials;
  rep.seed = seed;
  for (const GFContext& f : fields) rep.fields.push_back(f.q());
  rep.removed = s;
  rep.generator = "mt19937_64/floyd";

  std::mt19937_64 rng(seed);
  std::vector<mask_t> all = all_r_subsets(n, r);

  for (std::uint64_t t = 0; t < trials; ++t) {
    // Floyd's algorithm: uniform s-subset of [0, slots)
    std::set<std::uint64_t> drop;
    for (std::uint64_t j = slots - static_cast<std::uint64_t>(s); j < slots; ++j) {
      std::uint64_t x = uniform_below(rng, j + 1);
      if (!drop.insert(x).second) drop.insert(j);
    }
    std::vector<mask_t> family;
    family.reserve(all.size() - drop.size());
    for (std::uint64_t i = 0; i < all.size(); ++i)
      if (!drop.count(i)) family.push_back(all[i]);

    if (!check_exchange(n, family)) continue;
    ++rep.exchange_closed;
    Matroid m = Matroid::trusted(n, r, std::move(family));
    RepSummary rs = representable_over_any(m, fields, budget);
    switch (rs.verdict) {
      case RepVerdict::Representable: ++rep.representable; break;
      case RepVerdict::Inconclusive: ++rep.inconclusive; break;
      default: ++rep.not_representable; break;
    }
  }
  return rep;
}

}  // namespace mtk
