#pragma once

// Exhaustive census of all rank-r matroids on [n]: a depth-first search over
// characteristic vectors of r-subset families (colex slot order) prunes with
// precomputed exchange-axiom constraints, and exact canonicalisation merges
// labelled solutions into isomorphism classes with their orbit sizes.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtk/matroid.hpp"
#include "mtk/poly.hpp"  // Big
#include "mtk/represent.hpp"

namespace mtk {

struct CensusItem {
  Matroid matroid;  // canonical form
  CanonicalKey key;
  std::uint64_t labeled_multiplicity = 0;  // n! / |Aut|, the orbit size
};

struct Census {
  int n = 0;
  int r = 0;
  std::vector<CensusItem> items;  // ascending by key

  Big labeled_count() const;
  std::size_t unlabeled_count() const { return items.size(); }
};

inline constexpr int kEnumMaxN = 8;

// Full census for one (n, r).  Refuses n > kEnumMaxN with budget_error (the
// assignment space is 2^C(n,r)).
Census enumerate_matroids(int n, int r);

struct RepCensusReport {
  int n = 0, r = 0;
  std::vector<int> fields;                // q values, in the order tested
  std::vector<RepVerdict> verdicts;       // parallel to census items
  std::vector<RepSummary> summaries;      // per-field detail, parallel to items
  std::uint64_t unlabeled_total = 0;
  std::uint64_t unlabeled_representable = 0;
  std::uint64_t unlabeled_not = 0;
  std::uint64_t unlabeled_inconclusive = 0;
  Big labeled_total = 0;
  Big labeled_representable = 0;
  Big labeled_not = 0;
  Big labeled_inconclusive = 0;
  // #nonbases -> (all classes, representable classes)
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> nonbasis_histogram;
};

// Representability verdict for every item; deterministic for any worker
// count (items are processed into per-item slots, then aggregated in order).
RepCensusReport census_representability(const Census& census,
                                        const std::vector<GFContext>& fields,
                                        std::uint64_t budget = kDefaultRepBudget,
                                        int workers = 1);

struct SampleReport {
  int n = 0, r = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<int> fields;
  std::int64_t removed = 0;  // d(n) - 1 subsets dropped per trial
  std::uint64_t exchange_closed = 0;
  std::uint64_t representable = 0;
  std::uint64_t not_representable = 0;
  std::uint64_t inconclusive = 0;
  std::string generator;  // RNG + sampling scheme tag, recorded in reports
};

// Draws `trials` uniform (d(n)-1)-subsets of the r-subsets of [n], removes
// each from the complete family, and reports how many survivors satisfy the
// exchange axiom and how their representability verdicts fall.  Requires
// r in {floor(n/2), ceil(n/2)} and d(n) >= 1 (so n >= 4).
SampleReport sample_nonbasis_candidates(int n, int r, std::uint64_t trials,
                                        std::uint64_t seed,
                                        const std::vector<GFContext>& fields,
                                        std::uint64_t budget = kDefaultRepBudget);

}  // namespace mtk
