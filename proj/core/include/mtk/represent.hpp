#pragma once

// GF(q)-representability of a matroid via the [x | I_r] normal form: after
// relabelling so that {n-r+1,...,n} is a basis, a representation exists iff
// some r x (n-r) matrix u makes every maximal minor of [u | I_r] vanish or
// not exactly as the corresponding r-subset is a nonbasis or basis.  The
// search is a column-by-column backtracking over u with forced zero/nonzero
// entries from the fundamental pattern, first-nonzero-in-column scaled to 1,
// and deterministic ordering (columns left to right, entries top to bottom,
// field elements in table order), so witnesses are reproducible.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mtk/gf.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

// Node budget for one find_representation call; a node is one attempted
// entry assignment in the backtracking tree.
inline constexpr std::uint64_t kDefaultRepBudget = 1'000'000'000;

enum class RepStatus { Found, NotRepresentable, BudgetExceeded };
std::string rep_status_str(RepStatus s);

struct RepResult {
  RepStatus status = RepStatus::BudgetExceeded;
  std::optional<GFMatrix> witness;  // the u block, present iff Found
  std::uint64_t nodes = 0;          // entry assignments attempted
};

// Relabels so the lexicographically least basis becomes {n-r+1,...,n}:
// its elements map to n-r+1..n in ascending order, the rest to 1..n-r in
// ascending order.  Returns the relabelled matroid and the permutation
// applied (rank 0 needs no move and gets the identity).
std::pair<Matroid, Perm> normalize_to_last_basis(const Matroid& m);

// For a matroid with last-r-elements basis: entry (i, j) (0-based) is true
// iff column j+1 of u is forced nonzero in row i+1, i.e. iff swapping
// element n-r+i+1 out of the distinguished basis for element j+1 gives a
// basis.  False entries are forced zero.
std::vector<std::vector<bool>> fundamental_pattern(const Matroid& m);

// Exhaustive backtracking search for a representation over F; requires the
// last r elements to form a basis (run normalize_to_last_basis first).
// Any returned witness has been re-verified against every r-subset.
RepResult find_representation(const Matroid& m, const GFContext& F,
                              std::uint64_t budget = kDefaultRepBudget);

// True iff [u | I_r] represents m: every r-subset of columns is nonsingular
// exactly when it is a basis.  u must be r x (n - r) over any field.
bool verify_representation(const Matroid& m, const GFMatrix& u);

enum class RepVerdict { Representable, NotOverTestedFields, Inconclusive, Vacuous };
std::string rep_verdict_str(RepVerdict v);

struct RepSummary {
  RepVerdict verdict = RepVerdict::Vacuous;
  Perm to_normal;  // permutation that produced `normalized`
  // witnesses refer to this labelling; defaults to the trivial matroid
  Matroid normalized = Matroid::trusted(0, 0, {0});
  // (field order q, outcome) in call order; stops after the first Found
  std::vector<std::pair<int, RepResult>> per_field;
};

// Normalizes once, then tries the fields in order.  Verdicts:
//   Representable        some field found a representation
//   NotOverTestedFields  every field exhausted its search space
//   Inconclusive         no success and at least one search hit its budget
//   Vacuous              the field list was empty
RepSummary representable_over_any(const Matroid& m,
                                  const std::vector<GFContext>& fields,
                                  std::uint64_t budget = kDefaultRepBudget);

}  // namespace mtk
