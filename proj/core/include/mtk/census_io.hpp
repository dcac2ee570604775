#pragma once

// Census file format (ASCII, LF line endings, trailing newline required):
//
//   MCENSUS 1 n=<n> r=<r> mode=<unlabeled|labeled>
//   1,2;1,3;2,3
//   ...
//
// One matroid per body line: its bases as comma-joined ascending element
// lists, joined by ';' in lexicographic order of those element sequences
// (so U_{2,4} is "1,2;1,3;1,4;2,3;2,4;3,4").  A rank-0 matroid is the
// empty line (its single basis is the empty set).  In unlabeled mode each
// line is a canonical form and lines ascend strictly by canonical key; in
// labeled mode every relabelling appears, grouped by canonical key and
// ascending lexicographically within a group.  The parser re-derives
// keys and multiplicities and rejects any deviation with a parse_error
// naming the byte offset.

#include <string>

#include "mtk/enumerate.hpp"

namespace mtk {

enum class CensusMode { Unlabeled, Labeled };

struct ParsedCensus {
  Census census;
  CensusMode mode = CensusMode::Unlabeled;
};

// Labeled serialization is capped (budget_error) when the expanded line
// count would exceed ~10^6; unlabeled has no extra cap beyond the census.
std::string serialize_census(const Census& census, CensusMode mode);

ParsedCensus parse_census(const std::string& bytes);

}  // namespace mtk
