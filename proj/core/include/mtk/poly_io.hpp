#pragma once

// Text format for polynomial systems:
//
//   # comment lines and blank lines are skipped
//   vars 4
//   x1*x4 - x2*x3
//   3*x1^2*x2 - 5
//
// The header fixes the variable count; every following non-comment line is
// one polynomial: terms joined by + or -, each term an optional integer
// coefficient and '*'-joined powers x<i>[^<e>].  Exponents fit in [0,255];
// variable indices must lie in [1, vars].  Errors carry byte offsets.

#include <string>

#include "mtk/poly.hpp"

namespace mtk {

PolySystem parse_poly_system(const std::string& text);
std::string serialize_poly_system(const PolySystem& sys);

}  // namespace mtk
