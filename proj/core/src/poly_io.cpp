#include "mtk/poly_io.hpp"

namespace mtk {

namespace {

struct Scan {
  const std::string& s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

  void skip_space() {
    while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool at_line_end() const { return eof() || s[pos] == '\n'; }

  Big unsigned_integer() {
    if (eof() || s[pos] < '0' || s[pos] > '9') fail("expected an integer");
    Big v = 0;
    while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  int small_integer(int lo, int hi, const char* what) {
    std::size_t at = pos;
    Big v = unsigned_integer();
    if (v < lo || v > hi)
      throw parse_error(std::string(what) + " outside [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]",
                        at);
    return static_cast<int>(v);
  }
};

// term := [integer] ( '*'? power )*   |   power ( '*' power )*
// power := 'x' index [ '^' exponent ]
IntPoly parse_term(Scan& sc, int nvars, bool negative) {
  Big coeff = 1;
  ExpVec e(nvars, 0);
  bool saw_anything = false;

  sc.skip_space();
  if (!sc.eof() && sc.peek() >= '0' && sc.peek() <= '9') {
    coeff = sc.unsigned_integer();
    saw_anything = true;
    sc.skip_space();
    if (sc.peek() == '*') {
      ++sc.pos;
      sc.skip_space();
      if (sc.peek() != 'x') sc.fail("expected a variable after '*'");
    }
  }
  while (sc.peek() == 'x') {
    ++sc.pos;
    int idx = sc.small_integer(1, nvars, "variable index");
    int exp = 1;
    if (sc.peek() == '^') {
      ++sc.pos;
      exp = sc.small_integer(0, 255, "exponent");
    }
    int total = e[idx - 1] + exp;
    if (total > 255) sc.fail("exponent exceeds 255");
    e[idx - 1] = static_cast<std::uint8_t>(total);
    saw_anything = true;
    sc.skip_space();
    if (sc.peek() == '*') {
      ++sc.pos;
      sc.skip_space();
      if (sc.peek() != 'x') sc.fail("expected a variable after '*'");
    }
  }
  if (!saw_anything) sc.fail("expected a term");
  IntPoly p(nvars);
  p.add_term(e, negative ? Big(-coeff) : coeff);
  return p;
}

IntPoly parse_polynomial(Scan& sc, int nvars) {
  IntPoly p(nvars);
  sc.skip_space();
  bool neg = false;
  if (sc.peek() == '-') {
    neg = true;
    ++sc.pos;
  } else if (sc.peek() == '+') {
    ++sc.pos;
  }
  p = p + parse_term(sc, nvars, neg);
  for (;;) {
    sc.skip_space();
    if (sc.at_line_end()) break;
    char op = sc.peek();
    if (op != '+' && op != '-') sc.fail("expected '+', '-' or end of line");
    ++sc.pos;
    p = p + parse_term(sc, nvars, op == '-');
  }
  return p;
}

}  // namespace

PolySystem parse_poly_system(const std::string& text) {
  Scan sc{text};
  int nvars = -1;
  std::vector<IntPoly> polys;
  while (!sc.eof()) {
    sc.skip_space();
    if (sc.at_line_end()) {
      if (!sc.eof()) ++sc.pos;
      continue;
    }
    if (sc.peek() == '#') {
      while (!sc.at_line_end()) ++sc.pos;
      continue;
    }
    if (nvars < 0) {
      sc.skip_space();
      if (text.compare(sc.pos, 4, "vars") != 0)
        sc.fail("expected header 'vars <count>'");
      sc.pos += 4;
      sc.skip_space();
      nvars = sc.small_integer(0, 64, "variable count");
      sc.skip_space();
      if (!sc.at_line_end()) sc.fail("unexpected trailing text after header");
      continue;
    }
    polys.push_back(parse_polynomial(sc, nvars));
  }
  if (nvars < 0) throw parse_error("missing 'vars <count>' header", sc.pos);
  if (polys.empty()) throw parse_error("system has no polynomials", sc.pos);
  return PolySystem(nvars, std::move(polys));
}

std::string serialize_poly_system(const PolySystem& sys) {
  std::string out = "vars " + std::to_string(sys.nvars) + "\n";
  for (const IntPoly& f : sys.polys) {
    out += f.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace mtk
