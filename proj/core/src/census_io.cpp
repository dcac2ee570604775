#include "mtk/census_io.hpp"

#include <algorithm>
#include <set>

namespace mtk {

namespace {

// A line lists bases as ascending element lists, ordered lexicographically
// by element sequence ({1,4} before {2,3}, unlike the internal mask order).
std::vector<std::vector<int>> lex_base_lists(const std::vector<mask_t>& bases) {
  std::vector<std::vector<int>> lists;
  lists.reserve(bases.size());
  for (mask_t b : bases) lists.push_back(mask_elements(b));
  std::sort(lists.begin(), lists.end());
  return lists;
}

std::string family_line(const std::vector<std::vector<int>>& lists) {
  std::string s;
  bool first_b = true;
  for (const auto& list : lists) {
    if (!first_b) s += ';';
    bool first_e = true;
    for (int e : list) {
      if (!first_e) s += ',';
      s += std::to_string(e);
      first_e = false;
    }
    first_b = false;
  }
  return s;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::string serialize_census(const Census& census, CensusMode mode) {
  std::string out = "MCENSUS 1 n=" + std::to_string(census.n) +
                    " r=" + std::to_string(census.r) + " mode=" +
                    (mode == CensusMode::Unlabeled ? "unlabeled" : "labeled") + "\n";
  if (mode == CensusMode::Unlabeled) {
    for (const CensusItem& it : census.items) {
      out += family_line(lex_base_lists(it.matroid.bases()));
      out += '\n';
    }
    return out;
  }

  Big lines = census.labeled_count();
  if (lines > 1'000'000)
    throw budget_error("serialize_census: labeled mode would write " + lines.str() +
                           " lines (cap 10^6)",
                       static_cast<std::uint64_t>(lines));

  for (const CensusItem& it : census.items) {
    // all distinct relabellings, ascending lexicographically as lines
    std::set<std::vector<std::vector<int>>> orbit;
    Perm p = identity_perm(census.n);
    std::sort(p.begin(), p.end());
    do {
      orbit.insert(lex_base_lists(apply_permutation(it.matroid, p).bases()));
    } while (std::next_permutation(p.begin(), p.end()));
    if (orbit.size() != it.labeled_multiplicity)
      throw std::logic_error("serialize_census: orbit size disagrees with multiplicity");
    for (const auto& lists : orbit) {
      out += family_line(lists);
      out += '\n';
    }
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

  void expect(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) fail("expected '" + lit + "'");
    pos += lit.size();
  }

  int integer(int lo, int hi, const char* what) {
    std::size_t start = pos;
    long v = 0;
    while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) fail(std::string(what) + " out of range");
      ++pos;
    }
    if (pos == start) fail(std::string("expected ") + what);
    if (v < lo || v > hi)
      fail(std::string(what) + " " + std::to_string(v) + " outside [" +
           std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }
};

}  // namespace

ParsedCensus parse_census(const std::string& bytes) {
  Cursor c{bytes};
  c.expect("MCENSUS ");
  c.expect("1");
  c.expect(" n=");
  int n = c.integer(0, kCanonicalMaxN, "n");
  c.expect(" r=");
  int r = c.integer(0, n, "r");
  c.expect(" mode=");
  CensusMode mode;
  if (bytes.compare(c.pos, 9, "unlabeled") == 0) {
    mode = CensusMode::Unlabeled;
    c.pos += 9;
  } else if (bytes.compare(c.pos, 7, "labeled") == 0) {
    mode = CensusMode::Labeled;
    c.pos += 7;
  } else {
    c.fail("expected mode=unlabeled or mode=labeled");
  }
  c.expect("\n");

  ParsedCensus out;
  out.census.n = n;
  out.census.r = r;
  out.mode = mode;

  // body: parse each line into a basis family, strictly validated
  struct Row {
    CanonicalKey key;
    Matroid m;
    std::vector<std::vector<int>> lists;  // as written: lex-ascending bases
    std::size_t offset;                   // line start, for diagnostics
  };
  std::vector<Row> rows;
  while (!c.eof()) {
    std::size_t line_start = c.pos;
    std::vector<mask_t> bases;
    std::vector<std::vector<int>> lists;
    if (r == 0) {
      // a rank-0 matroid serializes as the empty line
      if (c.peek() != '\n') c.fail("rank 0 line must be empty");
      bases.push_back(0);
    } else {
      for (;;) {
        mask_t b = 0;
        std::vector<int> list;
        int prev_e = 0;
        for (int t = 0; t < r; ++t) {
          if (t) c.expect(",");
          int e = c.integer(1, n, "element");
          if (e <= prev_e) c.fail("elements must ascend within a basis");
          prev_e = e;
          b |= element_bit(e);
          list.push_back(e);
        }
        if (!lists.empty() && !(lists.back() < list))
          c.fail("bases must ascend lexicographically");
        bases.push_back(b);
        lists.push_back(std::move(list));
        if (c.eof()) c.fail("unterminated line (trailing newline required)");
        if (c.peek() == ';') {
          ++c.pos;
          continue;
        }
        break;
      }
    }
    if (c.eof() || c.peek() != '\n') c.fail("expected end of line");
    ++c.pos;

    Matroid m = [&] {
      try {
        return Matroid(n, bases);
      } catch (const input_error& e) {
        throw parse_error(std::string("invalid matroid: ") + e.what(), line_start);
      }
    }();
    rows.push_back(Row{canonical_key(m), std::move(m), std::move(lists), line_start});
  }

  if (rows.empty()) throw parse_error("census has no body lines", c.pos);

  // ordering discipline and census reconstruction
  if (mode == CensusMode::Unlabeled) {
    const CanonicalKey* prev = nullptr;
    std::uint64_t nfact = factorial(n);
    for (Row& row : rows) {
      if (prev && !(*prev < row.key))
        throw parse_error("unlabeled census lines must ascend strictly by canonical key",
                          row.offset);
      if (!(canonical_form(row.m) == row.m))
        throw parse_error("unlabeled census line is not in canonical form", row.offset);
      std::uint64_t mult = nfact / automorphism_count(row.m);
      out.census.items.push_back(CensusItem{std::move(row.m), row.key, mult});
      prev = &out.census.items.back().key;
    }
  } else {
    // labeled: group by key; lines in a group ascend lexicographically
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Row& row = rows[i];
      if (!out.census.items.empty() && out.census.items.back().key == row.key) {
        if (!(rows[i - 1].lists < row.lists))
          throw parse_error("labeled census lines must ascend within a class", row.offset);
        ++out.census.items.back().labeled_multiplicity;
        continue;
      }
      if (!out.census.items.empty() && row.key < out.census.items.back().key)
        throw parse_error("labeled census classes must ascend by canonical key", row.offset);
      out.census.items.push_back(CensusItem{canonical_form(row.m), row.key, 1});
    }
    // multiplicities must match the orbit sizes
    std::uint64_t nfact = factorial(n);
    for (const CensusItem& it : out.census.items)
      if (it.labeled_multiplicity != nfact / automorphism_count(it.matroid))
        throw parse_error("labeled census class is missing relabellings", bytes.size());
  }
  return out;
}

}  // namespace mtk
