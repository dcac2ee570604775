#pragma once

// Shared plumbing: bitmask subsets of a ground set [n] = {1,...,n},
// exact small binomials, colex ranking, error types, and a tiny
// deterministic parallel-for.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtk {

// Element i of the ground set lives at bit i-1.  Ground sets stay small
// (enumeration and canonicalisation have their own caps well below 32).
using mask_t = std::uint32_t;

inline constexpr int kMaxGroundSet = 25;

// Invalid argument / precondition violation on a public entry point.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A call was refused (or aborted) because it would exceed its work budget.
// `required` reports the budget the call would have needed, when that is
// representable; otherwise it carries a lower bound and the message says so.
struct budget_error : std::runtime_error {
  std::uint64_t required;
  budget_error(const std::string& msg, std::uint64_t required_work)
      : std::runtime_error(msg), required(required_work) {}
};

// Malformed serialized input; `byte_offset` points at the offending byte.
struct parse_error : std::runtime_error {
  std::size_t byte_offset;
  parse_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
};

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t full_mask(int n) {
  return n <= 0 ? mask_t{0} : (mask_t{0xffffffffu} >> (32 - n));
}

inline bool mask_in_range(mask_t m, int n) { return (m & ~full_mask(n)) == 0; }

// 1-based element <-> bit.
inline mask_t element_bit(int e) { return mask_t{1} << (e - 1); }
inline bool mask_has(mask_t m, int e) { return (m >> (e - 1)) & 1u; }

std::vector<int> mask_elements(mask_t m);   // ascending, 1-based
std::string mask_to_string(mask_t m);       // "1,2,4"; "" for the empty set

// r-subsets in increasing mask order (= colex order on subsets).
inline mask_t first_subset(int r) { return full_mask(r); }
// Gosper's hack; returns false once the last r-subset of [n] was passed in.
bool next_subset(mask_t& m, int n);

// Exact binomial; throws input_error if the value would not fit in 64 bits.
std::uint64_t binom64(int n, int k);

// Rank of an r-subset among all r-subsets in colex order, and its inverse.
std::uint64_t colex_rank(mask_t m);
mask_t colex_unrank(std::uint64_t rank, int r);

// Runs body(0..count-1) on up to `workers` threads.  Callers own all
// output placement (one slot per index), so results never depend on the
// thread count.  workers <= 1 means a plain serial loop.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace mtk
