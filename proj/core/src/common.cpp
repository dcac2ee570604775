#include "mtk/common.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace mtk {

std::vector<int> mask_elements(mask_t m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::string mask_to_string(mask_t m) {
  std::string s;
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s;
}

bool next_subset(mask_t& m, int n) {
  if (m == 0) return false;  // the empty set is its size class's only member
  mask_t c = m & -m;
  mask_t r = m + c;
  m = (((r ^ m) >> 2) / c) | r;
  return mask_in_range(m, n);
}

std::uint64_t binom64(int n, int k) {
  if (n < 0 || k < 0) throw input_error("binom64: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: acc == C(n-k+i, i) after the division
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw input_error("binom64: C(" + std::to_string(n) + "," +
                        std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(mask_t m) {
  std::uint64_t rank = 0;
  int i = 0;
  while (m) {
    int b = std::countr_zero(m);
    ++i;
    rank += binom64(b, i);
    m &= m - 1;
  }
  return rank;
}

mask_t colex_unrank(std::uint64_t rank, int r) {
  mask_t m = 0;
  for (int i = r; i >= 1; --i) {
    // largest e with C(e, i) <= rank
    int e = i - 1;
    while (binom64(e + 1, i) <= rank) ++e;
    rank -= binom64(e, i);
    m |= mask_t{1} << e;
  }
  return m;
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(workers, count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::scoped_lock lock(err_mutex);
          if (!failed.exchange(true)) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace mtk
