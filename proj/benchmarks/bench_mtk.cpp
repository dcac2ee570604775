// Microbenchmarks for the hot paths: field arithmetic, exchange checking,
// canonicalisation, zero-pattern enumeration, representability search and
// the census enumerator.

#include <benchmark/benchmark.h>

#include <random>

#include "mtk/enumerate.hpp"
#include "mtk/gf.hpp"
#include "mtk/matroid.hpp"
#include "mtk/poly.hpp"
#include "mtk/represent.hpp"

namespace {

using namespace mtk;

GFMatrix random_matrix(const GFContext& F, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GFMatrix a(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = static_cast<gf_t>(rng() % static_cast<std::uint64_t>(F.q()));
  return a;
}

Matroid fano() {
  std::vector<mask_t> fam;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c)
        if ((a ^ b ^ c) != 0)
          fam.push_back(element_bit(a) | element_bit(b) | element_bit(c));
  return Matroid(7, fam);
}

void BM_gf_det(benchmark::State& state) {
  GFContext F = GFContext::from_order(static_cast<int>(state.range(0)));
  GFMatrix a = random_matrix(F, 8, 42);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_gf_det)->Arg(2)->Arg(9);

void BM_check_exchange(benchmark::State& state) {
  std::vector<mask_t> fam = uniform_matroid(7, 3).bases();
  for (auto _ : state) benchmark::DoNotOptimize(check_exchange(7, fam));
}
BENCHMARK(BM_check_exchange);

void BM_canonical_key(benchmark::State& state) {
  Matroid m = fano();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(m));
}
BENCHMARK(BM_canonical_key);

void BM_enumerate_patterns(benchmark::State& state) {
  PolySystem sys = minors_polynomials(5, 2);
  GFContext F = GFContext::from_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(sys, F));
}
BENCHMARK(BM_enumerate_patterns);

void BM_find_representation(benchmark::State& state) {
  Matroid norm = normalize_to_last_basis(fano()).first;
  GFContext F = GFContext::from_order(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_representation(norm, F));
}
BENCHMARK(BM_find_representation)->Arg(2)->Arg(3);

void BM_enumerate_matroids(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_matroids(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_enumerate_matroids)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
