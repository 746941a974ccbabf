#include <benchmark/benchmark.h>

#include <map>

#include "iris/iris_poly.hpp"
#include "iris/oracles.hpp"
#include "iris/quadrature.hpp"
#include "iris/random.hpp"
#include "iris/theorem2.hpp"

namespace {

iris::ComplexIntMatrix binary(std::size_t n) { return iris::random_matrix(n, iris::EntryKind{}, 1234 + n); }

const iris::AlphaMatrix& row_alpha(std::size_t n) {
  static std::map<std::size_t, iris::AlphaMatrix> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, iris::lemma1_alpha(n, iris::minimal_p(n), std::nullopt)).first;
  return it->second;
}

void BM_Naive(benchmark::State& state) {
  const auto a = binary(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iris::naive_permanent(a));
}
BENCHMARK(BM_Naive)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_Ryser(benchmark::State& state) {
  const auto a = binary(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iris::ryser_permanent(a));
}
BENCHMARK(BM_Ryser)->DenseRange(8, 20, 2)->Unit(benchmark::kMillisecond);

void BM_RyserGaussian(benchmark::State& state) {
  const auto a = iris::random_matrix(state.range(0), iris::parse_entry_kind("gaussian:3"), 5);
  for (auto _ : state) benchmark::DoNotOptimize(iris::ryser_permanent(a));
}
BENCHMARK(BM_RyserGaussian)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Laplace(benchmark::State& state) {
  const auto a = binary(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iris::laplace_permanent(a));
}
BENCHMARK(BM_Laplace)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_Grid(benchmark::State& state) {
  const auto a = binary(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iris::grid_permanent(a));
}
BENCHMARK(BM_Grid)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

// All-ones input: no row vanishes and the term count is the largest possible.
void BM_TheoremTwoSparse(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto a = iris::ComplexIntMatrix::ones(n);
  const auto& alpha = row_alpha(n);
  std::size_t terms = 0;
  for (auto _ : state) {
    const auto poly = iris::iris_poly(a, alpha);
    terms = poly.size();
    benchmark::DoNotOptimize(poly.coefficient(alpha.totals()[0]));
  }
  state.counters["terms"] = static_cast<double>(terms);
  state.counters["term_bound"] = static_cast<double>(iris::composition_count(n));
}
BENCHMARK(BM_TheoremTwoSparse)->DenseRange(3, 12)->Unit(benchmark::kMillisecond);

void BM_TheoremTwoBigint(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto a = iris::ComplexIntMatrix::ones(n);
  const auto& alpha = row_alpha(n);
  const auto k = iris::auto_k(a.bound(), n);
  iris::BitCount bits = 0;
  for (auto _ : state) {
    const auto r = iris::per_m_bigint(a, alpha, k, iris::AlphaCertification::skipped);
    bits = r.trace.iris_bits;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_TheoremTwoBigint)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto a = binary(n);
  const auto alpha = iris::theorem1_alpha(n, iris::minimal_p(n));
  for (auto _ : state) benchmark::DoNotOptimize(iris::quadrature_permanent(a, alpha));
  state.counters["points"] = static_cast<double>(iris::quadrature_grid(alpha).points());
}
BENCHMARK(BM_Quadrature)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ValidateAlpha(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto alpha = iris::theorem1_alpha(n, iris::minimal_p(n));
  for (auto _ : state) benchmark::DoNotOptimize(iris::validate_alpha(alpha).valid);
  state.counters["compositions"] = static_cast<double>(iris::composition_count(n));
}
BENCHMARK(BM_ValidateAlpha)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
