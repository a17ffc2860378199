#include <benchmark/benchmark.h>

#include "ramsey/cosets.hpp"
#include "ramsey/faces.hpp"
#include "ramsey/function_monoids.hpp"
#include "ramsey/poset_enum.hpp"

using namespace ramsey;

static void BM_CatalanClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan_monoid(n).size());
}
BENCHMARK(BM_CatalanClosure)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_CosetPoset(benchmark::State& state) {
  const auto m = catalan_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_xm_linear(m).linear);
}
BENCHMARK(BM_CosetPoset)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_PosetEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n).size());
}
BENCHMARK(BM_PosetEnumeration)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_FaceEnumeration(benchmark::State& state) {
  // k lines through the origin in the plane with distinct slopes
  std::vector<RationalVec> normals;
  for (int i = 0; i < state.range(0); ++i) normals.push_back({1, Rational(i)});
  const auto a = arrangement_from_normals(2, normals);
  for (auto _ : state) benchmark::DoNotOptimize(realizable_sign_vectors(a).size());
}
BENCHMARK(BM_FaceEnumeration)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
