#include <benchmark/benchmark.h>

#include "dihedra/cayley.hpp"
#include "dihedra/char_poly.hpp"
#include "dihedra/classify.hpp"
#include "dihedra/isomorphism.hpp"
#include "dihedra/spectra.hpp"

using namespace dihedra;

namespace {

void BM_CharPoly(benchmark::State& state) {
  const Graph g = build_graph(ConnectionSet::type_ii(state.range(0), 0, 1, 3)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly)->Arg(7)->Arg(13)->Arg(23)->Arg(31);

void BM_NumericSpectrum(benchmark::State& state) {
  const Graph g = build_graph(ConnectionSet::type_ii(state.range(0), 0, 1, 3)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(g));
}
BENCHMARK(BM_NumericSpectrum)->Arg(8)->Arg(16)->Arg(30);

void BM_ClosedForm(benchmark::State& state) {
  const ConnectionSet s = ConnectionSet::type_ii(state.range(0), 0, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(expand(cubic_closed_form(s)));
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(16)->Arg(30);

void BM_BruteForceIsomorphism(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const Graph a = build_graph(ConnectionSet::type_ii(p, 0, 1, 3)).graph();
  const Graph b = build_graph(ConnectionSet::type_ii(p, 0, 2, 6 % p)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_isomorphism(a, b));
}
BENCHMARK(BM_BruteForceIsomorphism)->Arg(7)->Arg(13);

void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(state.range(0)));
}
BENCHMARK(BM_EnumerateClasses)->Arg(61)->Arg(1009)->Arg(10007);

void BM_ClassifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(state.range(0)));
}
BENCHMARK(BM_ClassifyAll)->Arg(13)->Arg(31);

}  // namespace
BENCHMARK_MAIN();
