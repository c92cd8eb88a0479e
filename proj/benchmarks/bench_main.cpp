#include <benchmark/benchmark.h>

#include "dskit/dskit.hpp"

namespace {

// Barycentric subdivision of the boundary of a simplex: large, Eulerian, balanced.
dskit::Complex subdivided_sphere(int d) {
  return dskit::gen::barycentric_subdivision(dskit::gen::simplex_boundary(d).complex).complex;
}

void BM_MultiplicitySweep(benchmark::State& state) {
  auto c = subdivided_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dskit::MultiplicityTable(c));
  state.counters["faces"] = static_cast<double>(c.num_faces());
}
BENCHMARK(BM_MultiplicitySweep)->DenseRange(3, 5);

// Same numbers one face at a time by summing over supersets.
void BM_MultiplicitySuperset(benchmark::State& state) {
  auto c = subdivided_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& f : c.faces()) total += dskit::multiplicity(c, f, dskit::MultiplicityMethod::superset_sum);
    benchmark::DoNotOptimize(total);
  }
  state.counters["faces"] = static_cast<double>(c.num_faces());
}
BENCHMARK(BM_MultiplicitySuperset)->DenseRange(3, 4);

void BM_ReducedBetti(benchmark::State& state) {
  auto c = subdivided_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dskit::reduced_betti(c));
}
BENCHMARK(BM_ReducedBetti)->DenseRange(3, 4);

void BM_ReducedBettiMod2(benchmark::State& state) {
  auto c = subdivided_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dskit::reduced_betti(c, dskit::FieldSpec::prime(2)));
}
BENCHMARK(BM_ReducedBettiMod2)->DenseRange(3, 4);

void BM_BarycentricSubdivision(benchmark::State& state) {
  auto c = dskit::gen::simplex_boundary(static_cast<int>(state.range(0))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(dskit::gen::barycentric_subdivision(c));
}
BENCHMARK(BM_BarycentricSubdivision)->DenseRange(3, 5);

void BM_VerifyAllColored(benchmark::State& state) {
  auto g = dskit::gen::barycentric_subdivision(dskit::gen::simplex_boundary(static_cast<int>(state.range(0))).complex);
  auto coloring = dskit::validate_balanced(g.complex, *g.colors);
  for (auto _ : state) benchmark::DoNotOptimize(dskit::verify_all(g.complex, dskit::FieldSpec::rationals(), coloring));
}
BENCHMARK(BM_VerifyAllColored)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_DeltaRoundTrip(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<dskit::Integer> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = dskit::Integer(static_cast<long long>(i * i) - 7);
  dskit::IntPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(dskit::delta_expand(dskit::monomial_to_delta(p)));
}
BENCHMARK(BM_DeltaRoundTrip)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
