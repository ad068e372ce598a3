#include <benchmark/benchmark.h>

#include <vector>

#include "bolalg/bolalg.hpp"

using namespace bolalg;

namespace {

LieAlgebra sl2() {
  LieAlgebra g(3);
  g.set_antisymmetric(0, 1, Vector{0, 0, 1});
  g.set_antisymmetric(2, 0, Vector{2, 0, 0});
  g.set_antisymmetric(2, 1, Vector{0, -2, 0});
  return g;
}

/// sl2 as a Bol algebra, repeated `copies` times as a direct product.
BolAlgebra sl2_power(std::size_t copies) {
  const std::vector<BolAlgebra> parts(copies, from_lie_algebra(sl2()));
  return product(parts).algebra;
}

}  // namespace

static void BM_CheckAxioms(benchmark::State& state) {
  const BolAlgebra b = sl2_power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(b).passed());
  state.counters["dim"] = static_cast<double>(b.dim());
}
BENCHMARK(BM_CheckAxioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_PderSolve(benchmark::State& state) {
  const BolAlgebra b = sl2_power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pder_solve(b).pair_space.dim());
}
BENCHMARK(BM_PderSolve)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_RegularModule(benchmark::State& state) {
  const BolAlgebra b = sl2_power(static_cast<std::size_t>(state.range(0)));
  const BolModule v = regular_module(b);
  for (auto _ : state) benchmark::DoNotOptimize(check_module(b, v).passed());
}
BENCHMARK(BM_RegularModule)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_EnvelopeBuildAndVerify(benchmark::State& state) {
  // Past one factor the wedge map into derivations is not injective and the
  // verification reports failures; the cost is what is measured here.
  const BolAlgebra b = sl2_power(static_cast<std::size_t>(state.range(0))).without_binary();
  for (auto _ : state) benchmark::DoNotOptimize(verify_envelope(build_envelope(b)).passed());
}
BENCHMARK(BM_EnvelopeBuildAndVerify)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_EnvelopeRoundTrip(benchmark::State& state) {
  const BolAlgebra b = from_lie_algebra(sl2()).without_binary();
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip(b).report.passed());
}
BENCHMARK(BM_EnvelopeRoundTrip)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
