#include <benchmark/benchmark.h>

#include "bolalg/linalg.hpp"

using bolalg::Matrix;
using bolalg::Scalar;

namespace {

// Dense, full-rank-ish matrix with small mixed-sign fractions.
Matrix fill(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Scalar q(static_cast<long>((r * 7 + c * 3) % 11) - 5, static_cast<long>(1 + (r + 2 * c) % 4));
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = fill(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(bolalg::rref(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = fill(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(bolalg::nullspace(m));
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(8, 64);

static void BM_Intersect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = bolalg::Subspace::row_space(fill(n / 2 + 1, n));
  const auto b = bolalg::Subspace::row_space(fill(n, n).transpose());
  for (auto _ : state) benchmark::DoNotOptimize(bolalg::subspace_intersect(a, b));
}
BENCHMARK(BM_Intersect)->Arg(8)->Arg(16)->Arg(32);
