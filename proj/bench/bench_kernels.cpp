#include "deloop/kernels.hpp"
#include "oracles.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace deloop;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  testing::Rng rng(seed);
  return testing::random_matrix(rng, rows, cols, -9, 9);
}

std::vector<Matrix> random_actions(std::size_t count, std::size_t dim, std::uint64_t seed) {
  testing::Rng rng(seed);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_matrix(rng, dim, dim, -3, 3));
  return out;
}

template <Matrix (*Multiply)(const Matrix&, const Matrix&)>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
  state.SetComplexityN(state.range(0));
}

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) {
    Matrix m = a;
    benchmark::DoNotOptimize(Rref(m));
  }
}

template <Matrix (*System)(const std::vector<Matrix>&, const std::vector<Matrix>&)>
void BM_Intertwining(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = random_actions(10, n, 4), ys = random_actions(10, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(System(xs, ys));
}

BENCHMARK(BM_Multiply<kernels::serial::multiply>)->Name("multiply/serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_Multiply<kernels::parallel::multiply>)->Name("multiply/openmp")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_Rref<kernels::serial::rref_in_place>)->Name("rref/serial")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_Rref<kernels::parallel::rref_in_place>)->Name("rref/openmp")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_Intertwining<kernels::serial::intertwining_system>)->Name("intertwining/serial")->Arg(8)->Arg(16);
BENCHMARK(BM_Intertwining<kernels::parallel::intertwining_system>)->Name("intertwining/openmp")->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
