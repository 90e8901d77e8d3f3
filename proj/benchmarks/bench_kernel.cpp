#include <benchmark/benchmark.h>

#include <random>

#include "eulerseq/matrix.hpp"

using namespace eulerseq;

namespace {

ExactMatrix random_matrix(const Field& f, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  ExactMatrix m(f, n, n + n / 2);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.at(r, c) = f.from_int(static_cast<long long>(rng() % 19) - 9);
  return m;
}

}  // namespace

static void KernelPrimeField(benchmark::State& state) {
  Field f = Field::prime(32003);
  ExactMatrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto kernel = solve_kernel(m);
    benchmark::DoNotOptimize(kernel);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(KernelPrimeField)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void KernelRationals(benchmark::State& state) {
  Field f = Field::rationals();
  ExactMatrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    auto kernel = solve_kernel(m);
    benchmark::DoNotOptimize(kernel);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(KernelRationals)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void EliminatorInserts(benchmark::State& state) {
  Field f = Field::prime(101);
  std::mt19937 rng(3);
  std::size_t width = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<Scalar> v;
    for (std::size_t j = 0; j < width; ++j) v.push_back(f.from_int(rng() % 101));
    rows.push_back(std::move(v));
  }
  for (auto _ : state) {
    Eliminator e(f, width);
    for (const auto& v : rows) e.add(v);
    benchmark::DoNotOptimize(e.rank());
  }
}
BENCHMARK(EliminatorInserts)->Range(16, 128);

BENCHMARK_MAIN();
