#include <benchmark/benchmark.h>

#include "eulerseq/builtin.hpp"
#include "eulerseq/derivations.hpp"
#include "eulerseq/sheaf.hpp"

using namespace eulerseq;

static void RiemannRochSpace(benchmark::State& state) {
  Field q = Field::rationals();
  QDivisorP1 d = io::load_divisor(builtin::half_third_divisor_doc(q));
  long i = state.range(0);
  for (auto _ : state) {
    SectionSpace s = rr_space(q, floor_divisor(d, i));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(RiemannRochSpace)->Arg(8)->Arg(32)->Arg(128);

static void PresentSectionRing(benchmark::State& state) {
  Field q = Field::rationals();
  QDivisorP1 d = io::load_divisor(builtin::half_third_divisor_doc(q));
  for (auto _ : state) {
    SectionRingModel m = present_section_ring(d, state.range(0));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(PresentSectionRing)->Arg(8)->Arg(12)->Arg(16);

static void SolveDerivations(benchmark::State& state) {
  GradedRing ring(io::load_ring(builtin::conic_ring_doc(Field::rationals())));
  long d = state.range(0);
  for (auto _ : state) {
    DerivationSpace s = solve_degree(ring, d);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(SolveDerivations)->Arg(0)->Arg(2)->Arg(4);

static void IcisDerivations(benchmark::State& state) {
  GradedRing ring(io::load_ring(builtin::icis_ring_doc()));
  for (auto _ : state) {
    DerivationSpace s = solve_degree(ring, -1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(IcisDerivations);

static void SplittingPipeline(benchmark::State& state) {
  Field f = state.range(0) ? Field::prime(static_cast<std::uint32_t>(state.range(0)))
                           : Field::rationals();
  QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
  for (auto _ : state) {
    SplittingType st = splitting_type(d, -1);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(SplittingPipeline)->Arg(0)->Arg(2);

static void FullEulerReport(benchmark::State& state) {
  Field q = Field::rationals();
  QDivisorP1 d = io::load_divisor(builtin::half_third_divisor_doc(q));
  for (auto _ : state) {
    EulerReport r = euler_report(d, 1);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(FullEulerReport);

BENCHMARK_MAIN();
