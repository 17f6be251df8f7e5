#include <benchmark/benchmark.h>

#include "spinportrait/aw_scheme.hpp"
#include "spinportrait/kernels.hpp"
#include "spinportrait/optimizer.hpp"
#include "spinportrait/portrait.hpp"
#include "spinportrait/random.hpp"
#include "spinportrait/su2_scheme.hpp"
#include "spinportrait/sun_scheme.hpp"
#include "spinportrait/tomography.hpp"

using namespace spinportrait;

namespace {

DirectionSet optimized(Spin spin) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 2000;
  return optimize(spin, cfg).directions;
}

void BM_Rotation(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  const Direction n(1.1, 0.4);
  for (auto _ : st) benchmark::DoNotOptimize(rotation(s, n));
}
BENCHMARK(BM_Rotation)->Arg(1)->Arg(6)->Arg(25);

void BM_CoeffTable(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(CoeffTable(s));
}
BENCHMARK(BM_CoeffTable)->Arg(6)->Arg(25);

void BM_SchemeConstruction(benchmark::State& st) {
  const DirectionSet ds = optimized(Spin(int(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(Su2Scheme(ds));
}
BENCHMARK(BM_SchemeConstruction)->Arg(1)->Arg(3)->Arg(6);

void BM_Su2Reconstruct(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  const DirectionSet ds = optimized(s);
  const Su2Scheme sch(ds);
  Rng rng(1);
  const ProbVector p =
      prob_vector(random_density_matrix(s, rng), ds.dirs(), PriorWeights::uniform(ds.size()));
  for (auto _ : st) benchmark::DoNotOptimize(sch.reconstruct_operator(p));
}
BENCHMARK(BM_Su2Reconstruct)->Arg(1)->Arg(3)->Arg(6);

void BM_PinvReconstruct(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  Rng rng(2);
  const UnitaryFrameSet ufs = UnitaryFrameSet::haar(s, rng);
  const PriorWeights w = PriorWeights::uniform(ufs.size());
  const ProbVector p = sun_forward(random_density_matrix(s, rng), ufs, w);
  for (auto _ : st) benchmark::DoNotOptimize(reconstruct_pinv_operator(p, ufs, w));
}
BENCHMARK(BM_PinvReconstruct)->Arg(1)->Arg(3)->Arg(6);

void BM_AwReconstruct(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  Rng rng(3);
  const auto dirs = aw_directions(AWGrid::standard(s));
  const auto w = aw_forward(random_density_matrix(s, rng), dirs);
  for (auto _ : st) benchmark::DoNotOptimize(aw_reconstruct_operator(s, w, dirs));
}
BENCHMARK(BM_AwReconstruct)->Arg(1)->Arg(3)->Arg(6);

void BM_SphereReconstruct(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  Rng rng(4);
  const auto fn = tomogram_fn(random_density_matrix(s, rng).matrix());
  for (auto _ : st) {
    benchmark::DoNotOptimize(reconstruct_operator_from_sphere(s, fn, SphereQuadrature::minimal(s)));
  }
}
BENCHMARK(BM_SphereReconstruct)->Arg(1)->Arg(3)->Arg(5);

void BM_Optimize(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  OptimizerConfig cfg;
  cfg.restarts = 1;
  for (auto _ : st) benchmark::DoNotOptimize(optimize(s, cfg));
}
BENCHMARK(BM_Optimize)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_StarApply(benchmark::State& st) {
  const Spin s(int(st.range(0)));
  const Kernels kern(optimized(s));
  Rng rng(5);
  const Symbol a = kern.symbol_of(random_density_matrix(s, rng).matrix());
  const Symbol b = kern.symbol_of(random_density_matrix(s, rng).matrix());
  for (auto _ : st) benchmark::DoNotOptimize(kern.star_apply(a, b));
}
BENCHMARK(BM_StarApply)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
