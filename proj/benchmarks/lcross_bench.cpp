// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "lcross/dichotomy.hpp"
#include "lcross/dist_io.hpp"
#include "lcross/monte_carlo.hpp"
#include "lcross/symmetrization.hpp"
#include "lcross/walk.hpp"

namespace {

using lcross::make_rational;

static void BM_CrossingTable(benchmark::State& state) {
  const lcross::WalkSpec spec{lcross::builtin_dist("uniform{-2..2}"), make_rational(0),
                              static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(lcross::crossing_table(spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingTable)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_RatioScanFamily(benchmark::State& state) {
  const auto d = lcross::optimality_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lcross::ratio_scan(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RatioScanFamily)->RangeMultiplier(2)->Range(4, 128)->Unit(benchmark::kMillisecond);

static void BM_SimplexQpMinSym2(benchmark::State& state) {
  std::vector<lcross::Rational> support;
  for (long i = 0; i < state.range(0); ++i) support.push_back(make_rational(3 * i - 7, 4));
  const auto a = lcross::gram_matrix(lcross::KernelSpec::sym2(), support);
  for (auto _ : state) benchmark::DoNotOptimize(lcross::simplex_qp_min(a));
}
BENCHMARK(BM_SimplexQpMinSym2)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_McCrossingFactorial(benchmark::State& state) {
  const auto s = lcross::StepSampler::factorial_heavy(64);
  const std::uint64_t samples = 1 << 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcross::mc_crossing(s, static_cast<std::size_t>(state.range(0)),
                                                 make_rational(0), samples, 1, {1}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples));
}
BENCHMARK(BM_McCrossingFactorial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_McCrossingLattice(benchmark::State& state) {
  const auto s = lcross::StepSampler::from_dist(lcross::builtin_dist("lazy"));
  const std::uint64_t samples = 1 << 18;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcross::mc_crossing(s, static_cast<std::size_t>(state.range(0)),
                                                 make_rational(0), samples, 1, {1}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples));
}
BENCHMARK(BM_McCrossingLattice)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
