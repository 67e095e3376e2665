// Copyright 2026 The Polymat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "polymat/fixtures.h"
#include "polymat/invariants.h"
#include "polymat/lorentzian.h"
#include "polymat/syzygy.h"

namespace polymat {
namespace {

const char* const kFixtures[] = {"paper-example", "k4-restrict-3c",
                                 "sum-u12-k4r2", "U(3;2,2,2)"};

void BM_Mobius(benchmark::State& state) {
  const Polymatroid P = LoadFixture(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(Mobius(P));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Mobius)->DenseRange(0, 3);

void BM_Cave(benchmark::State& state) {
  const Polymatroid P = LoadFixture(kFixtures[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(Cave(P));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Cave)->DenseRange(0, 3);

void BM_BettiTable(benchmark::State& state) {
  const MonomialIdeal I =
      PolymatroidalIdeal(LoadFixture(kFixtures[state.range(0)]));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeBettiTable(I, threads));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_BettiTable)->ArgsProduct({{0, 1, 2, 3}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_DenormalizedLorentzian(benchmark::State& state) {
  const Polymatroid P = LoadFixture("paper-example");
  const SparsePoly h = Homogenize(SignChange(KPolynomialFromCave(P, P.cage())));
  for (auto _ : state) benchmark::DoNotOptimize(IsDenormalizedLorentzian(h));
}
BENCHMARK(BM_DenormalizedLorentzian)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace polymat

BENCHMARK_MAIN();
