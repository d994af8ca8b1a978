// Copyright 2026 The sphqmc Authors
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

#include "sphqmc/discrepancy.hpp"
#include "sphqmc/netgen.hpp"
#include "sphqmc/quadrature.hpp"
#include "sphqmc/sphere.hpp"

namespace {

using namespace sphqmc;

void BM_DigitalNet(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto spec = DigitalNetSpec::identity_pascal(PrimeBase(2), m);
  for (auto _ : state) benchmark::DoNotOptimize(digital_net(spec));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_DigitalNet)->DenseRange(8, 16, 4);

void BM_Scramble(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto net = digital_net(DigitalNetSpec::identity_pascal(PrimeBase(2), m));
  const auto s = ScrambleState::from_seed(PrimeBase(2), m, 7);
  for (auto _ : state) benchmark::DoNotOptimize(scramble(net, s));
}
BENCHMARK(BM_Scramble)->Arg(12);

void BM_SumOfDistances(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto pts = lift(digital_net(DigitalNetSpec::identity_pascal(PrimeBase(2), m)));
  for (auto _ : state) benchmark::DoNotOptimize(sum_of_distances(pts));
  const auto n = static_cast<std::int64_t>(pts.size());
  state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}
BENCHMARK(BM_SumOfDistances)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_StarDiscrepancy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto net = digital_net(DigitalNetSpec::identity_pascal(PrimeBase(2), m));
  for (auto _ : state) benchmark::DoNotOptimize(star_discrepancy_exact(net.coords()));
}
BENCHMARK(BM_StarDiscrepancy)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_ExtremeDiscrepancy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto net = digital_net(DigitalNetSpec::identity_pascal(PrimeBase(2), m));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_discrepancy_exact(net.coords()));
}
BENCHMARK(BM_ExtremeDiscrepancy)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

}  // namespace
