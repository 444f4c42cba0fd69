// Copyright 2026 The Hardy-Heisenberg Authors
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

// Throughput of the Monte Carlo estimators for the Hardy functionals.

#include <benchmark/benchmark.h>

#include <array>

#include "hardy/constants.hpp"
#include "hardy/functional.hpp"
#include "hardy/group.hpp"

namespace {

hardy::TestFunction half_space_bump() {
  const std::array<double, 3> c = {0.5, 0.0, 0.0};
  const std::array<double, 3> r = {0.2, 0.2, 0.1};
  return hardy::make_bump(hardy::GroupPoint::from_coords(c), r,
                          hardy::SupportDomain::kHalfSpaceX1);
}

void BM_WeightedLp(benchmark::State& state) {
  const auto f = half_space_bump();
  const hardy::HardyParams params{1, 4.0, 0.3, 1.8};
  hardy::McConfig cfg;
  cfg.samples = state.range(0);
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hardy::weighted_lp(f, params, hardy::LpDomain::kHalfSpaceX1, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeightedLp)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_GagliardoSeminorm(benchmark::State& state) {
  const auto f = half_space_bump();
  const hardy::HardyParams params{1, 4.0, 0.3, 1.8};
  hardy::McConfig cfg;
  cfg.samples = state.range(0);
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::gagliardo_seminorm(
        f, params, hardy::PairDomain::kHalfSpaceX1, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GagliardoSeminorm)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_ContractionSchedule(benchmark::State& state) {
  const hardy::HardyParams params{1, 2.0, 0.75, 1.75};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hardy::contraction_schedule(params, hardy::Regime::kHalfSpace));
  }
}
BENCHMARK(BM_ContractionSchedule);

}  // namespace
