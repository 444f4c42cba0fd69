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

// Micro-benchmarks of the group law, the gauge, the counter-based stream and
// cell location.

#include <benchmark/benchmark.h>

#include <vector>

#include "hardy/decomposition.hpp"
#include "hardy/group.hpp"
#include "hardy/random.hpp"

namespace {

std::vector<hardy::GroupPoint> random_points(int n, int count) {
  std::vector<hardy::GroupPoint> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    hardy::SampleStream rng(11, s);
    hardy::PointBuilder b(n);
    for (int u = 0; u < 2 * n + 1; ++u) b[u] = rng.uniform(-2.0, 2.0);
    out.push_back(b.build());
  }
  return out;
}

void BM_GroupMultiply(benchmark::State& state) {
  const auto pts = random_points(int(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hardy::group_multiply(pts[i % 1024], pts[(i + 1) % 1024]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GroupMultiply)->Arg(1)->Arg(2)->Arg(4);

void BM_LeftDistance(benchmark::State& state) {
  const auto pts = random_points(int(state.range(0)), 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hardy::left_distance(pts[i % 1024], pts[(i + 7) % 1024]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LeftDistance)->Arg(1)->Arg(2)->Arg(4);

void BM_SampleStreamUniform(benchmark::State& state) {
  std::uint64_t index = 0;
  for (auto _ : state) {
    hardy::SampleStream rng(3, index++);
    double sum = 0.0;
    for (int k = 0; k < 8; ++k) sum += rng.uniform();
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(8 * state.iterations());
}
BENCHMARK(BM_SampleStreamUniform);

void BM_LocateHalfCell(benchmark::State& state) {
  std::vector<hardy::GroupPoint> pts;
  for (int s = 0; s < 1024; ++s) {
    hardy::SampleStream rng(5, s);
    hardy::PointBuilder b(1);
    b[0] = rng.uniform(1e-6, 1.0);
    b[1] = rng.uniform(-0.5, 0.5);
    b[2] = rng.uniform(-0.5, 0.5);
    b[3] = rng.uniform(-0.5, 0.5);
    pts.push_back(b.build());
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::locate_half_cell(pts[i++ % 1024], 1.0));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LocateHalfCell);

}  // namespace
BENCHMARK_MAIN();
