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

#ifndef HARDY_PARALLEL_HPP_
#define HARDY_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace hardy {

// Count, mean and centered second moment of a sample, mergeable
// (Chan et al. pairwise update).
struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  static Moments merge(const Moments& a, const Moments& b);
  double variance() const;  // unbiased; 0 for count < 2
  double standard_error() const;
};

// Resolves a requested worker count; values <= 0 mean hardware concurrency.
int resolve_threads(int requested);

// Evaluates sample(i) for i in [0, samples) and reduces the values.
//
// The index range is cut into fixed blocks of `batch` samples. Each block is
// reduced sequentially by a two-pass mean/variance, and block results are
// merged in a fixed pairwise tree over block order. The result is therefore
// bit-identical for every worker count. `sample` must be safe to call
// concurrently.
Moments accumulate(std::int64_t samples, std::int64_t batch, int threads,
                   const std::function<double(std::int64_t)>& sample);

// Runs body(block) for block in [0, blocks) on a worker pool.
void parallel_for_blocks(std::int64_t blocks, int threads,
                         const std::function<void(std::int64_t)>& body);

}  // namespace hardy

#endif  // HARDY_PARALLEL_HPP_
