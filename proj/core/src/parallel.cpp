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

#include "hardy/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hardy/error.hpp"

namespace hardy {

Moments Moments::merge(const Moments& a, const Moments& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Moments out;
  out.count = a.count + b.count;
  const double na = double(a.count);
  const double nb = double(b.count);
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * (nb / double(out.count));
  out.m2 = a.m2 + b.m2 + delta * delta * (na * nb / double(out.count));
  return out;
}

double Moments::variance() const {
  return count < 2 ? 0.0 : std::max(0.0, m2 / double(count - 1));
}

double Moments::standard_error() const {
  return count < 2 ? 0.0 : std::sqrt(variance() / double(count));
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void parallel_for_blocks(std::int64_t blocks, int threads,
                         const std::function<void(std::int64_t)>& body) {
  const int workers =
      int(std::min<std::int64_t>(resolve_threads(threads), std::max<std::int64_t>(blocks, 1)));
  if (workers <= 1) {
    for (std::int64_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        body(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Moments accumulate(std::int64_t samples, std::int64_t batch, int threads,
                   const std::function<double(std::int64_t)>& sample) {
  if (samples < 0) throw UsageError("sample count must be non-negative");
  if (batch <= 0) throw UsageError("batch size must be positive");
  if (samples == 0) return {};
  const std::int64_t blocks = (samples + batch - 1) / batch;
  std::vector<Moments> partial(blocks);
  parallel_for_blocks(blocks, threads, [&](std::int64_t b) {
    const std::int64_t begin = b * batch;
    const std::int64_t end = std::min(samples, begin + batch);
    std::vector<double> values(end - begin);
    for (std::int64_t i = begin; i < end; ++i) values[i - begin] = sample(i);
    double sum = 0.0;
    for (double v : values) sum += v;
    Moments m;
    m.count = end - begin;
    m.mean = sum / double(m.count);
    double m2 = 0.0;
    for (double v : values) m2 += (v - m.mean) * (v - m.mean);
    m.m2 = m2;
    partial[b] = m;
  });
  // Fixed-shape pairwise tree over block order.
  while (partial.size() > 1) {
    std::vector<Moments> next((partial.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = 2 * i + 1 < partial.size()
                    ? Moments::merge(partial[2 * i], partial[2 * i + 1])
                    : partial[2 * i];
    }
    partial.swap(next);
  }
  return partial.front();
}

}  // namespace hardy
