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

// Counter-based random streams. Every Monte Carlo sample owns the stream
// keyed by (seed, domain, sample index), so the value drawn for a sample does
// not depend on which worker evaluates it or in which order.

#ifndef HARDY_RANDOM_HPP_
#define HARDY_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace hardy {

// Philox4x32 with 10 rounds (Salmon et al., SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static Counter apply(Counter ctr, Key key);
};

// Tags that separate the streams of different estimators sharing one seed.
enum class StreamDomain : std::uint32_t {
  kGeneric = 0,
  kWeightedLp = 1,
  kSeminorm = 2,
  kLocalOscillation = 3,
  kPointwiseKernel = 4,
  kGeometry = 5,
  kPartition = 6,
  kGroupChecks = 7,
};

// The random stream of one sample. Satisfies UniformRandomBitGenerator.
class SampleStream {
 public:
  using result_type = std::uint64_t;

  SampleStream(std::uint64_t seed, std::uint64_t index,
               StreamDomain domain = StreamDomain::kGeneric);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  // Uniform on (lo, hi).
  double uniform(double lo, double hi);
  // Standard normal (Box-Muller, both variates used).
  double normal();

 private:
  void refill();

  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace hardy

#endif  // HARDY_RANDOM_HPP_
