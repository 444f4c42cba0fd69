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

#include "hardy/random.hpp"

#include <cmath>
#include <numbers>

namespace hardy {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = std::uint64_t(a) * std::uint64_t(b);
  hi = std::uint32_t(p >> 32);
  lo = std::uint32_t(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::apply(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index,
                           StreamDomain domain)
    : key_{std::uint32_t(seed) ^ (std::uint32_t(domain) * 0x85EBCA6Bu),
           std::uint32_t(seed >> 32)},
      ctr_{0u, std::uint32_t(domain), std::uint32_t(index),
           std::uint32_t(index >> 32)} {}

void SampleStream::refill() {
  block_ = Philox4x32::apply(ctr_, key_);
  ++ctr_[0];
  used_ = 0;
}

SampleStream::result_type SampleStream::operator()() {
  if (used_ > 2) refill();
  const std::uint64_t v =
      (std::uint64_t(block_[used_]) << 32) | std::uint64_t(block_[used_ + 1]);
  used_ += 2;
  return v;
}

double SampleStream::uniform() {
  // (k + 0.5) / 2^53 with k a 53-bit integer never hits 0 or 1.
  const std::uint64_t k = (*this)() >> 11;
  return (double(k) + 0.5) * 0x1.0p-53;
}

double SampleStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double SampleStream::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  has_spare_normal_ = true;
  return radius * std::cos(angle);
}

}  // namespace hardy
