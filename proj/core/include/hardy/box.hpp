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

#ifndef HARDY_BOX_HPP_
#define HARDY_BOX_HPP_

#include <array>
#include <span>
#include <utility>

#include "hardy/group.hpp"
#include "hardy/random.hpp"

namespace hardy {

// Open interval (lo, hi), lo < hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  // Membership in the closure [lo, hi].
  bool contains_closed(double v) const { return lo <= v && v <= hi; }
  bool contains_open(double v) const { return lo < v && v < hi; }
  // Smallest and largest |v| over the closure.
  double min_abs() const;
  double max_abs() const;
};

// Axis-aligned box in the coordinates (x_1..x_n, y_1..y_n, t) of H^n. The
// x_1-interval comes first, the 2n - 1 base intervals (x_2..x_n, y_1..y_n)
// follow, and the t-interval is last.
class CoordBox {
 public:
  CoordBox(int n, std::span<const Interval> intervals);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }

  const Interval& interval(int u) const { return iv_[u]; }
  const Interval& x1() const { return iv_[0]; }
  // Base coordinate b in [0, 2n - 1): x_2..x_n then y_1..y_n.
  const Interval& base(int b) const { return iv_[b + 1]; }
  const Interval& t() const { return iv_[2 * n_]; }
  std::span<const Interval> intervals() const {
    return {iv_.data(), std::size_t(dim())};
  }

  // Product of interval lengths.
  double measure() const;

  // Closed-box membership; faces have measure zero, so the closure is used
  // to make face points belong to both neighbours.
  bool contains(const GroupPoint& p) const;
  bool contains_open(const GroupPoint& p) const;

  GroupPoint center() const;
  GroupPoint sample(SampleStream& rng) const;

  // Range of |z| over the closure.
  double min_z_norm() const;
  double max_z_norm() const;

  // Gauge-type diameter ((sum_z len^2)^2 + len_t^2)^{1/4} of the box.
  double gauge_diameter() const;

  // inf and sup of x_1^a |z|^b over the closure for a, b >= 0; requires the
  // x_1-interval to lie in [0, inf). Both extrema sit at corner/projection
  // points because the function is monotone in every |coordinate|.
  std::pair<double, double> power_weight_extrema(double a, double b) const;

  // Lebesgue measure of the intersection with another box of the same n.
  double overlap_measure(const CoordBox& other) const;

 private:
  int n_;
  std::array<Interval, 2 * kMaxDimension + 1> iv_{};
};

}  // namespace hardy

#endif  // HARDY_BOX_HPP_
