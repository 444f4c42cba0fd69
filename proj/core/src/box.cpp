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

#include "hardy/box.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

double Interval::min_abs() const {
  if (lo <= 0.0 && 0.0 <= hi) return 0.0;
  return std::min(std::abs(lo), std::abs(hi));
}

double Interval::max_abs() const { return std::max(std::abs(lo), std::abs(hi)); }

CoordBox::CoordBox(int n, std::span<const Interval> intervals) : n_(n) {
  GroupParams check(n);
  if (intervals.size() != std::size_t(2 * n + 1)) {
    throw UsageError("a box in H^n needs 2n+1 intervals, got " +
                     std::to_string(intervals.size()));
  }
  for (std::size_t u = 0; u < intervals.size(); ++u) {
    const Interval& iv = intervals[u];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
      throw UsageError("box interval " + std::to_string(u) + " is empty");
    }
    iv_[u] = iv;
  }
}

double CoordBox::measure() const {
  double m = 1.0;
  for (const Interval& iv : intervals()) m *= iv.length();
  return m;
}

bool CoordBox::contains(const GroupPoint& p) const {
  if (p.n() != n_) throw UsageError("dimension mismatch between box and point");
  for (int u = 0; u < dim(); ++u) {
    if (!iv_[u].contains_closed(p.coord(u))) return false;
  }
  return true;
}

bool CoordBox::contains_open(const GroupPoint& p) const {
  if (p.n() != n_) throw UsageError("dimension mismatch between box and point");
  for (int u = 0; u < dim(); ++u) {
    if (!iv_[u].contains_open(p.coord(u))) return false;
  }
  return true;
}

GroupPoint CoordBox::center() const {
  PointBuilder b(n_);
  for (int u = 0; u < dim(); ++u) b[u] = 0.5 * (iv_[u].lo + iv_[u].hi);
  return b.build();
}

GroupPoint CoordBox::sample(SampleStream& rng) const {
  PointBuilder b(n_);
  for (int u = 0; u < dim(); ++u) b[u] = rng.uniform(iv_[u].lo, iv_[u].hi);
  return b.build();
}

double CoordBox::min_z_norm() const {
  double s = 0.0;
  for (int u = 0; u < 2 * n_; ++u) s += iv_[u].min_abs() * iv_[u].min_abs();
  return std::sqrt(s);
}

double CoordBox::max_z_norm() const {
  double s = 0.0;
  for (int u = 0; u < 2 * n_; ++u) s += iv_[u].max_abs() * iv_[u].max_abs();
  return std::sqrt(s);
}

double CoordBox::gauge_diameter() const {
  double s = 0.0;
  for (int u = 0; u < 2 * n_; ++u) s += iv_[u].length() * iv_[u].length();
  return gauge_from(std::sqrt(s), t().length());
}

std::pair<double, double> CoordBox::power_weight_extrema(double a,
                                                         double b) const {
  if (a < 0.0 || b < 0.0) throw UsageError("weight exponents must be >= 0");
  if (x1().lo < 0.0) throw DomainError("x_1-interval must lie in [0, inf)");
  const double inf = std::pow(x1().lo, a) * std::pow(min_z_norm(), b);
  const double sup = std::pow(x1().hi, a) * std::pow(max_z_norm(), b);
  return {inf, sup};
}

double CoordBox::overlap_measure(const CoordBox& other) const {
  if (other.n_ != n_) throw UsageError("dimension mismatch between boxes");
  double m = 1.0;
  for (int u = 0; u < dim(); ++u) {
    const double lo = std::max(iv_[u].lo, other.iv_[u].lo);
    const double hi = std::min(iv_[u].hi, other.iv_[u].hi);
    if (hi <= lo) return 0.0;
    m *= hi - lo;
  }
  return m;
}

}  // namespace hardy
