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

#include "hardy/group.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy {
namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw UsageError("dimension n must lie in [1, " +
                     std::to_string(kMaxDimension) + "], got " +
                     std::to_string(n));
  }
}

void check_same_dimension(const GroupPoint& a, const GroupPoint& b) {
  if (a.n() != b.n()) {
    throw UsageError("dimension mismatch: n=" + std::to_string(a.n()) +
                     " vs n=" + std::to_string(b.n()));
  }
}

double scaled_norm(std::span<const double> v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double c : v) s += (c / m) * (c / m);
  return m * std::sqrt(s);
}

}  // namespace

GroupPoint::GroupPoint(int n) : n_(n), c_{} { check_dimension(n); }

GroupPoint::GroupPoint(std::span<const double> x, std::span<const double> y,
                       double t)
    : n_(static_cast<int>(x.size())), c_{} {
  if (x.size() != y.size()) {
    throw UsageError("x and y must have equal length");
  }
  check_dimension(n_);
  std::copy(x.begin(), x.end(), c_.begin());
  std::copy(y.begin(), y.end(), c_.begin() + n_);
  c_[2 * n_] = t;
  for (double c : coords()) {
    if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
  }
}

GroupPoint GroupPoint::from_coords(std::span<const double> coords) {
  if (coords.size() < 3 || coords.size() % 2 == 0) {
    throw UsageError("a point of H^n needs 2n+1 coordinates, got " +
                     std::to_string(coords.size()));
  }
  const std::size_t n = (coords.size() - 1) / 2;
  return GroupPoint(coords.subspan(0, n), coords.subspan(n, n), coords[2 * n]);
}

std::vector<double> GroupPoint::to_vector() const {
  return {coords().begin(), coords().end()};
}

double GroupPoint::z_norm() const {
  double s = 0.0;
  for (int u = 0; u < 2 * n_; ++u) s += c_[u] * c_[u];
  if (!std::isfinite(s)) return scaled_norm(z());
  return std::sqrt(s);
}

bool GroupPoint::operator==(const GroupPoint& other) const {
  if (n_ != other.n_) return false;
  return std::equal(coords().begin(), coords().end(), other.coords().begin());
}

PointBuilder::PointBuilder(int n) : p_(n) {}
PointBuilder::PointBuilder(const GroupPoint& start) : p_(start) {}

GroupPoint PointBuilder::build() const {
  for (double c : p_.coords()) {
    if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
  }
  return p_;
}

GroupParams::GroupParams(int n_in) : n(n_in) { check_dimension(n_in); }

double symplectic_form(const GroupPoint& a, const GroupPoint& b) {
  check_same_dimension(a, b);
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a.y(i) * b.x(i) - a.x(i) * b.y(i);
  return s;
}

GroupPoint group_multiply(const GroupPoint& a, const GroupPoint& b) {
  check_same_dimension(a, b);
  const int n = a.n();
  PointBuilder out(n);
  for (int u = 0; u < 2 * n; ++u) out[u] = a.coord(u) + b.coord(u);
  out[2 * n] = a.t() + b.t() + 2.0 * symplectic_form(a, b);
  return out.build();
}

GroupPoint group_inverse(const GroupPoint& a) {
  PointBuilder out(a.n());
  for (int u = 0; u < a.dim(); ++u) out[u] = -a.coord(u);
  return out.build();
}

double gauge_from(double z_norm, double t) {
  // hypot keeps |z|^4 + t^2 representable for coordinates up to ~1e150.
  return std::sqrt(std::hypot(z_norm * z_norm, t));
}

double koranyi_gauge(const GroupPoint& a) { return gauge_from(a.z_norm(), a.t()); }

double left_distance(const GroupPoint& a, const GroupPoint& b) {
  return koranyi_gauge(group_multiply(group_inverse(a), b));
}

GroupPoint dilate(double r, const GroupPoint& a) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw UsageError("dilation factor must be positive and finite");
  }
  PointBuilder out(a.n());
  for (int u = 0; u < 2 * a.n(); ++u) out[u] = r * a.coord(u);
  out[2 * a.n()] = r * r * a.t();
  return out.build();
}

double z_distance(const GroupPoint& a, const GroupPoint& b) {
  check_same_dimension(a, b);
  double s = 0.0;
  for (int u = 0; u < 2 * a.n(); ++u) {
    const double d = a.coord(u) - b.coord(u);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace hardy
