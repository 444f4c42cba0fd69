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

// Arithmetic of the Heisenberg group H^n = R^n x R^n x R with the law
//
//   (x, y, t) o (x', y', t') = (x + x', y + y', t + t' + 2<y, x'> - 2<x, y'>),
//
// the Koranyi gauge d(x, y, t) = (|z|^4 + t^2)^{1/4} and the dilations
// D_r(x, y, t) = (r x, r y, r^2 t). Everything is binary64.

#ifndef HARDY_GROUP_HPP_
#define HARDY_GROUP_HPP_

#include <array>
#include <span>
#include <vector>

namespace hardy {

// Largest n supported by the fixed-capacity point storage.
inline constexpr int kMaxDimension = 8;

// A point xi = (x, y, t) of H^n. Coordinates are stored contiguously as
// x_1..x_n, y_1..y_n, t so that z = (x, y) is the leading 2n-span.
class GroupPoint {
 public:
  // The identity of H^n.
  explicit GroupPoint(int n);
  GroupPoint(std::span<const double> x, std::span<const double> y, double t);

  // Builds a point from 2n + 1 coordinates in (x, y, t) order.
  static GroupPoint from_coords(std::span<const double> coords);

  int n() const { return n_; }
  // Number of real coordinates, 2n + 1.
  int dim() const { return 2 * n_ + 1; }

  double x(int i) const { return c_[i]; }
  double y(int i) const { return c_[n_ + i]; }
  double t() const { return c_[2 * n_]; }
  double x1() const { return c_[0]; }
  double coord(int u) const { return c_[u]; }

  std::span<const double> z() const { return {c_.data(), std::size_t(2 * n_)}; }
  std::span<const double> coords() const {
    return {c_.data(), std::size_t(2 * n_ + 1)};
  }
  std::vector<double> to_vector() const;

  // Euclidean norm |z| of the first layer.
  double z_norm() const;

  bool operator==(const GroupPoint& other) const;

 private:
  friend class PointBuilder;

  int n_;
  std::array<double, 2 * kMaxDimension + 1> c_;
};

// Mutable scratch space for assembling a point coordinate by coordinate;
// finiteness is checked once in build().
class PointBuilder {
 public:
  explicit PointBuilder(int n);
  explicit PointBuilder(const GroupPoint& start);

  double& operator[](int u) { return p_.c_[u]; }
  double operator[](int u) const { return p_.c_[u]; }
  int n() const { return p_.n_; }

  GroupPoint build() const;

 private:
  GroupPoint p_;
};

// The pair (n, Q) with Q = 2n + 2 the homogeneous dimension.
struct GroupParams {
  explicit GroupParams(int n);
  int n;
  int Q() const { return 2 * n + 2; }
};

GroupPoint group_multiply(const GroupPoint& a, const GroupPoint& b);
GroupPoint group_inverse(const GroupPoint& a);
double koranyi_gauge(const GroupPoint& a);
// d(a^{-1} o b).
double left_distance(const GroupPoint& a, const GroupPoint& b);
GroupPoint dilate(double r, const GroupPoint& a);

// <y_a, x_b> - <x_a, y_b>; the twist term of the group law is twice this.
double symplectic_form(const GroupPoint& a, const GroupPoint& b);

// Euclidean distance |z_a - z_b| between first-layer projections.
double z_distance(const GroupPoint& a, const GroupPoint& b);

// (|z|^4 + t^2)^{1/4} from its two ingredients without forming |z|^4.
double gauge_from(double z_norm, double t);

}  // namespace hardy

#endif  // HARDY_GROUP_HPP_
