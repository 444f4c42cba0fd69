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

#include "hardy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/optimize.hpp"

namespace hardy {
namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                           23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(int index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string(what) + " must be positive and finite");
  }
}

struct Candidate {
  double value;
  std::vector<double> x;
};

// Runs pattern search from every start and keeps the best result; ties keep
// the earliest start so the outcome is order-deterministic.
Candidate multi_start(const Objective& f,
                      const std::vector<std::vector<double>>& starts,
                      double step, const SearchConfig& cfg) {
  Candidate best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& s : starts) {
    const MinimizeResult r = pattern_search(
        f, s, step, step * cfg.min_step_fraction, cfg.evaluations_per_start);
    if (r.value < best.value) best = {r.value, r.x};
  }
  return best;
}

void check_search(const SearchConfig& cfg) {
  if (cfg.evaluations_per_start < 1) {
    throw UsageError("search budget must be positive");
  }
  if (cfg.perturbations < 0 || !(cfg.min_step_fraction > 0.0)) {
    throw UsageError("invalid search configuration");
  }
}

}  // namespace

double omega_threshold(int n) { return 1.0 / (2.0 * std::sqrt(2.0 * n)); }

bool contains(const Region& region, const GroupPoint& xi) {
  struct Visitor {
    const GroupPoint& xi;
    bool operator()(const Ball& b) const {
      require_positive(b.radius, "ball radius");
      return left_distance(b.center, xi) < b.radius;
    }
    bool operator()(const Cylinder& c) const {
      require_positive(c.radius, "cylinder radius");
      return z_distance(c.center, xi) < c.radius;
    }
    bool operator()(const Sigma& s) const {
      require_positive(s.R1, "R1");
      require_positive(s.R2, "R2");
      const double x1 = s.base.x1();
      if (!(x1 > 0.0)) throw UsageError("Sigma base must have x_1 > 0");
      const double gauge_radius = s.R1 * std::sqrt(x1 * s.base.z_norm());
      return left_distance(s.base, xi) < gauge_radius &&
             z_distance(s.base, xi) < s.R2 * x1;
    }
    bool operator()(const Omega&) const {
      const double th = omega_threshold(xi.n());
      if (!(0.0 < xi.t() && xi.t() < 1.0)) return false;
      for (double c : xi.z()) {
        if (!(std::abs(c) > th)) return false;
      }
      return true;
    }
    bool operator()(const QBox& q) const {
      require_positive(q.rho, "rho");
      if (!(0.0 < xi.x1() && xi.x1() < q.rho)) return false;
      for (int u = 1; u < 2 * xi.n(); ++u) {
        if (!(std::abs(xi.coord(u)) < 0.5 * q.rho)) return false;
      }
      return std::abs(xi.t()) < 0.5 * q.rho * q.rho;
    }
    bool operator()(const HalfSpaceX1&) const { return xi.x1() > 0.0; }
    bool operator()(const HalfSpaceT&) const { return xi.t() > 0.0; }
  };
  return std::visit(Visitor{xi}, region);
}

DistanceResult delta_half_x1(const GroupPoint& xi) {
  if (!(xi.x1() > 0.0)) throw DomainError("delta_half_x1 needs x_1 > 0");
  PointBuilder w(xi);
  w[0] = 0.0;
  w[2 * xi.n()] = xi.t() - 2.0 * xi.x1() * xi.y(0);
  return {xi.x1(), w.build(), true};
}

TBounds delta_t_bounds(const GroupPoint& xi) {
  if (!(xi.t() > 0.0)) throw DomainError("delta_t_bounds needs t > 0");
  const int n = xi.n();
  TBounds out;
  out.sqrt_bound = std::sqrt(xi.t());
  bool defined = true;
  double s = 0.0;
  for (int u = 0; u < 2 * n; ++u) {
    if (xi.coord(u) == 0.0) {
      defined = false;
      break;
    }
    s += 1.0 / (xi.coord(u) * xi.coord(u));
  }
  if (!defined) return out;
  const double c = xi.t() / (4.0 * n);
  out.appendix_bound = c * std::sqrt(s);
  PointBuilder w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = xi.x(i) - c / xi.y(i);
    w[n + i] = xi.y(i) + c / xi.x(i);
  }
  w[2 * n] = 0.0;
  out.witness = w.build();
  return out;
}

DistanceResult delta_t_numeric(const GroupPoint& xi, const SearchConfig& cfg) {
  if (!(xi.t() > 0.0)) throw DomainError("delta_t_numeric needs t > 0");
  check_search(cfg);
  const int n = xi.n();
  auto boundary_point = [n](std::span<const double> z) {
    PointBuilder w(n);
    for (int u = 0; u < 2 * n; ++u) w[u] = z[u];
    w[2 * n] = 0.0;
    return w.build();
  };
  const Objective f = [&](std::span<const double> z) {
    return left_distance(xi, boundary_point(z));
  };

  const TBounds bounds = delta_t_bounds(xi);
  const double scale = bounds.sqrt_bound;
  std::vector<std::vector<double>> starts;
  std::vector<double> z0(xi.z().begin(), xi.z().end());
  starts.push_back(z0);
  if (bounds.witness) {
    const auto wz = bounds.witness->z();
    starts.emplace_back(wz.begin(), wz.end());
  }
  for (int k = 1; k <= cfg.perturbations; ++k) {
    std::vector<double> s = z0;
    for (int u = 0; u < 2 * n; ++u) {
      s[u] += scale * (2.0 * radical_inverse(k, kPrimes[u]) - 1.0);
    }
    starts.push_back(std::move(s));
  }
  const Candidate best = multi_start(f, starts, 0.5 * scale, cfg);
  return {best.value, boundary_point(best.x), false};
}

DistanceResult delta_half_x1_numeric(const GroupPoint& xi,
                                     const SearchConfig& cfg) {
  if (!(xi.x1() > 0.0)) throw DomainError("delta_half_x1 needs x_1 > 0");
  check_search(cfg);
  const int n = xi.n();
  // Free boundary coordinates: x_2..x_n, y, t (everything except x_1).
  auto boundary_point = [n](std::span<const double> v) {
    PointBuilder w(n);
    w[0] = 0.0;
    for (int u = 1; u < 2 * n + 1; ++u) w[u] = v[u - 1];
    return w.build();
  };
  const Objective f = [&](std::span<const double> v) {
    return left_distance(xi, boundary_point(v));
  };
  const DistanceResult exact = delta_half_x1(xi);
  const auto tail = exact.witness.coords().subspan(1);
  std::vector<double> w0(tail.begin(), tail.end());
  std::vector<std::vector<double>> starts{w0};
  const double scale = xi.x1();
  for (int k = 1; k <= cfg.perturbations; ++k) {
    std::vector<double> s = w0;
    for (int u = 0; u < 2 * n; ++u) {
      const double amp = u == 2 * n - 1 ? scale * scale : scale;
      s[u] += amp * (2.0 * radical_inverse(k, kPrimes[u]) - 1.0);
    }
    starts.push_back(std::move(s));
  }
  const Candidate best = multi_start(f, starts, 0.5 * scale, cfg);
  return {best.value, boundary_point(best.x), false};
}

}  // namespace hardy
