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

// Boundary distances for the half spaces {x_1 > 0} and {t > 0} and the
// membership predicates for the regions used by the decompositions.

#ifndef HARDY_GEOMETRY_HPP_
#define HARDY_GEOMETRY_HPP_

#include <optional>
#include <variant>

#include "hardy/group.hpp"

namespace hardy {

// Gauge ball {xi' : d(center^{-1} o xi') < radius}.
struct Ball {
  GroupPoint center;
  double radius;
};

// Infinite cylinder {xi' : |z' - z_center| < radius}; t is unconstrained.
struct Cylinder {
  GroupPoint center;
  double radius;
};

// {xi' : d(base^{-1} o xi') < R1 x_1^{1/2} |z|^{1/2} and |z' - z| < R2 x_1},
// with x_1 and z taken from the base point.
struct Sigma {
  GroupPoint base;
  double R1;
  double R2;
};

// {0 < t < 1, |x_i|, |y_i| > 1/(2 sqrt(2n)) for all i}.
struct Omega {};

// Q(rho) = {0 < x_1 < rho, |x_2|..|x_n|, |y_1|..|y_n| < rho/2, |t| < rho^2/2}.
struct QBox {
  double rho;
};

struct HalfSpaceX1 {};
struct HalfSpaceT {};

using Region =
    std::variant<Ball, Cylinder, Sigma, Omega, QBox, HalfSpaceX1, HalfSpaceT>;

// Strict membership; boundary points are outside. Invalid region parameters
// raise UsageError.
bool contains(const Region& region, const GroupPoint& xi);

// The coordinate threshold 1/(2 sqrt(2n)) of Omega.
double omega_threshold(int n);

struct DistanceResult {
  double value = 0.0;
  GroupPoint witness{1};
  bool certified_exact = false;
};

// Distance to {x_1 = 0}: exactly x_1, realized by (0, x_2.., y, t - 2 x_1 y_1).
DistanceResult delta_half_x1(const GroupPoint& xi);

struct TBounds {
  double sqrt_bound = 0.0;
  std::optional<double> appendix_bound;
  std::optional<GroupPoint> witness;
};

// Upper bounds for the distance to {t = 0}: sqrt(t) always, and
// (t/4n)(sum 1/x_i^2 + 1/y_i^2)^{1/2} when no x_i or y_i vanishes.
TBounds delta_t_bounds(const GroupPoint& xi);

struct SearchConfig {
  // Pattern-search evaluations per start point.
  int evaluations_per_start = 600;
  // Halton-perturbed starts scaled by sqrt(t) (or by x_1 for {x_1 = 0}).
  int perturbations = 8;
  // Search stops when the step falls below this fraction of the start step.
  double min_step_fraction = 1e-13;
};

// Multi-start pattern search over the boundary {t = 0}; starts are z' = z,
// the appendix witness when defined, the sqrt(t) witness (z, 0) and Halton
// perturbations. Never exceeds either closed-form bound.
DistanceResult delta_t_numeric(const GroupPoint& xi, const SearchConfig& cfg);

// Numeric minimization of d(xi^{-1} o w) over w in {x_1 = 0}, seeded with the
// closed-form witness; used to cross-check delta_half_x1.
DistanceResult delta_half_x1_numeric(const GroupPoint& xi,
                                     const SearchConfig& cfg);

}  // namespace hardy

#endif  // HARDY_GEOMETRY_HPP_
