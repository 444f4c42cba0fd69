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

// Deterministic quadrature references for the n = 1 Hardy functionals of a
// product bump. They share no code with the Monte Carlo estimators: the
// bump, the gauge and the group law are re-derived here.
//
// Weighted L^p norm: composite midpoint rule on the support box.
//
// Seminorm (p = 2, both points ranging over H^1): with xi' = xi o delta,
//   I = int K(delta) E(delta) d delta,  E(delta) = 2 (N - C(delta)),
// where N = int f^2 and C(delta) = int f(xi) f(xi o delta) d xi. The t-factor
// of C is the autocorrelation of the 1D bump, tabulated once. delta is
// parametrized by delta = (e^u cos phi, e^u sin phi, e^{2u} sinh s), which
// turns the kernel into e^{-(sp + alpha) u} cosh^{-1 - sp/2}(s) du dphi ds.
// u uses composite Gauss-Legendre on [u_min, log W] with W the radius beyond
// which the supports can no longer overlap (C = 0: closed form), phi the
// periodic trapezoid rule, s the trapezoid rule on [-40, 40], and the
// region u < u_min the leading quadratic behaviour E ~ e^{2u}.

#ifndef HARDY_TESTS_SUPPORT_GRID_ORACLE_HPP_
#define HARDY_TESTS_SUPPORT_GRID_ORACLE_HPP_

#include <array>

namespace hardy::testing {

// f(x, y, t) = psi((x - c0)/r0) psi((y - c1)/r1) psi((t - c2)/r2) on H^1.
struct GridBump {
  std::array<double, 3> center;
  std::array<double, 3> radii;
};

enum class GridWeight {
  kHalfSpace,  // x^{sp} |z|^alpha
  kWhole,      // d(xi)^{sp} |z|^alpha
};

// int |f|^p / weight by the midpoint rule with `nodes` points per axis.
double grid_weighted_lp(const GridBump& f, double p, double s, double alpha,
                        GridWeight weight, int nodes);

struct SeminormResolution {
  int xy_nodes = 48;      // midpoint nodes per axis for C(delta)
  int u_panels = 4;       // Gauss-Legendre panels in u (16 nodes each)
  int phi_nodes = 32;     // trapezoid nodes in phi
  double s_step = 0.15;   // trapezoid step in s
  double u_span = 10.0;   // u_min = log W - u_span
};

// int int |f(xi) - f(xi')|^2 / (d(xi^{-1} xi')^{4 + 2s} |z' - z|^alpha).
double grid_seminorm_p2(const GridBump& f, double s, double alpha,
                        const SeminormResolution& res = {});

}  // namespace hardy::testing

#endif  // HARDY_TESTS_SUPPORT_GRID_ORACLE_HPP_
