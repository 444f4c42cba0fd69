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

// Verification suites that sweep the core checks over random instances or
// families of cells and summarize the outcome: group axioms, distance
// functions, cell-comparison lemmas and the pointwise properties.

#ifndef HARDY_VERIFY_HPP_
#define HARDY_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/decomposition.hpp"
#include "hardy/functional.hpp"
#include "hardy/geometry.hpp"

namespace hardy {

// ---------------------------------------------------------------------------
// Group axioms.

struct GroupCheckReport {
  int n = 1;
  std::int64_t samples = 0;
  // Largest relative errors, each normalized by max(1, coordinate scale^2).
  double associativity = 0.0;
  double identity = 0.0;
  double inverse = 0.0;
  double inverse_of_product = 0.0;  // (a b)^{-1} = b^{-1} a^{-1}
  double t_component = 0.0;         // (a b)_t = t + t' + 2 omega(a, b)
  double dilation_homomorphism = 0.0;
  // Largest relative errors of d(D_r a) = r d(a) and of
  // d((c a)^{-1} (c b)) = d(a^{-1} b).
  double homogeneity = 0.0;
  double left_invariance = 0.0;
  // Instances with d(a b) > (d(a) + d(b)) (1 + 1e-12) or d(a^{-1}) != d(a).
  std::int64_t triangle_violations = 0;
  std::int64_t symmetry_violations = 0;
  // Monte Carlo volume of the unit gauge ball against
  // (pi^n / Gamma(n)) B(n/2, 3/2).
  Estimate ball_volume;
  double ball_volume_exact = 0.0;
  double ball_volume_z = 0.0;

  double algebra_tolerance = 1e-12;
  double metric_tolerance = 1e-10;
  double volume_z_limit = 6.0;
  bool passed = false;
};

// Random coordinates are uniform on [-2, 2]; dilation factors are
// exp(uniform(-3, 3)).
GroupCheckReport verify_group(int n, std::int64_t samples, std::uint64_t seed,
                              int threads = 1);

// ---------------------------------------------------------------------------
// Distance functions.

struct DistanceCheckReport {
  int n = 1;
  // Boundary {x_1 = 0}: numeric minimum against x_1.
  std::int64_t half_points = 0;
  double half_max_error = 0.0;  // max |numeric - x_1| / (1 + x_1)
  double half_tolerance = 1e-9;
  std::int64_t half_failures = 0;
  // Boundary {t = 0} on Omega.
  std::int64_t omega_points = 0;
  std::int64_t appendix_not_below_sqrt = 0;  // appendix >= sqrt(t)
  std::int64_t numeric_above_appendix = 0;   // numeric > appendix + 1e-9
  double max_appendix_over_sqrt = 0.0;
  double max_numeric_minus_appendix = 0.0;
  double min_numeric_over_appendix = 0.0;
  bool passed = false;
};

// `half_points` random points with x_1 uniform on (0.05, 2) and the other
// coordinates uniform on [-1, 1]; `omega_points` random points of Omega with
// t uniform on (0, 1) and |x_i|, |y_i| uniform on (threshold, 2).
DistanceCheckReport verify_distances(int n, std::int64_t half_points,
                                     std::int64_t omega_points,
                                     std::uint64_t seed,
                                     const SearchConfig& search = {});

// ---------------------------------------------------------------------------
// Cell-comparison sweeps.

struct LemmaSweep {
  std::string lemma;
  int n = 1;
  int m = 1;
  std::int64_t cells = 0;
  std::int64_t failed_cells = 0;
  std::int64_t violations = 0;
  double max_gauge_ratio = 0.0;
  double gauge_bound = 0.0;
  double min_measure_ratio = 0.0;
  bool measure_identities_exact = true;
  std::vector<GeometryReport> reports;
  bool passed = false;
};

// Every cell (j, k, i, l) with j <= j_max, all classes k and ranks i, and
// |l| <= l_max, compared with shell j + m.
LemmaSweep sweep_lemma21(int n, int j_max, std::int64_t l_max, int m,
                         double rho, std::int64_t samples_per_cell,
                         std::uint64_t seed, int threads = 1);

// Outward: E1 = J_j^{j,l} for 0 <= j <= j_span. Inward: E1 = J_j^{j,l} for
// m <= j <= m + j_span, so that E2 = J_{j-m}^{j,l} runs over the scales
// 0..j_span. Both with |l| <= l_max.
LemmaSweep sweep_lemma3x(int n, int j_span, std::int64_t l_max, int m,
                         double r, Direction direction,
                         std::int64_t samples_per_cell, std::uint64_t seed,
                         int threads = 1);

// ---------------------------------------------------------------------------
// Pointwise properties.

struct PointwiseSweep {
  std::int64_t attempts = 0;
  std::int64_t members = 0;
  std::int64_t inconclusive = 0;
  std::int64_t nonmembers = 0;
  std::int64_t holds = 0;
  double max_ratio = 0.0;
  double constant = 0.0;
  std::vector<GroupPoint> points;
  std::vector<PointwiseCheck> checks;
  // Enough conclusive non-members were found.
  bool complete = false;
  // Every checked non-member satisfies the pointwise inequality.
  bool passed = false;
};

// Draws points uniformly from the support box of f (restricted to the
// family's base domain) until `target` conclusive non-members have been
// checked or `max_attempts` points have been drawn. Each point uses its own
// seed derived from cfg.seed.
PointwiseSweep sweep_pointwise(const TestFunction& f,
                               const HardyParams& params, Regime regime,
                               int m, const ExceptionalFamily& family,
                               int target, int max_attempts,
                               const McConfig& cfg);

}  // namespace hardy

#endif  // HARDY_VERIFY_HPP_
