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

#include "hardy/verify.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/group.hpp"
#include "hardy/parallel.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

constexpr std::int64_t kBlock = 1024;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

double inf_norm(const GroupPoint& a) {
  double m = 0.0;
  for (double c : a.coords()) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const GroupPoint& a, const GroupPoint& b) {
  double m = 0.0;
  for (int u = 0; u < a.dim(); ++u) {
    m = std::max(m, std::abs(a.coord(u) - b.coord(u)));
  }
  return m;
}

GroupPoint random_point(SampleStream& rng, int n, double half_width) {
  PointBuilder b(n);
  for (int u = 0; u < 2 * n + 1; ++u) b[u] = rng.uniform(-half_width, half_width);
  return b.build();
}

// Per-block partial results of the algebraic checks.
struct GroupPartial {
  double associativity = 0.0;
  double identity = 0.0;
  double inverse = 0.0;
  double inverse_of_product = 0.0;
  double t_component = 0.0;
  double dilation_homomorphism = 0.0;
  double homogeneity = 0.0;
  double left_invariance = 0.0;
  std::int64_t triangle_violations = 0;
  std::int64_t symmetry_violations = 0;
};

void check_samples(std::int64_t samples) {
  if (samples < 1) throw UsageError("sample count must be >= 1");
}

}  // namespace

GroupCheckReport verify_group(int n, std::int64_t samples, std::uint64_t seed,
                              int threads) {
  GroupParams check(n);
  check_samples(samples);
  GroupCheckReport out;
  out.n = n;
  out.samples = samples;

  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<GroupPartial> partial(blocks);
  const GroupPoint e(n);
  parallel_for_blocks(blocks, threads, [&](std::int64_t block) {
    GroupPartial& acc = partial[block];
    const std::int64_t end = std::min(samples, (block + 1) * kBlock);
    for (std::int64_t s = block * kBlock; s < end; ++s) {
      SampleStream rng(seed, std::uint64_t(s), StreamDomain::kGroupChecks);
      const GroupPoint a = random_point(rng, n, 2.0);
      const GroupPoint b = random_point(rng, n, 2.0);
      const GroupPoint c = random_point(rng, n, 2.0);
      const double r = std::exp(rng.uniform(-3.0, 3.0));
      const double sc = std::max({1.0, inf_norm(a), inf_norm(b), inf_norm(c)});
      const double scale = sc * sc;

      const GroupPoint ab = group_multiply(a, b);
      acc.associativity = std::max(
          acc.associativity, max_abs_diff(group_multiply(ab, c),
                                          group_multiply(a, group_multiply(b, c))) /
                                 scale);
      acc.identity = std::max(
          {acc.identity, max_abs_diff(group_multiply(a, e), a) / scale,
           max_abs_diff(group_multiply(e, a), a) / scale});
      const GroupPoint ai = group_inverse(a);
      acc.inverse = std::max({acc.inverse,
                              max_abs_diff(group_multiply(a, ai), e) / scale,
                              max_abs_diff(group_multiply(ai, a), e) / scale});
      acc.inverse_of_product = std::max(
          acc.inverse_of_product,
          max_abs_diff(group_inverse(ab),
                       group_multiply(group_inverse(b), ai)) /
              scale);
      acc.t_component = std::max(
          acc.t_component,
          std::abs(ab.t() - a.t() - b.t() - 2.0 * symplectic_form(a, b)) /
              scale);
      const double rs = std::max(1.0, r * r);
      acc.dilation_homomorphism = std::max(
          acc.dilation_homomorphism,
          max_abs_diff(dilate(r, ab), group_multiply(dilate(r, a), dilate(r, b))) /
              (scale * rs));

      const double da = koranyi_gauge(a);
      acc.homogeneity =
          std::max(acc.homogeneity,
                   std::abs(koranyi_gauge(dilate(r, a)) - r * da) / (r * da));
      const double dab = left_distance(a, b);
      const double shifted =
          left_distance(group_multiply(c, a), group_multiply(c, b));
      acc.left_invariance =
          std::max(acc.left_invariance, std::abs(shifted - dab) / dab);
      if (koranyi_gauge(ab) > (da + koranyi_gauge(b)) * (1.0 + 1e-12)) {
        ++acc.triangle_violations;
      }
      if (std::abs(koranyi_gauge(ai) - da) > 1e-14 * da) {
        ++acc.symmetry_violations;
      }
    }
  });
  for (const GroupPartial& p : partial) {
    out.associativity = std::max(out.associativity, p.associativity);
    out.identity = std::max(out.identity, p.identity);
    out.inverse = std::max(out.inverse, p.inverse);
    out.inverse_of_product = std::max(out.inverse_of_product, p.inverse_of_product);
    out.t_component = std::max(out.t_component, p.t_component);
    out.dilation_homomorphism =
        std::max(out.dilation_homomorphism, p.dilation_homomorphism);
    out.homogeneity = std::max(out.homogeneity, p.homogeneity);
    out.left_invariance = std::max(out.left_invariance, p.left_invariance);
    out.triangle_violations += p.triangle_violations;
    out.symmetry_violations += p.symmetry_violations;
  }

  // Hit-or-miss volume of {d < 1} inside [-1, 1]^{2n+1}.
  const double box = std::ldexp(1.0, 2 * n + 1);
  const Moments mom = accumulate(samples, 4096, threads, [&](std::int64_t s) {
    SampleStream rng(seed, std::uint64_t(s), StreamDomain::kGeneric);
    return koranyi_gauge(random_point(rng, n, 1.0)) < 1.0 ? box : 0.0;
  });
  out.ball_volume = {mom.mean, mom.standard_error(), samples, seed,
                     "hit-or-miss"};
  out.ball_volume_exact = std::pow(std::numbers::pi, n) / std::tgamma(n) *
                          std::beta(0.5 * n, 1.5);
  out.ball_volume_z =
      out.ball_volume.std_error > 0.0
          ? (out.ball_volume.mean - out.ball_volume_exact) /
                out.ball_volume.std_error
          : 0.0;

  out.passed = out.associativity <= out.algebra_tolerance &&
               out.identity <= out.algebra_tolerance &&
               out.inverse <= out.algebra_tolerance &&
               out.inverse_of_product <= out.algebra_tolerance &&
               out.t_component <= out.algebra_tolerance &&
               out.dilation_homomorphism <= out.algebra_tolerance &&
               out.homogeneity <= out.metric_tolerance &&
               out.left_invariance <= out.metric_tolerance &&
               out.triangle_violations == 0 && out.symmetry_violations == 0 &&
               std::abs(out.ball_volume_z) <= out.volume_z_limit;
  return out;
}

// ---------------------------------------------------------------------------

DistanceCheckReport verify_distances(int n, std::int64_t half_points,
                                     std::int64_t omega_points,
                                     std::uint64_t seed,
                                     const SearchConfig& search) {
  GroupParams check(n);
  if (half_points < 0 || omega_points < 0) {
    throw UsageError("point counts must be non-negative");
  }
  DistanceCheckReport out;
  out.n = n;
  out.half_points = half_points;
  out.omega_points = omega_points;
  for (std::int64_t s = 0; s < half_points; ++s) {
    SampleStream rng(seed, std::uint64_t(s), StreamDomain::kGeometry);
    PointBuilder b(n);
    b[0] = rng.uniform(0.05, 2.0);
    for (int u = 1; u < 2 * n + 1; ++u) b[u] = rng.uniform(-1.0, 1.0);
    const GroupPoint xi = b.build();
    const double err =
        std::abs(delta_half_x1_numeric(xi, search).value - xi.x1()) /
        (1.0 + xi.x1());
    out.half_max_error = std::max(out.half_max_error, err);
    if (!(err <= out.half_tolerance)) ++out.half_failures;
  }
  const double thr = omega_threshold(n);
  out.min_numeric_over_appendix = omega_points > 0 ? kInfinity : 0.0;
  out.max_numeric_minus_appendix = omega_points > 0 ? -kInfinity : 0.0;
  for (std::int64_t s = 0; s < omega_points; ++s) {
    SampleStream rng(seed + 1, std::uint64_t(s), StreamDomain::kGeometry);
    PointBuilder b(n);
    for (int u = 0; u < 2 * n; ++u) {
      const double mag = rng.uniform(thr, 2.0);
      b[u] = rng.uniform() < 0.5 ? -mag : mag;
    }
    b[2 * n] = rng.uniform(0.0, 1.0);
    const GroupPoint xi = b.build();
    if (!contains(Omega{}, xi)) continue;  // boundary draw; measure zero
    const TBounds bounds = delta_t_bounds(xi);
    const double appendix = *bounds.appendix_bound;
    const double numeric = delta_t_numeric(xi, search).value;
    out.max_appendix_over_sqrt =
        std::max(out.max_appendix_over_sqrt, appendix / bounds.sqrt_bound);
    out.max_numeric_minus_appendix =
        std::max(out.max_numeric_minus_appendix, numeric - appendix);
    out.min_numeric_over_appendix =
        std::min(out.min_numeric_over_appendix, numeric / appendix);
    if (!(appendix < bounds.sqrt_bound)) ++out.appendix_not_below_sqrt;
    if (!(numeric <= appendix + 1e-9)) ++out.numeric_above_appendix;
  }
  out.passed = out.half_failures == 0 && out.appendix_not_below_sqrt == 0 &&
               out.numeric_above_appendix == 0;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void add_report(LemmaSweep& sweep, GeometryReport report) {
  ++sweep.cells;
  if (!report.passed) ++sweep.failed_cells;
  sweep.violations += report.violations;
  sweep.max_gauge_ratio = std::max(sweep.max_gauge_ratio, report.max_gauge_ratio);
  sweep.gauge_bound = report.gauge_bound;
  sweep.min_measure_ratio = sweep.cells == 1
                                ? report.measure_ratio
                                : std::min(sweep.min_measure_ratio,
                                           report.measure_ratio);
  sweep.measure_identities_exact =
      sweep.measure_identities_exact && report.measure_identity_exact;
  sweep.reports.push_back(std::move(report));
}

}  // namespace

LemmaSweep sweep_lemma21(int n, int j_max, std::int64_t l_max, int m,
                         double rho, std::int64_t samples_per_cell,
                         std::uint64_t seed, int threads) {
  if (j_max < 0 || j_max > max_half_scale(n)) {
    throw UsageError("sweep scale out of range");
  }
  if (l_max < 0) throw UsageError("sweep |l| bound must be >= 0");
  LemmaSweep sweep;
  sweep.lemma = "lemma21";
  sweep.n = n;
  sweep.m = m;
  for (int j = 0; j <= j_max; ++j) {
    for (int k = 1; k <= half_class_count(j); ++k) {
      const std::uint64_t size = half_class_size(n, j, k);
      for (std::uint64_t i = 0; i < size; ++i) {
        for (std::int64_t l = -l_max; l <= l_max; ++l) {
          add_report(sweep, verify_lemma21(n, j, k, i, l, m, rho,
                                           samples_per_cell, seed, threads));
        }
      }
    }
  }
  sweep.passed = sweep.cells > 0 && sweep.failed_cells == 0;
  return sweep;
}

LemmaSweep sweep_lemma3x(int n, int j_span, std::int64_t l_max, int m,
                         double r, Direction direction,
                         std::int64_t samples_per_cell, std::uint64_t seed,
                         int threads) {
  if (j_span < 0) throw UsageError("sweep scale span must be >= 0");
  if (l_max < 0) throw UsageError("sweep |l| bound must be >= 0");
  LemmaSweep sweep;
  sweep.lemma = direction == Direction::kOutward ? "lemma31" : "lemma32";
  sweep.n = n;
  sweep.m = m;
  const int j0 = direction == Direction::kOutward ? 0 : m;
  for (int j = j0; j <= j0 + j_span; ++j) {
    for (std::int64_t l = -l_max; l <= l_max; ++l) {
      add_report(sweep, verify_lemma3x(n, j, l, m, r, direction,
                                       samples_per_cell, seed, threads));
    }
  }
  sweep.passed = sweep.cells > 0 && sweep.failed_cells == 0;
  return sweep;
}

// ---------------------------------------------------------------------------

PointwiseSweep sweep_pointwise(const TestFunction& f,
                               const HardyParams& params, Regime regime,
                               int m, const ExceptionalFamily& family,
                               int target, int max_attempts,
                               const McConfig& cfg) {
  if (target < 1 || max_attempts < target) {
    throw UsageError("pointwise sweep needs 1 <= target <= max_attempts");
  }
  PointwiseSweep out;
  out.constant = pointwise_property_constant(params, regime, m);
  for (int a = 0; a < max_attempts && out.nonmembers < target; ++a) {
    SampleStream rng(cfg.seed, std::uint64_t(a), StreamDomain::kGeneric);
    const GroupPoint xi = f.support().sample(rng);
    ++out.attempts;
    if (!family.in_base_domain(xi)) continue;
    McConfig point_cfg = cfg;
    point_cfg.seed = cfg.seed ^ (0x9E3779B97F4A7C15ULL * std::uint64_t(a + 1));
    const Membership mem =
        exceptional_membership(f, xi, params, family, point_cfg);
    if (!mem.conclusive) {
      ++out.inconclusive;
      continue;
    }
    if (mem.member) {
      ++out.members;
      continue;
    }
    PointwiseCheck check =
        check_pointwise_property(f, xi, params, regime, m, family, point_cfg);
    ++out.nonmembers;
    if (check.holds) ++out.holds;
    out.max_ratio = std::max(out.max_ratio, check.ratio);
    out.points.push_back(xi);
    out.checks.push_back(std::move(check));
  }
  out.complete = out.nonmembers >= target;
  out.passed = out.holds == out.nonmembers;
  return out;
}

}  // namespace hardy
