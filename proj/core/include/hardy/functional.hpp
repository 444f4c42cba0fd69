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

// Test functions and Monte Carlo estimators for the Hardy functionals: the
// weighted L^p left-hand sides, the weighted Gagliardo seminorm, their
// quotient, exceptional-set membership, the pointwise kernel integral, and
// quotient maximization over a bump family.

#ifndef HARDY_FUNCTIONAL_HPP_
#define HARDY_FUNCTIONAL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardy/box.hpp"
#include "hardy/constants.hpp"
#include "hardy/group.hpp"

namespace hardy {

// ---------------------------------------------------------------------------
// Test functions.

// The domain a test function is intended for; checked at construction.
enum class SupportDomain {
  kHalfSpaceX1,   // support box has x_1-interval inside (0, inf)
  kAwayFromAxis,  // support box stays away from {z = 0}
  kWhole,         // no constraint
};

std::string to_string(SupportDomain d);

// One-dimensional bump psi(u) = exp(1 - 1/(1 - u^2)) on (-1, 1), 0 outside.
double bump_profile(double u);
// max |psi'| = psi'(3^{-1/4}) in closed form.
double bump_profile_lipschitz();

class TestFunction {
 public:
  // A general compactly supported function. `lipschitz` bounds
  // |f(a) - f(b)| / |a - b| in Euclidean coordinates (infinity if unknown).
  TestFunction(int n, std::function<double(const GroupPoint&)> evaluate,
               CoordBox support, std::string label, double lipschitz);

  // The zero function with a nominal support box.
  static TestFunction zero(CoordBox support, std::string label = "zero");

  double operator()(const GroupPoint& xi) const;

  int n() const { return n_; }
  const CoordBox& support() const { return support_; }
  const std::string& label() const { return label_; }
  double lipschitz() const { return lipschitz_; }
  bool is_zero() const { return zero_; }

  // Center and radii for product bumps (center coords then radii).
  const std::vector<double>& family_params() const { return params_; }
  bool is_bump() const { return !params_.empty(); }

 private:
  friend TestFunction make_bump(const GroupPoint&, std::span<const double>,
                                SupportDomain, std::string);

  int n_;
  std::function<double(const GroupPoint&)> eval_;
  CoordBox support_;
  std::string label_;
  double lipschitz_;
  bool zero_ = false;
  std::vector<double> params_;
};

// f(xi) = prod_u psi((xi_u - center_u) / radii_u); support = center +- radii.
TestFunction make_bump(const GroupPoint& center, std::span<const double> radii,
                       SupportDomain domain, std::string label = "bump");

// f o D_{1/r}: again a bump, with center D_r(center) and radii scaled by r
// (first layer) and r^2 (t).
TestFunction dilate_bump(const TestFunction& f, double r, SupportDomain domain);

// f(xi) -> f(xi with t shifted by -t0): a bump with center t shifted by t0.
TestFunction translate_bump_t(const TestFunction& f, double t0,
                              SupportDomain domain);

// Parses "c_1,...,c_{2n+1}:r_1,...,r_{2n+1}".
TestFunction parse_bump(const std::string& spec, SupportDomain domain);

// ---------------------------------------------------------------------------
// Estimates.

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string method;
};

struct McConfig {
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  std::int64_t batch = 4096;
  int threads = 1;
  // Pair law: truncation radius as a fraction of the support gauge diameter,
  // and the probability of drawing the radius from the inner piece.
  double cutoff_fraction = 1e-6;
  double inner_mass = 0.5;

  // Throws UsageError unless samples >= 1000, batch >= 1, 0 < cutoff < 1 and
  // 0 < inner_mass < 1.
  void validate() const;
};

enum class LpDomain {
  kHalfSpaceX1,   // |f|^p / (x_1^{sp} |z|^alpha) over {x_1 > 0}
  kWhole,         // |f|^p / (d(xi)^{sp} |z|^alpha) over H^n
  kWholeZWeight,  // |f|^p / |z|^{sp+alpha} over H^n
};

enum class PairDomain {
  kHalfSpaceX1,  // both points in {x_1 > 0}
  kWhole,        // H^n x H^n
};

std::string to_string(LpDomain d);
std::string to_string(PairDomain d);
LpDomain parse_lp_domain(const std::string& name);
PairDomain pair_domain_for(LpDomain d);

Estimate weighted_lp(const TestFunction& f, const HardyParams& params,
                     LpDomain domain, const McConfig& cfg);

struct SeminormEstimate {
  // Estimate of the double integral restricted to d(xi^{-1} o xi') >= cutoff.
  Estimate truncated;
  double cutoff = 0.0;
  // Gauge diameter of the support box; splits the two radial pieces.
  double split_radius = 0.0;
  // e = p - sp - alpha: the near-diagonal integrand scales like R^{e-1}.
  double near_diagonal_exponent = 0.0;
  // True iff e > 0, i.e. the untruncated seminorm is finite for smooth f.
  bool near_diagonal_finite = false;
  // Analytic bound on the omitted part d < cutoff (+inf when e <= 0).
  double remainder_upper = 0.0;
  double angular_mass = 0.0;
};

// The double integral (the p-th power of the seminorm) by importance
// sampling of xi uniform on the support box and xi' = xi o delta. Throws
// RegimeError for alpha >= Q - 2 (divergent near {z' = z}).
SeminormEstimate gagliardo_seminorm(const TestFunction& f,
                                    const HardyParams& params,
                                    PairDomain domain, const McConfig& cfg);

struct QuotientEstimate {
  Estimate lhs;
  SeminormEstimate seminorm;
  Estimate quotient;
};

// lhs / seminorm with first-order error propagation. The two estimates use
// independent streams. Throws UndefinedQuotientError for f == 0 or when the
// seminorm mean is below 5 standard errors.
QuotientEstimate hardy_quotient(const TestFunction& f,
                                const HardyParams& params, LpDomain domain,
                                const McConfig& cfg);

// ---------------------------------------------------------------------------
// Exceptional sets and pointwise properties.

struct ExceptionalFamily {
  enum class Kind { kHalfSpaceF, kWholeG } kind = Kind::kHalfSpaceF;
  // F: base domain Q(rho), Sigma_{R1,R2}(xi), threshold 2^{p+1}/(S x_1^{Q-1}|z|).
  double rho = 1.0;
  double R1 = 0.0;
  double R2 = 0.0;
  // G: base domain {|z| > r}, ball B(xi, R|z|), threshold 2^{p+1}/(S|z|^Q).
  double r = 1.0;
  double R = 0.0;
  double S = 0.0;

  static ExceptionalFamily half_space(double rho, int n, int m);
  static ExceptionalFamily whole_space(double r, int n, int m,
                                       Direction direction);
  // Membership in the base domain.
  bool in_base_domain(const GroupPoint& xi) const;
};

struct Membership {
  bool member = false;
  bool conclusive = false;
  double value_p = 0.0;    // |f(xi)|^p
  double threshold = 0.0;  // 2^{p+1} / (S x_1^{Q-1} |z|) or 2^{p+1} / (S |z|^Q)
  Estimate local_integral;
  Estimate margin;  // value_p - threshold * local_integral
};

Membership exceptional_membership(const TestFunction& f, const GroupPoint& xi,
                                  const HardyParams& params,
                                  const ExceptionalFamily& family,
                                  const McConfig& cfg);

// int_D |f(xi) - f(xi')|^p / (d^{Q+sp} |z' - z|^alpha) dxi' over the family's
// base domain, truncated at the pair-law cutoff (a lower bound).
SeminormEstimate pointwise_kernel_integral(const TestFunction& f,
                                           const GroupPoint& xi,
                                           const HardyParams& params,
                                           const ExceptionalFamily& family,
                                           const McConfig& cfg);

struct PointwiseCheck {
  Membership membership;
  double weighted_value = 0.0;  // |f|^p / (x_1^{sp}|z|^alpha) or / |z|^{sp+alpha}
  double constant = 0.0;
  SeminormEstimate kernel_integral;
  // weighted_value <= constant * (kernel mean + 3 stderr).
  bool holds = false;
  double ratio = 0.0;  // weighted_value / (constant * kernel mean)
};

PointwiseCheck check_pointwise_property(const TestFunction& f,
                                        const GroupPoint& xi,
                                        const HardyParams& params,
                                        Regime regime, int m,
                                        const ExceptionalFamily& family,
                                        const McConfig& cfg);

// ---------------------------------------------------------------------------
// Quotient maximization.

// Candidates are (center, radii) vectors of length 2(2n+1), clamped into
// [lower, upper]; the start is the family's initial bump.
struct BumpFamily {
  int n = 1;
  SupportDomain domain = SupportDomain::kHalfSpaceX1;
  std::vector<double> start;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> step;

  // Throws UsageError for an empty box or a box containing inadmissible
  // supports.
  void validate() const;
  TestFunction make(std::span<const double> params) const;
};

struct OptimizeResult {
  std::vector<double> best_params;
  QuotientEstimate best;
  QuotientEstimate start;
  int evaluations = 0;
  double C_final = 0.0;
  // (best quotient + 3 stderr) / C_final.
  double margin_ratio = 0.0;
  // best quotient + 3 stderr > C_final.
  bool red_flag = false;
};

OptimizeResult optimize_quotient(const BumpFamily& family,
                                 const HardyParams& params, LpDomain domain,
                                 Regime regime, int budget,
                                 const McConfig& cfg);

}  // namespace hardy

#endif  // HARDY_FUNCTIONAL_HPP_
