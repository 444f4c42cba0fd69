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

#include "hardy/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "hardy/error.hpp"
#include "hardy/geometry.hpp"
#include "hardy/optimize.hpp"
#include "hardy/parallel.hpp"
#include "hardy/random.hpp"

namespace hardy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Estimate make_estimate(const Moments& m, const McConfig& cfg,
                       std::string method) {
  return {m.mean, m.standard_error(), m.count, cfg.seed, std::move(method)};
}

Estimate exact_zero(const McConfig& cfg, std::string method) {
  return {0.0, 0.0, cfg.samples, cfg.seed, std::move(method)};
}

void check_support_domain(const CoordBox& box, SupportDomain domain) {
  switch (domain) {
    case SupportDomain::kHalfSpaceX1:
      if (!(box.x1().lo > 0.0)) {
        throw DomainError("support must lie in {x_1 > 0} with x_1 bounded "
                          "away from 0");
      }
      return;
    case SupportDomain::kAwayFromAxis:
      if (!(box.min_z_norm() > 0.0)) {
        throw DomainError("support must stay away from {z = 0}");
      }
      return;
    case SupportDomain::kWhole:
      return;
  }
}

// Gauge-polar pair law: delta = D_R sigma, with sigma on the unit gauge
// sphere with density |sigma_z|^{-alpha} / M_alpha (cone measure) and R drawn
// from a two-piece law h(R): density proportional to R^{e-1} on
// [cutoff, split] with mass `inner`, and a Pareto tail proportional to
// R^{-1-kappa} on [split, inf). Then K(delta) / q(delta) =
// M_alpha R^{-1-kappa} / h(R) with K = d^{-Q-sp} |delta_z|^{-alpha}.
class PairLaw {
 public:
  PairLaw(const HardyParams& q, double cutoff, double split, double inner)
      : n_(q.n),
        alpha_(q.alpha),
        kappa_(q.sp() + q.alpha),
        e_(q.p - q.sp() - q.alpha),
        cutoff_(cutoff),
        split_(split),
        inner_(inner) {
    const double a = (2.0 * n_ - alpha_) / 4.0;
    const double log_beta =
        std::lgamma(a) + std::lgamma(1.5) - std::lgamma(a + 1.5);
    log_mass_ = std::log(q.Q() - alpha_) + n_ * std::log(std::numbers::pi) -
                std::lgamma(double(n_)) + log_beta;
    log_uniform_ = std::abs(e_) < 1e-9;
    if (log_uniform_) {
      log_span_ = std::log(split_ / cutoff_);
    } else {
      ce_ = std::pow(cutoff_, e_);
      se_ = std::pow(split_, e_);
    }
  }

  double angular_mass() const { return std::exp(log_mass_); }
  double log_angular_mass() const { return log_mass_; }
  double exponent() const { return e_; }

  // Returns delta and log(K / q) at delta.
  GroupPoint draw(SampleStream& rng, double& log_weight) const {
    const int d = 2 * n_;
    const double inv = 1.0 / (d - alpha_);
    double rho = 0.0;
    double room = 0.0;
    do {
      rho = std::pow(rng.uniform(), inv);
      room = std::sqrt(std::max(0.0, 1.0 - rho * rho * rho * rho));
    } while (!(rng.uniform() < room));
    std::array<double, 2 * kMaxDimension> g{};
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int u = 0; u < d; ++u) {
        g[u] = rng.normal();
        norm2 += g[u] * g[u];
      }
    } while (norm2 == 0.0);
    const double tau = (2.0 * rng.uniform() - 1.0) * room;
    const double gauge = gauge_from(rho, tau);

    double R;
    if (rng.uniform() < inner_) {
      const double v = rng.uniform();
      R = log_uniform_ ? cutoff_ * std::exp(v * log_span_)
                       : std::pow(ce_ + v * (se_ - ce_), 1.0 / e_);
      R = std::clamp(R, cutoff_, split_);
    } else {
      R = split_ * std::pow(rng.uniform(), -1.0 / kappa_);
    }
    log_weight = log_mass_ - (1.0 + kappa_) * std::log(R) - log_density(R);

    const double zscale = R / (gauge * std::sqrt(norm2)) * rho;
    const double tscale = (R / gauge) * (R / gauge);
    PointBuilder out(n_);
    for (int u = 0; u < d; ++u) out[u] = g[u] * zscale;
    out[d] = tau * tscale;
    return out.build();
  }

  double log_density(double R) const {
    if (R < split_) {
      double log_h;
      if (log_uniform_) {
        log_h = -std::log(R) - std::log(log_span_);
      } else {
        log_h = std::log(e_ / (se_ - ce_)) + (e_ - 1.0) * std::log(R);
      }
      return std::log(inner_) + log_h;
    }
    return std::log1p(-inner_) + std::log(kappa_) + kappa_ * std::log(split_) -
           (1.0 + kappa_) * std::log(R);
  }

  // Bound on int_{d(delta) < cutoff} |f(xi) - f(xi o delta)|^p K d(delta)
  // for |f(a) - f(b)| <= L |a - b| and |z(xi)| <= Z: the coordinate
  // displacement is at most R (1 + 2 Z + R).
  double near_diagonal_bound(double L, double Z, double p) const {
    if (!(e_ > 0.0) || !std::isfinite(L)) return kInf;
    return std::pow(L * (1.0 + 2.0 * Z + cutoff_), p) * std::exp(log_mass_) *
           std::pow(cutoff_, e_) / e_;
  }

 private:
  int n_;
  double alpha_;
  double kappa_;
  double e_;
  double cutoff_;
  double split_;
  double inner_;
  double log_mass_ = 0.0;
  bool log_uniform_ = false;
  double log_span_ = 0.0;
  double ce_ = 0.0;
  double se_ = 0.0;
};

void check_seminorm_regime(const HardyParams& q) {
  q.validate();
  if (!(q.alpha < q.Q() - 2.0)) {
    throw RegimeError(
        "seminorm divergent for nonconstant f: needs alpha < Q - 2 = " +
        std::to_string(q.Q() - 2));
  }
}

double lp_weight(const GroupPoint& xi, const HardyParams& q, LpDomain domain) {
  const double zn = xi.z_norm();
  switch (domain) {
    case LpDomain::kHalfSpaceX1:
      return std::pow(xi.x1(), -q.sp()) * std::pow(zn, -q.alpha);
    case LpDomain::kWhole:
      return std::pow(koranyi_gauge(xi), -q.sp()) * std::pow(zn, -q.alpha);
    case LpDomain::kWholeZWeight:
      return std::pow(zn, -(q.sp() + q.alpha));
  }
  return 0.0;
}

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid number '" + item + "' in bump spec");
    }
    if (used != item.size()) {
      throw UsageError("invalid number '" + item + "' in bump spec");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(SupportDomain d) {
  switch (d) {
    case SupportDomain::kHalfSpaceX1:
      return "halfspace";
    case SupportDomain::kAwayFromAxis:
      return "away_from_axis";
    case SupportDomain::kWhole:
      return "whole";
  }
  return "unknown";
}

double bump_profile(double u) {
  const double a = 1.0 - u * u;
  if (!(a > 0.0)) return 0.0;
  return std::exp(1.0 - 1.0 / a);
}

double bump_profile_lipschitz() {
  // |psi'(u)| = 2u / (1-u^2)^2 psi(u) peaks where 1 - 3u^4 = 0.
  const double w = 1.0 / std::sqrt(3.0);
  const double u = std::sqrt(w);
  return 2.0 * u / ((1.0 - w) * (1.0 - w)) * std::exp(1.0 - 1.0 / (1.0 - w));
}

TestFunction::TestFunction(int n,
                           std::function<double(const GroupPoint&)> evaluate,
                           CoordBox support, std::string label,
                           double lipschitz)
    : n_(n),
      eval_(std::move(evaluate)),
      support_(std::move(support)),
      label_(std::move(label)),
      lipschitz_(lipschitz) {
  if (support_.n() != n_) throw UsageError("support dimension mismatch");
  if (!eval_) throw UsageError("test function needs an evaluation map");
}

TestFunction TestFunction::zero(CoordBox support, std::string label) {
  const int n = support.n();
  TestFunction f(n, [](const GroupPoint&) { return 0.0; }, std::move(support),
                 std::move(label), 0.0);
  f.zero_ = true;
  return f;
}

double TestFunction::operator()(const GroupPoint& xi) const {
  if (xi.n() != n_) throw UsageError("dimension mismatch in test function");
  if (zero_ || !support_.contains_open(xi)) return 0.0;
  return eval_(xi);
}

TestFunction make_bump(const GroupPoint& center, std::span<const double> radii,
                       SupportDomain domain, std::string label) {
  const int n = center.n();
  const int dim = center.dim();
  if (int(radii.size()) != dim) {
    throw UsageError("bump needs 2n+1 radii, got " +
                     std::to_string(radii.size()));
  }
  std::vector<Interval> iv(dim);
  std::vector<double> c(center.coords().begin(), center.coords().end());
  std::vector<double> inv(dim);
  double grad2 = 0.0;
  for (int u = 0; u < dim; ++u) {
    if (!(radii[u] > 0.0) || !std::isfinite(radii[u])) {
      throw UsageError("bump radii must be positive and finite");
    }
    iv[u] = {c[u] - radii[u], c[u] + radii[u]};
    inv[u] = 1.0 / radii[u];
    grad2 += inv[u] * inv[u];
  }
  CoordBox box(n, iv);
  check_support_domain(box, domain);
  auto eval = [c, inv, dim](const GroupPoint& xi) {
    double v = 1.0;
    for (int u = 0; u < dim; ++u) {
      v *= bump_profile((xi.coord(u) - c[u]) * inv[u]);
      if (v == 0.0) return 0.0;
    }
    return v;
  };
  // |grad f| <= sum_u |psi'| / r_u in the worst direction, i.e. at most
  // max|psi'| * (sum_u r_u^{-2})^{1/2} since every other factor is <= 1.
  TestFunction f(n, eval, box, std::move(label),
                 bump_profile_lipschitz() * std::sqrt(grad2));
  f.params_ = c;
  f.params_.insert(f.params_.end(), radii.begin(), radii.end());
  return f;
}

namespace {

std::pair<GroupPoint, std::vector<double>> bump_parts(const TestFunction& f) {
  if (!f.is_bump()) throw UsageError("operation needs a product bump");
  const int dim = 2 * f.n() + 1;
  const auto& p = f.family_params();
  return {GroupPoint::from_coords(std::span(p).subspan(0, dim)),
          std::vector<double>(p.begin() + dim, p.end())};
}

}  // namespace

TestFunction dilate_bump(const TestFunction& f, double r,
                         SupportDomain domain) {
  auto [center, radii] = bump_parts(f);
  const int n = f.n();
  for (int u = 0; u < 2 * n; ++u) radii[u] *= r;
  radii[2 * n] *= r * r;
  return make_bump(dilate(r, center), radii, domain, f.label());
}

TestFunction translate_bump_t(const TestFunction& f, double t0,
                              SupportDomain domain) {
  auto [center, radii] = bump_parts(f);
  PointBuilder c(center);
  c[2 * f.n()] += t0;
  return make_bump(c.build(), radii, domain, f.label());
}

TestFunction parse_bump(const std::string& spec, SupportDomain domain) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("bump spec must look like 'c1,..,cN:r1,..,rN'");
  }
  const auto c = split_numbers(spec.substr(0, colon));
  const auto r = split_numbers(spec.substr(colon + 1));
  if (c.size() != r.size()) {
    throw UsageError("bump center and radii must have the same length");
  }
  return make_bump(GroupPoint::from_coords(c), r, domain, spec);
}

// ---------------------------------------------------------------------------

void McConfig::validate() const {
  if (samples < 1000) throw UsageError("at least 1000 samples are required");
  if (batch < 1) throw UsageError("batch size must be >= 1");
  if (!(cutoff_fraction > 0.0 && cutoff_fraction < 1.0)) {
    throw UsageError("cutoff fraction must lie in (0, 1)");
  }
  if (!(inner_mass > 0.0 && inner_mass < 1.0)) {
    throw UsageError("inner mass must lie in (0, 1)");
  }
}

std::string to_string(LpDomain d) {
  switch (d) {
    case LpDomain::kHalfSpaceX1:
      return "halfspace";
    case LpDomain::kWhole:
      return "whole";
    case LpDomain::kWholeZWeight:
      return "whole_z_weight";
  }
  return "unknown";
}

std::string to_string(PairDomain d) {
  return d == PairDomain::kHalfSpaceX1 ? "halfspace" : "whole";
}

LpDomain parse_lp_domain(const std::string& name) {
  if (name == "halfspace") return LpDomain::kHalfSpaceX1;
  if (name == "whole") return LpDomain::kWhole;
  if (name == "whole_z_weight") return LpDomain::kWholeZWeight;
  throw UsageError("unknown domain '" + name +
                   "' (expected halfspace|whole|whole_z_weight)");
}

PairDomain pair_domain_for(LpDomain d) {
  return d == LpDomain::kHalfSpaceX1 ? PairDomain::kHalfSpaceX1
                                     : PairDomain::kWhole;
}

Estimate weighted_lp(const TestFunction& f, const HardyParams& params,
                     LpDomain domain, const McConfig& cfg) {
  params.validate();
  cfg.validate();
  const std::string method = "uniform_support_box";
  if (f.n() != params.n) throw UsageError("dimension mismatch");
  const CoordBox& box = f.support();
  if (f.is_zero()) return exact_zero(cfg, method);
  check_support_domain(box, domain == LpDomain::kHalfSpaceX1
                                ? SupportDomain::kHalfSpaceX1
                                : SupportDomain::kAwayFromAxis);
  const double vol = box.measure();
  const Moments m = accumulate(cfg.samples, cfg.batch, cfg.threads,
                               [&](std::int64_t q) {
    SampleStream rng(cfg.seed, std::uint64_t(q), StreamDomain::kWeightedLp);
    const GroupPoint xi = box.sample(rng);
    const double v = f(xi);
    if (v == 0.0) return 0.0;
    return vol * std::pow(std::abs(v), params.p) * lp_weight(xi, params, domain);
  });
  return make_estimate(m, cfg, method);
}

SeminormEstimate gagliardo_seminorm(const TestFunction& f,
                                    const HardyParams& params,
                                    PairDomain domain, const McConfig& cfg) {
  check_seminorm_regime(params);
  cfg.validate();
  if (f.n() != params.n) throw UsageError("dimension mismatch");
  const CoordBox& box = f.support();
  if (domain == PairDomain::kHalfSpaceX1) {
    check_support_domain(box, SupportDomain::kHalfSpaceX1);
  }
  const double split = box.gauge_diameter();
  const double cutoff = cfg.cutoff_fraction * split;
  const PairLaw law(params, cutoff, split, cfg.inner_mass);

  SeminormEstimate out;
  out.cutoff = cutoff;
  out.split_radius = split;
  out.near_diagonal_exponent = law.exponent();
  out.near_diagonal_finite = law.exponent() > 0.0;
  out.angular_mass = law.angular_mass();
  const std::string method = "support_stratified_gauge_polar";
  if (f.is_zero()) {
    out.truncated = exact_zero(cfg, method);
    out.remainder_upper = 0.0;
    return out;
  }
  const double vol = box.measure();
  // Pairs with xi' off the support are counted twice (the mirror pairs with
  // xi off the support are never drawn); support-support pairs once.
  const Moments m = accumulate(cfg.samples, cfg.batch, cfg.threads,
                               [&](std::int64_t q) {
    SampleStream rng(cfg.seed, std::uint64_t(q), StreamDomain::kSeminorm);
    const GroupPoint xi = box.sample(rng);
    double log_w = 0.0;
    const GroupPoint delta = law.draw(rng, log_w);
    const GroupPoint xj = group_multiply(xi, delta);
    if (domain == PairDomain::kHalfSpaceX1 && !(xj.x1() > 0.0)) return 0.0;
    const double diff = std::abs(f(xi) - f(xj));
    if (diff == 0.0) return 0.0;
    const double strata = box.contains(xj) ? 1.0 : 2.0;
    return strata * vol * std::exp(log_w + params.p * std::log(diff));
  });
  out.truncated = make_estimate(m, cfg, method);
  out.remainder_upper =
      2.0 * vol * law.near_diagonal_bound(f.lipschitz(), box.max_z_norm(), params.p);
  return out;
}

QuotientEstimate hardy_quotient(const TestFunction& f,
                                const HardyParams& params, LpDomain domain,
                                const McConfig& cfg) {
  if (f.is_zero()) {
    throw UndefinedQuotientError("quotient undefined for f = 0");
  }
  QuotientEstimate out;
  out.lhs = weighted_lp(f, params, domain, cfg);
  out.seminorm = gagliardo_seminorm(f, params, pair_domain_for(domain), cfg);
  const Estimate& L = out.lhs;
  const Estimate& D = out.seminorm.truncated;
  if (!(D.mean > 5.0 * D.std_error) || !(D.mean > 0.0)) {
    throw UndefinedQuotientError(
        "seminorm estimate not resolved (mean <= 5 standard errors)");
  }
  const double q = L.mean / D.mean;
  const double rl = L.mean != 0.0 ? L.std_error / L.mean : 0.0;
  const double rd = D.std_error / D.mean;
  double se = std::abs(q) * std::sqrt(rl * rl + rd * rd);
  if (L.mean == 0.0) se = L.std_error / D.mean;
  out.quotient = {q, se, D.samples, cfg.seed, "delta_method"};
  return out;
}

// ---------------------------------------------------------------------------

ExceptionalFamily ExceptionalFamily::half_space(double rho, int n, int m) {
  const HalfSpaceConstants c = half_space_constants(n, m);
  ExceptionalFamily fam;
  fam.kind = Kind::kHalfSpaceF;
  fam.rho = rho;
  fam.R1 = c.R1;
  fam.R2 = c.R2;
  fam.S = c.S;
  return fam;
}

ExceptionalFamily ExceptionalFamily::whole_space(double r, int n, int m,
                                                 Direction direction) {
  const WholeSpaceConstants c = whole_space_constants(n, m, direction);
  ExceptionalFamily fam;
  fam.kind = Kind::kWholeG;
  fam.r = r;
  fam.R = c.R;
  fam.S = c.S;
  return fam;
}

bool ExceptionalFamily::in_base_domain(const GroupPoint& xi) const {
  if (kind == Kind::kHalfSpaceF) return contains(QBox{rho}, xi);
  return xi.z_norm() > r;
}

Membership exceptional_membership(const TestFunction& f, const GroupPoint& xi,
                                  const HardyParams& params,
                                  const ExceptionalFamily& fam,
                                  const McConfig& cfg) {
  params.validate();
  cfg.validate();
  if (!fam.in_base_domain(xi)) {
    throw DomainError("point lies outside the family's base domain");
  }
  const int n = xi.n();
  const int Q = params.Q();
  const double zn = xi.z_norm();
  Membership out;
  out.value_p = std::pow(std::abs(f(xi)), params.p);

  // Bounding box of the local region: |z' - z| < zr and
  // |t' - t| <= rg^2 + 2 |z| zr, where rg is the gauge radius.
  double rg;
  double zr;
  if (fam.kind == ExceptionalFamily::Kind::kHalfSpaceF) {
    rg = fam.R1 * std::sqrt(xi.x1() * zn);
    zr = std::min(fam.R2 * xi.x1(), rg);
    out.threshold = std::exp2(params.p + 1.0) /
                    (fam.S * std::pow(xi.x1(), Q - 1) * zn);
  } else {
    rg = fam.R * zn;
    zr = rg;
    out.threshold = std::exp2(params.p + 1.0) / (fam.S * std::pow(zn, Q));
  }
  const double tr = rg * rg + 2.0 * zn * zr;
  std::vector<Interval> iv(2 * n + 1);
  for (int u = 0; u < 2 * n; ++u) iv[u] = {xi.coord(u) - zr, xi.coord(u) + zr};
  iv[2 * n] = {xi.t() - tr, xi.t() + tr};
  bool empty = false;
  if (fam.kind == ExceptionalFamily::Kind::kHalfSpaceF) {
    const double h = 0.5 * fam.rho;
    auto clip = [&](Interval& v, double lo, double hi) {
      v.lo = std::max(v.lo, lo);
      v.hi = std::min(v.hi, hi);
      if (!(v.lo < v.hi)) empty = true;
    };
    clip(iv[0], 0.0, fam.rho);
    for (int u = 1; u < 2 * n; ++u) clip(iv[u], -h, h);
    clip(iv[2 * n], -h * fam.rho, h * fam.rho);
  }
  const std::string method = "uniform_bounding_box_rejection";
  if (empty) {
    out.local_integral = exact_zero(cfg, method);
  } else {
    const CoordBox box(n, iv);
    const double vol = box.measure();
    const double fx = f(xi);
    const Moments m = accumulate(cfg.samples, cfg.batch, cfg.threads,
                                 [&](std::int64_t q) {
      SampleStream rng(cfg.seed, std::uint64_t(q),
                       StreamDomain::kLocalOscillation);
      const GroupPoint xj = box.sample(rng);
      if (!fam.in_base_domain(xj)) return 0.0;
      if (!(left_distance(xi, xj) < rg)) return 0.0;
      if (fam.kind == ExceptionalFamily::Kind::kHalfSpaceF &&
          !(z_distance(xi, xj) < fam.R2 * xi.x1())) {
        return 0.0;
      }
      return vol * std::pow(std::abs(fx - f(xj)), params.p);
    });
    out.local_integral = make_estimate(m, cfg, method);
  }
  out.margin = {out.value_p - out.threshold * out.local_integral.mean,
                out.threshold * out.local_integral.std_error,
                out.local_integral.samples, cfg.seed, "difference"};
  out.member = out.margin.mean > 0.0;
  out.conclusive = std::abs(out.margin.mean) >= 3.0 * out.margin.std_error;
  return out;
}

SeminormEstimate pointwise_kernel_integral(const TestFunction& f,
                                           const GroupPoint& xi,
                                           const HardyParams& params,
                                           const ExceptionalFamily& fam,
                                           const McConfig& cfg) {
  check_seminorm_regime(params);
  cfg.validate();
  if (!fam.in_base_domain(xi)) {
    throw DomainError("point lies outside the family's base domain");
  }
  const double split = f.support().gauge_diameter();
  const double cutoff = cfg.cutoff_fraction * split;
  const PairLaw law(params, cutoff, split, cfg.inner_mass);
  SeminormEstimate out;
  out.cutoff = cutoff;
  out.split_radius = split;
  out.near_diagonal_exponent = law.exponent();
  out.near_diagonal_finite = law.exponent() > 0.0;
  out.angular_mass = law.angular_mass();
  const double fx = f(xi);
  const Moments m = accumulate(cfg.samples, cfg.batch, cfg.threads,
                               [&](std::int64_t q) {
    SampleStream rng(cfg.seed, std::uint64_t(q), StreamDomain::kPointwiseKernel);
    double log_w = 0.0;
    const GroupPoint xj = group_multiply(xi, law.draw(rng, log_w));
    if (!fam.in_base_domain(xj)) return 0.0;
    const double diff = std::abs(fx - f(xj));
    if (diff == 0.0) return 0.0;
    return std::exp(log_w + params.p * std::log(diff));
  });
  out.truncated = make_estimate(m, cfg, "gauge_polar");
  out.remainder_upper =
      law.near_diagonal_bound(f.lipschitz(), xi.z_norm(), params.p);
  return out;
}

PointwiseCheck check_pointwise_property(const TestFunction& f,
                                        const GroupPoint& xi,
                                        const HardyParams& params,
                                        Regime regime, int m,
                                        const ExceptionalFamily& fam,
                                        const McConfig& cfg) {
  PointwiseCheck out;
  out.constant = pointwise_property_constant(params, regime, m);
  out.membership = exceptional_membership(f, xi, params, fam, cfg);
  const double zn = xi.z_norm();
  out.weighted_value =
      fam.kind == ExceptionalFamily::Kind::kHalfSpaceF
          ? out.membership.value_p * std::pow(xi.x1(), -params.sp()) *
                std::pow(zn, -params.alpha)
          : out.membership.value_p * std::pow(zn, -(params.sp() + params.alpha));
  out.kernel_integral = pointwise_kernel_integral(f, xi, params, fam, cfg);
  const Estimate& k = out.kernel_integral.truncated;
  out.holds =
      out.weighted_value <= out.constant * (k.mean + 3.0 * k.std_error);
  out.ratio = k.mean > 0.0 ? out.weighted_value / (out.constant * k.mean)
                           : (out.weighted_value > 0.0 ? kInf : 0.0);
  return out;
}

// ---------------------------------------------------------------------------

void BumpFamily::validate() const {
  GroupParams check(n);
  const std::size_t dim = 2 * std::size_t(n) + 1;
  if (start.size() != 2 * dim || lower.size() != 2 * dim ||
      upper.size() != 2 * dim || step.size() != 2 * dim) {
    throw UsageError("bump family vectors must have length 2(2n+1)");
  }
  for (std::size_t u = 0; u < 2 * dim; ++u) {
    if (!(lower[u] <= upper[u])) throw UsageError("empty parameter box");
    if (!(lower[u] <= start[u] && start[u] <= upper[u])) {
      throw UsageError("start lies outside the parameter box");
    }
  }
  for (std::size_t u = dim; u < 2 * dim; ++u) {
    if (!(lower[u] > 0.0)) throw UsageError("radius bounds must be positive");
  }
  if (domain == SupportDomain::kHalfSpaceX1 && !(lower[0] - upper[dim] > 0.0)) {
    throw UsageError("parameter box admits supports touching {x_1 = 0}");
  }
  if (domain == SupportDomain::kAwayFromAxis) {
    bool separated = false;
    for (std::size_t u = 0; u + 1 < dim; ++u) {
      if (lower[u] - upper[dim + u] > 0.0 || upper[u] + upper[dim + u] < 0.0) {
        separated = true;
      }
    }
    if (!separated) {
      throw UsageError("parameter box admits supports meeting {z = 0}");
    }
  }
}

TestFunction BumpFamily::make(std::span<const double> params) const {
  const std::size_t dim = 2 * std::size_t(n) + 1;
  if (params.size() != 2 * dim) throw UsageError("wrong parameter count");
  return make_bump(GroupPoint::from_coords(params.subspan(0, dim)),
                   params.subspan(dim), domain, "family");
}

OptimizeResult optimize_quotient(const BumpFamily& family,
                                 const HardyParams& params, LpDomain domain,
                                 Regime regime, int budget,
                                 const McConfig& cfg) {
  family.validate();
  if (budget < 0) throw UsageError("budget must be >= 0");
  const ContractionSchedule sched = contraction_schedule(params, regime);
  OptimizeResult out;
  out.C_final = sched.C_final;
  bool have_best = false;
  bool have_start = false;
  double best_q = -kInf;
  const Objective objective = [&](std::span<const double> x) {
    QuotientEstimate est;
    try {
      est = hardy_quotient(family.make(x), params, domain, cfg);
    } catch (const UndefinedQuotientError&) {
      return kInf;
    }
    if (!have_start) {
      out.start = est;
      have_start = true;
    }
    if (!have_best || est.quotient.mean > best_q) {
      best_q = est.quotient.mean;
      out.best = est;
      out.best_params.assign(x.begin(), x.end());
      have_best = true;
    }
    return -est.quotient.mean;
  };
  SimplexOptions opt;
  opt.max_evaluations = budget;
  opt.initial_step = family.step;
  opt.lower = family.lower;
  opt.upper = family.upper;
  const MinimizeResult r = nelder_mead(objective, family.start, opt);
  out.evaluations = r.evaluations;
  if (!have_best) {
    throw UndefinedQuotientError("no candidate produced a defined quotient");
  }
  out.margin_ratio =
      (out.best.quotient.mean + 3.0 * out.best.quotient.std_error) / out.C_final;
  out.red_flag = out.margin_ratio > 1.0;
  return out;
}

}  // namespace hardy
