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

#include "hardy/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/group.hpp"

namespace hardy {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_m(int m) {
  if (m < 1) throw UsageError("contraction exponent m must be >= 1");
}

// log2 gamma(m) = intercept - slope * m with slope > 0 inside the regime.
struct GammaLine {
  double intercept;
  double slope;
};

GammaLine gamma_line(const HardyParams& q, Regime regime) {
  const double sp = q.sp();
  const double Q = q.Q();
  switch (regime) {
    case Regime::kHalfSpace:
      return {q.alpha * 0.5 * std::log2(2.0 * q.n) + q.p + 1.0 + sp +
                  2.0 * q.alpha,
              sp - 1.0};
    case Regime::kSubcritical:
      return {q.p + 1.0 + sp + q.alpha, Q - 2.0 - sp - q.alpha};
    case Regime::kSupercritical:
      return {q.p + 1.0 + sp + q.alpha, sp + q.alpha - (Q - 2.0)};
  }
  throw UsageError("unknown regime");
}

// gamma(m) < 1 is decided with a margin: the line coefficients carry
// rounding from sp + alpha, and an exact zero of log2 gamma must not be
// mistaken for contraction.
bool contracts(double log2_gamma_value) {
  return log2_gamma_value < -kGammaTolerance;
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kHalfSpace:
      return "halfspace";
    case Regime::kSubcritical:
      return "subcritical";
    case Regime::kSupercritical:
      return "supercritical";
  }
  return "unknown";
}

std::string to_string(Direction direction) {
  return direction == Direction::kOutward ? "outward" : "inward";
}

Regime parse_regime(const std::string& name) {
  if (name == "halfspace") return Regime::kHalfSpace;
  if (name == "subcritical") return Regime::kSubcritical;
  if (name == "supercritical") return Regime::kSupercritical;
  throw UsageError("unknown regime '" + name +
                   "' (expected halfspace|subcritical|supercritical)");
}

void HardyParams::validate() const {
  GroupParams check(n);
  if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("p must be >= 1");
  if (!(s > 0.0 && s < 1.0)) throw UsageError("s must lie in (0, 1)");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw UsageError("alpha must be >= 0");
  }
}

RegimeFlags classify(const HardyParams& q) {
  q.validate();
  const double sp = q.sp();
  const double crit = q.Q() - 2.0;
  RegimeFlags f;
  f.half_space = sp - 1.0 > kRegimeTolerance &&
                 q.alpha - 0.5 * (crit + sp) >= -kRegimeTolerance;
  f.subcritical = crit - (sp + q.alpha) > kRegimeTolerance;
  f.supercritical = (sp + q.alpha) - crit > kRegimeTolerance;
  return f;
}

void require_regime(const HardyParams& q, Regime regime) {
  const RegimeFlags f = classify(q);
  const double sp = q.sp();
  const double crit = q.Q() - 2.0;
  switch (regime) {
    case Regime::kHalfSpace:
      if (!(sp - 1.0 > kRegimeTolerance)) {
        throw RegimeError("half-space regime needs sp > 1, got sp = " +
                          fmt(sp));
      }
      if (!f.half_space) {
        throw RegimeError(
            "half-space regime needs alpha >= (Q - 2 + sp)/2 = " +
            fmt(0.5 * (crit + sp)) + ", got alpha = " + fmt(q.alpha));
      }
      return;
    case Regime::kSubcritical:
      if (!f.subcritical) {
        throw RegimeError("subcritical regime needs sp + alpha < Q - 2 = " +
                          fmt(crit) + ", got sp + alpha = " +
                          fmt(sp + q.alpha));
      }
      return;
    case Regime::kSupercritical:
      if (!f.supercritical) {
        throw RegimeError("supercritical regime needs sp + alpha > Q - 2 = " +
                          fmt(crit) + ", got sp + alpha = " +
                          fmt(sp + q.alpha));
      }
      return;
  }
}

Direction direction_for(Regime regime) {
  if (regime == Regime::kSubcritical) return Direction::kOutward;
  if (regime == Regime::kSupercritical) return Direction::kInward;
  throw UsageError("the half-space regime has no whole-space direction");
}

HalfSpaceConstants half_space_constants(int n, int m) {
  GroupParams check(n);
  check_m(m);
  HalfSpaceConstants c;
  c.R1 = 2.0 * std::sqrt(2.0) * std::pow(double(n) * n + n + 2.0, 0.25) + 1.0;
  c.R2 = 2.0 * std::sqrt(2.0 * n) + 1.0;
  c.log2_S = -(m + 1.0) - 0.5 * std::log2(2.0 * n);
  c.S = std::exp2(c.log2_S);
  return c;
}

double unit_ball_volume(int n) {
  GroupParams check(n);
  return std::pow(std::numbers::pi, n) / std::tgamma(n + 1.0);
}

double annulus_volume(int n) {
  return (std::exp2(2.0 * n) - 1.0) * unit_ball_volume(n);
}

WholeSpaceConstants whole_space_constants(int n, int m, Direction direction) {
  GroupParams check(n);
  check_m(m);
  const double Q = 2.0 * n + 2.0;
  const double quarter_log2_11 = 0.25 * std::log2(11.0);
  WholeSpaceConstants c;
  double log2_R;
  if (direction == Direction::kOutward) {
    log2_R = quarter_log2_11 + m + 1.0;
    c.log2_S = Q * (m - 1.0) - 2.0 * m + std::log2(annulus_volume(n));
  } else {
    log2_R = 1.0 + quarter_log2_11;
    c.log2_S = 2.0 * m - Q * (m + 1.0) + std::log2(annulus_volume(n));
  }
  c.R = std::exp2(log2_R);
  c.S = std::exp2(c.log2_S);
  return c;
}

double log2_gamma(const HardyParams& q, Regime regime, int m) {
  const GammaLine g = gamma_line(q, regime);
  return g.intercept - g.slope * m;
}

int minimal_m(const HardyParams& q, Regime regime) {
  require_regime(q, regime);
  constexpr int kLimit = 1 << 24;
  for (int m = 1; m <= kLimit; ++m) {
    if (contracts(log2_gamma(q, regime, m))) return m;
  }
  throw RegimeError("gamma(m) stays >= 1 for all m <= 2^24");
}

int minimal_m_closed_form(const HardyParams& q, Regime regime) {
  require_regime(q, regime);
  const GammaLine g = gamma_line(q, regime);
  const double root = g.intercept / g.slope;
  if (!(root < double(1 << 24))) {
    throw RegimeError("gamma(m) stays >= 1 for all m <= 2^24");
  }
  int m = std::max(1, int(std::floor(root)) + 1);
  // Guard against rounding of the root.
  while (m > 1 && contracts(log2_gamma(q, regime, m - 1))) --m;
  while (!contracts(log2_gamma(q, regime, m))) ++m;
  return m;
}

double log2_pointwise_property_constant(const HardyParams& q, Regime regime,
                                        int m) {
  require_regime(q, regime);
  check_m(m);
  const double sp = q.sp();
  const double Q = q.Q();
  if (regime == Regime::kHalfSpace) {
    const HalfSpaceConstants c = half_space_constants(q.n, m);
    return q.p + 1.0 + (Q + sp) * std::log2(c.R1) +
           q.alpha * std::log2(c.R2) - c.log2_S;
  }
  const WholeSpaceConstants c =
      whole_space_constants(q.n, m, direction_for(regime));
  return q.p + 1.0 + (Q + sp + q.alpha) * std::log2(c.R) - c.log2_S;
}

double pointwise_property_constant(const HardyParams& q, Regime regime,
                                   int m) {
  return std::exp2(log2_pointwise_property_constant(q, regime, m));
}

ContractionSchedule contraction_schedule(const HardyParams& q, Regime regime,
                                         std::optional<int> m) {
  require_regime(q, regime);
  ContractionSchedule out;
  out.regime = regime;
  out.m_min = minimal_m_closed_form(q, regime);
  if (m && *m < out.m_min) {
    throw UsageError("m = " + std::to_string(*m) + " is below m_min = " +
                     std::to_string(out.m_min));
  }
  out.m = m.value_or(out.m_min);
  out.log2_gamma = log2_gamma(q, regime, out.m);
  out.gamma = std::exp2(out.log2_gamma);
  const double one_minus_gamma = -std::expm1(out.log2_gamma * std::numbers::ln2);
  out.log2_pointwise_constant =
      log2_pointwise_property_constant(q, regime, out.m);
  out.pointwise_constant = std::exp2(out.log2_pointwise_constant);
  out.log2_C_final = out.log2_pointwise_constant - std::log2(one_minus_gamma);
  out.C_final = std::exp2(out.log2_C_final);
  if (regime == Regime::kSupercritical) {
    out.annulus_coefficient = out.gamma / one_minus_gamma;
  }
  if (regime == Regime::kHalfSpace) {
    const HalfSpaceConstants c = half_space_constants(q.n, out.m);
    out.R1 = c.R1;
    out.R2 = c.R2;
    out.S = c.S;
  } else {
    const WholeSpaceConstants c =
        whole_space_constants(q.n, out.m, direction_for(regime));
    out.R = c.R;
    out.S = c.S;
  }
  if (!std::isfinite(out.C_final) || !(out.C_final > 0.0)) {
    throw RegimeError("final constant is not finite for these parameters");
  }
  return out;
}

}  // namespace hardy
