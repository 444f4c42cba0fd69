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

// Closed-form constants of the cell-shifting arguments: the geometric radii
// R1, R2, R, the measure constants S, the contraction factor gamma(m) and the
// final Hardy constants, all evaluated in the log2 domain.

#ifndef HARDY_CONSTANTS_HPP_
#define HARDY_CONSTANTS_HPP_

#include <optional>
#include <string>

namespace hardy {

enum class Regime { kHalfSpace, kSubcritical, kSupercritical };
enum class Direction { kOutward, kInward };

std::string to_string(Regime regime);
std::string to_string(Direction direction);
Regime parse_regime(const std::string& name);

// Tolerance used to decide on which side of a critical line a point lies.
inline constexpr double kRegimeTolerance = 1e-12;
// m_min is the least m with log2 gamma(m) < -kGammaTolerance.
inline constexpr double kGammaTolerance = 1e-12;

struct HardyParams {
  int n = 1;
  double p = 2.0;
  double s = 0.5;
  double alpha = 0.0;

  int Q() const { return 2 * n + 2; }
  double sp() const { return s * p; }
  // Throws UsageError unless n >= 1, p >= 1, 0 < s < 1, alpha >= 0.
  void validate() const;
};

struct RegimeFlags {
  bool half_space = false;     // sp > 1 and alpha >= (Q - 2 + sp)/2
  bool subcritical = false;    // sp + alpha < Q - 2
  bool supercritical = false;  // sp + alpha > Q - 2
};

RegimeFlags classify(const HardyParams& params);

// Throws RegimeError naming the violated inequality.
void require_regime(const HardyParams& params, Regime regime);

// The direction of the cell comparison used by a whole-space regime.
Direction direction_for(Regime regime);

struct HalfSpaceConstants {
  double R1;
  double R2;
  double S;
  double log2_S;
};

HalfSpaceConstants half_space_constants(int n, int m);

struct WholeSpaceConstants {
  double R;
  double S;
  double log2_S;
};

// |B_2n(0,2) \ B_2n(0,1)| = (2^{2n} - 1) pi^n / n!.
double annulus_volume(int n);
// pi^n / n!, the volume of the unit ball of R^{2n}.
double unit_ball_volume(int n);

WholeSpaceConstants whole_space_constants(int n, int m, Direction direction);

// log2 of gamma(m) for the given regime (no regime check).
double log2_gamma(const HardyParams& params, Regime regime, int m);

// Smallest m >= 1 with gamma(m) < 1, by linear search.
int minimal_m(const HardyParams& params, Regime regime);
// The same value from the closed-form root of gamma(m) = 1.
int minimal_m_closed_form(const HardyParams& params, Regime regime);

struct ContractionSchedule {
  Regime regime = Regime::kHalfSpace;
  int m_min = 1;
  // The m actually used (m_min unless overridden upward).
  int m = 1;
  double gamma = 0.0;
  double log2_gamma = 0.0;
  double pointwise_constant = 0.0;
  double log2_pointwise_constant = 0.0;
  double C_final = 0.0;
  double log2_C_final = 0.0;
  double annulus_coefficient = 0.0;
  // R1, R2 are set for the half space, R for the whole space.
  double R1 = 0.0;
  double R2 = 0.0;
  double R = 0.0;
  double S = 0.0;
};

// Throws RegimeError outside the regime and UsageError when the override is
// below m_min.
ContractionSchedule contraction_schedule(const HardyParams& params,
                                         Regime regime,
                                         std::optional<int> m = std::nullopt);

// log2 of the pointwise constant 2^{p+1} R1^{Q+sp} R2^alpha / S (half space)
// or 2^{p+1} R^{Q+sp+alpha} / S (whole space) at a given m >= 1.
double log2_pointwise_property_constant(const HardyParams& params,
                                        Regime regime, int m);
double pointwise_property_constant(const HardyParams& params, Regime regime,
                                   int m);

}  // namespace hardy

#endif  // HARDY_CONSTANTS_HPP_
