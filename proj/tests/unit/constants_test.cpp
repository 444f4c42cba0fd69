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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hardy/constants.hpp"
#include "hardy/error.hpp"

namespace hardy {
namespace {

constexpr double kRel = 1e-12;

void expect_rel(double actual, double expected, double rel) {
  EXPECT_NEAR(actual, expected, rel * std::abs(expected))
      << "actual " << actual << " expected " << expected;
}

TEST(ConstantsTest, HalfSpaceScheduleReference) {
  // log2 gamma = alpha log2 sqrt(2n) + p + 1 + sp + 2 alpha - (sp - 1) m
  //            = 0.875 + 2 + 1 + 1.5 + 3.5 - 0.5 m = 8.875 - 0.5 m,
  // negative first at m = 18, where it equals -0.125.
  const ContractionSchedule c =
      contraction_schedule({1, 2.0, 0.75, 1.75}, Regime::kHalfSpace);
  EXPECT_EQ(c.m_min, 18);
  EXPECT_EQ(c.m, 18);
  EXPECT_DOUBLE_EQ(c.log2_gamma, -0.125);
  expect_rel(c.gamma, 0.917004043204671, kRel);
  expect_rel(c.pointwise_constant, 434305770058.1449, kRel);
  expect_rel(c.C_final, 5232854548916.8785, kRel);
  EXPECT_EQ(c.annulus_coefficient, 0.0);
  EXPECT_NEAR(c.R1, 5.0, 1e-14);
  EXPECT_NEAR(c.R2, 2.0 * std::sqrt(2.0) + 1.0, 1e-14);
}

TEST(ConstantsTest, SecondHalfSpaceReference) {
  const ContractionSchedule c =
      contraction_schedule({1, 4.0, 0.3, 1.8}, Regime::kHalfSpace);
  EXPECT_EQ(c.m_min, 54);
  expect_rel(c.gamma, 0.933032991536807, kRel);
  expect_rel(c.C_final, 1.1763446e24, 1e-6);
}

TEST(ConstantsTest, SubcriticalReference) {
  const ContractionSchedule c =
      contraction_schedule({2, 2.0, 0.5, 0.5}, Regime::kSubcritical);
  EXPECT_EQ(c.m_min, 2);
  EXPECT_DOUBLE_EQ(c.log2_gamma, -0.5);
  expect_rel(c.gamma, std::sqrt(0.5), kRel);
  expect_rel(c.pointwise_constant, 14369947.2530, 1e-11);
  expect_rel(c.C_final, 49062068.8017, 1e-11);
  EXPECT_EQ(c.annulus_coefficient, 0.0);
}

TEST(ConstantsTest, SupercriticalReference) {
  const ContractionSchedule c =
      contraction_schedule({1, 2.0, 0.9, 1.5}, Regime::kSupercritical);
  EXPECT_EQ(c.m_min, 5);
  expect_rel(c.gamma, 0.870550563296124, kRel);
  expect_rel(c.pointwise_constant, 174300814.93, 1e-10);
  expect_rel(c.C_final, 1346477971.42, 1e-10);
  expect_rel(c.annulus_coefficient, 6.72502395887, 1e-10);
}

TEST(ConstantsTest, SecondSupercriticalReference) {
  const ContractionSchedule c =
      contraction_schedule({1, 4.0, 0.4, 0.5}, Regime::kSupercritical);
  // log2 gamma = 7.1 - 0.1 m vanishes exactly at m = 71.
  EXPECT_EQ(c.m_min, 72);
  EXPECT_NEAR(c.log2_gamma, -0.1, 1e-12);
  expect_rel(c.C_final, 4.80689e49, 1e-5);
}

TEST(ConstantsTest, CellConstants) {
  EXPECT_NEAR(annulus_volume(1), 3.0 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(annulus_volume(2), 74.02203300817, 1e-10);
  EXPECT_NEAR(unit_ball_volume(2), std::numbers::pi * std::numbers::pi / 2,
              1e-14);
  expect_rel(whole_space_constants(1, 2, Direction::kOutward).R, 14.5692823,
             1e-8);
  expect_rel(whole_space_constants(1, 2, Direction::kInward).R,
             2.0 * std::pow(11.0, 0.25), 1e-14);
  // Outward S = 2^{Q(m-1)-2m} |annulus|; inward S = 2^{2m-Q(m+1)} |annulus|.
  expect_rel(whole_space_constants(1, 3, Direction::kOutward).S,
             4.0 * 3.0 * std::numbers::pi, 1e-14);
  expect_rel(whole_space_constants(1, 3, Direction::kInward).S,
             3.0 * std::numbers::pi / 1024.0, 1e-14);
  expect_rel(half_space_constants(1, 3).S, 0.0441941738, 1e-9);
}

TEST(ConstantsTest, ClosedFormMinimalMMatchesLinearSearch) {
  for (int n : {1, 2, 3}) {
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
      for (double s : {0.1, 0.3, 0.55, 0.75, 0.9}) {
        for (double alpha : {0.0, 0.25, 0.5, 1.0, 1.6, 1.75, 2.5, 3.9}) {
          const HardyParams q{n, p, s, alpha};
          const RegimeFlags f = classify(q);
          for (Regime r : {Regime::kHalfSpace, Regime::kSubcritical,
                           Regime::kSupercritical}) {
            const bool ok = r == Regime::kHalfSpace     ? f.half_space
                            : r == Regime::kSubcritical ? f.subcritical
                                                        : f.supercritical;
            if (!ok) continue;
            EXPECT_EQ(minimal_m(q, r), minimal_m_closed_form(q, r))
                << n << " " << p << " " << s << " " << alpha;
            const int m = minimal_m(q, r);
            EXPECT_LT(log2_gamma(q, r, m), -kGammaTolerance);
            if (m > 1) EXPECT_GE(log2_gamma(q, r, m - 1), -kGammaTolerance);
          }
        }
      }
    }
  }
}

TEST(ConstantsTest, RegimeBoundariesRaise) {
  // sp = 1 exactly: half space needs sp > 1.
  EXPECT_THROW(contraction_schedule({1, 2.0, 0.5, 2.0}, Regime::kHalfSpace),
               RegimeError);
  // alpha below (Q - 2 + sp)/2 = 1.75 by more than the regime tolerance.
  EXPECT_THROW(contraction_schedule({1, 2.0, 0.75, 1.75 - 1e-9},
                                    Regime::kHalfSpace),
               RegimeError);
  // Rounding-level shortfalls count as the boundary itself.
  EXPECT_NO_THROW(contraction_schedule({1, 2.0, 0.75, std::nextafter(1.75, 0.0)},
                                       Regime::kHalfSpace));
  // sp + alpha = Q - 2 exactly.
  EXPECT_THROW(contraction_schedule({1, 2.0, 0.5, 1.0}, Regime::kSubcritical),
               RegimeError);
  EXPECT_THROW(contraction_schedule({1, 2.0, 0.5, 1.0}, Regime::kSupercritical),
               RegimeError);
  EXPECT_THROW(contraction_schedule({2, 2.0, 0.5, 3.0}, Regime::kSubcritical),
               RegimeError);
  EXPECT_THROW(contraction_schedule({2, 2.0, 0.5, 0.5}, Regime::kSupercritical),
               RegimeError);
  // The half-space boundary alpha = (Q - 2 + sp)/2 itself is admissible.
  EXPECT_NO_THROW(
      contraction_schedule({1, 2.0, 0.75, 1.75}, Regime::kHalfSpace));
}

TEST(ConstantsTest, InvalidParametersAreUsageErrors) {
  EXPECT_THROW(HardyParams({1, 0.5, 0.5, 0.0}).validate(), UsageError);
  EXPECT_THROW(HardyParams({1, 2.0, 1.0, 0.0}).validate(), UsageError);
  EXPECT_THROW(HardyParams({1, 2.0, 0.0, 0.0}).validate(), UsageError);
  EXPECT_THROW(HardyParams({1, 2.0, 0.5, -0.1}).validate(), UsageError);
  EXPECT_THROW(HardyParams({0, 2.0, 0.5, 0.0}).validate(), UsageError);
  EXPECT_THROW(parse_regime("sideways"), UsageError);
  EXPECT_EQ(parse_regime("supercritical"), Regime::kSupercritical);
}

TEST(ConstantsTest, OverrideOfM) {
  const HardyParams q{1, 2.0, 0.75, 1.75};
  EXPECT_THROW(contraction_schedule(q, Regime::kHalfSpace, 17), UsageError);
  const ContractionSchedule c = contraction_schedule(q, Regime::kHalfSpace, 20);
  EXPECT_EQ(c.m_min, 18);
  EXPECT_EQ(c.m, 20);
  EXPECT_DOUBLE_EQ(c.log2_gamma, -1.125);
  EXPECT_NEAR(c.C_final,
              pointwise_property_constant(q, Regime::kHalfSpace, 20) /
                  (1.0 - c.gamma),
              1e-12 * c.C_final);
}

TEST(ConstantsTest, DirectionOfWholeSpaceRegimes) {
  EXPECT_EQ(direction_for(Regime::kSubcritical), Direction::kOutward);
  EXPECT_EQ(direction_for(Regime::kSupercritical), Direction::kInward);
}

}  // namespace
}  // namespace hardy
