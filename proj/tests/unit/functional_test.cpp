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

#include <array>
#include <cmath>

#include "grid_oracle.hpp"
#include "hardy/error.hpp"
#include "hardy/functional.hpp"
#include "hardy/verify.hpp"

namespace hardy {
namespace {

TestFunction bump(std::array<double, 3> c, std::array<double, 3> r,
                  SupportDomain d) {
  return make_bump(GroupPoint::from_coords(c), r, d);
}

McConfig config(std::int64_t samples, std::uint64_t seed) {
  McConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

TEST(BumpTest, ProfileAndLipschitzConstant) {
  EXPECT_DOUBLE_EQ(bump_profile(0.0), 1.0);
  EXPECT_EQ(bump_profile(1.0), 0.0);
  EXPECT_EQ(bump_profile(-1.5), 0.0);
  EXPECT_NEAR(bump_profile(0.5), std::exp(1.0 - 4.0 / 3.0), 1e-15);
  // Maximum of |psi'| located by a 2e6-point scan.
  EXPECT_NEAR(bump_profile_lipschitz(), 2.1703570857102563, 1e-12);
}

TEST(BumpTest, EvaluationAndSupport) {
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  std::array<double, 3> c = {0.5, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(f(GroupPoint::from_coords(c)), 1.0);
  c = {0.5, 0.1, 0.0};
  EXPECT_NEAR(f(GroupPoint::from_coords(c)), std::exp(1.0 - 4.0 / 3.0), 1e-15);
  c = {0.71, 0.0, 0.0};
  EXPECT_EQ(f(GroupPoint::from_coords(c)), 0.0);
  EXPECT_TRUE(f.is_bump());
  EXPECT_DOUBLE_EQ(f.support().x1().lo, 0.3);
}

TEST(BumpTest, DomainRestrictions) {
  EXPECT_THROW(
      bump({0.1, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1),
      DomainError);
  EXPECT_THROW(
      bump({0.1, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kAwayFromAxis),
      DomainError);
  EXPECT_NO_THROW(
      bump({0.1, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kWhole));
  EXPECT_THROW(
      bump({1.0, 0.0, 0.0}, {0.2, -0.2, 0.1}, SupportDomain::kWhole),
      UsageError);
}

TEST(BumpTest, ParseGrammar) {
  const TestFunction f =
      parse_bump("0.5,0,0:0.2,0.2,0.1", SupportDomain::kHalfSpaceX1);
  EXPECT_EQ(f.n(), 1);
  EXPECT_DOUBLE_EQ(f.support().t().hi, 0.1);
  EXPECT_THROW(parse_bump("0.5,0,0", SupportDomain::kWhole), UsageError);
  EXPECT_THROW(parse_bump("0.5,0,0:0.2,0.2", SupportDomain::kWhole),
               UsageError);
  EXPECT_THROW(parse_bump("0.5,x,0:0.2,0.2,0.1", SupportDomain::kWhole),
               UsageError);
  EXPECT_EQ(parse_bump("1,0,0,0,0:0.5,0.5,0.5,0.5,0.5", SupportDomain::kWhole)
                .n(),
            2);
}

TEST(BumpTest, DilationAndTranslation) {
  const TestFunction f =
      bump({0.5, 0.2, 0.1}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const TestFunction g = dilate_bump(f, 2.0, SupportDomain::kHalfSpaceX1);
  std::array<double, 3> c = {0.6, 0.3, 0.05};
  const GroupPoint xi = GroupPoint::from_coords(c);
  EXPECT_NEAR(g(dilate(2.0, xi)), f(xi), 1e-15);
  const TestFunction h = translate_bump_t(f, 3.0, SupportDomain::kHalfSpaceX1);
  c = {0.6, 0.3, 3.05};
  EXPECT_NEAR(h(GroupPoint::from_coords(c)), f(xi), 1e-13);
}

TEST(WeightedLpTest, HalfSpaceMatchesGridQuadrature) {
  const testing::GridBump gb{{0.5, 0.1, 0.0}, {0.2, 0.2, 0.1}};
  const TestFunction f = bump(gb.center, gb.radii, SupportDomain::kHalfSpaceX1);
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const double ref = testing::grid_weighted_lp(gb, 4.0, 0.3, 1.8,
                                               testing::GridWeight::kHalfSpace, 64);
  EXPECT_NEAR(ref,
              testing::grid_weighted_lp(gb, 4.0, 0.3, 1.8,
                                        testing::GridWeight::kHalfSpace, 48),
              1e-6 * ref);
  const Estimate e = weighted_lp(f, q, LpDomain::kHalfSpaceX1, config(200000, 5));
  EXPECT_NEAR(e.mean, ref, 3.0 * e.std_error);
}

TEST(WeightedLpTest, WholeSpaceMatchesGridQuadrature) {
  const testing::GridBump gb{{1.0, 0.0, 0.0}, {0.4, 0.4, 0.5}};
  const TestFunction f = bump(gb.center, gb.radii, SupportDomain::kAwayFromAxis);
  const double ref = testing::grid_weighted_lp(gb, 2.0, 0.25, 0.25,
                                               testing::GridWeight::kWhole, 64);
  const Estimate e = weighted_lp(f, {1, 2.0, 0.25, 0.25}, LpDomain::kWhole,
                                 config(200000, 6));
  EXPECT_NEAR(e.mean, ref, 3.0 * e.std_error);
}

TEST(WeightedLpTest, DilationScaling) {
  // weighted_lp(f o D_{1/r}) = r^{Q - sp - alpha} weighted_lp(f).
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const TestFunction f =
      bump({0.5, 0.1, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const double r = 2.5;
  const TestFunction g = dilate_bump(f, r, SupportDomain::kHalfSpaceX1);
  const Estimate a = weighted_lp(f, q, LpDomain::kHalfSpaceX1, config(100000, 1));
  const Estimate b = weighted_lp(g, q, LpDomain::kHalfSpaceX1, config(100000, 2));
  const double scale = std::pow(r, 4.0 - 1.2 - 1.8);
  EXPECT_NEAR(b.mean / scale, a.mean,
              3.0 * std::hypot(a.std_error, b.std_error / scale));
}

TEST(WeightedLpTest, WholeSpaceSupportMustAvoidAxis) {
  const TestFunction f =
      bump({0.1, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kWhole);
  EXPECT_THROW(weighted_lp(f, {1, 2.0, 0.25, 0.25}, LpDomain::kWhole,
                           config(1000, 1)),
               DomainError);
}

TEST(SeminormTest, WholeSpaceMatchesGridQuadrature) {
  const testing::GridBump gb{{0.5, 0.8, 0.3}, {0.3, 0.25, 0.6}};
  const TestFunction f = bump(gb.center, gb.radii, SupportDomain::kAwayFromAxis);
  const double ref = testing::grid_seminorm_p2(gb, 0.25, 0.25,
                                               {32, 3, 24, 0.25, 10.0});
  const SeminormEstimate e = gagliardo_seminorm(
      f, {1, 2.0, 0.25, 0.25}, PairDomain::kWhole, config(400000, 3));
  EXPECT_TRUE(e.near_diagonal_finite);
  EXPECT_NEAR(e.near_diagonal_exponent, 1.25, 1e-15);
  EXPECT_LT(e.remainder_upper, 1e-3 * ref);
  EXPECT_NEAR(e.truncated.mean, ref, 3.0 * e.truncated.std_error);
}

TEST(SeminormTest, DivergentParametersAreFlagged) {
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const SeminormEstimate e = gagliardo_seminorm(
      f, {1, 2.0, 0.75, 1.75}, PairDomain::kHalfSpaceX1, config(10000, 3));
  EXPECT_FALSE(e.near_diagonal_finite);
  EXPECT_TRUE(std::isinf(e.remainder_upper));
  EXPECT_GT(e.truncated.mean, 0.0);
}

TEST(SeminormTest, RefusesAlphaAtLeastQMinusTwo) {
  const TestFunction f =
      bump({1.0, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kAwayFromAxis);
  EXPECT_THROW(gagliardo_seminorm(f, {1, 2.0, 0.5, 2.0}, PairDomain::kWhole,
                                  config(1000, 1)),
               RegimeError);
}

TEST(SeminormTest, ThreadCountDoesNotChangeResult) {
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  McConfig a = config(20000, 8);
  McConfig b = a;
  b.threads = 4;
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const SeminormEstimate ea = gagliardo_seminorm(f, q, PairDomain::kHalfSpaceX1, a);
  const SeminormEstimate eb = gagliardo_seminorm(f, q, PairDomain::kHalfSpaceX1, b);
  EXPECT_EQ(ea.truncated.mean, eb.truncated.mean);
  EXPECT_EQ(ea.truncated.std_error, eb.truncated.std_error);
}

TEST(QuotientTest, ZeroFunctionIsUndefined) {
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  EXPECT_THROW(hardy_quotient(TestFunction::zero(f.support()),
                              {1, 4.0, 0.3, 1.8}, LpDomain::kHalfSpaceX1,
                              config(1000, 1)),
               UndefinedQuotientError);
}

TEST(QuotientTest, BelowFinalConstant) {
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const QuotientEstimate e =
      hardy_quotient(f, q, LpDomain::kHalfSpaceX1, config(50000, 4));
  EXPECT_GT(e.quotient.mean, 0.0);
  EXPECT_LE(e.quotient.mean + 3 * e.quotient.std_error,
            contraction_schedule(q, Regime::kHalfSpace).C_final);
  EXPECT_NEAR(e.quotient.mean, e.lhs.mean / e.seminorm.truncated.mean,
              1e-12 * e.quotient.mean);
}

TEST(McConfigTest, Validation) {
  McConfig cfg;
  cfg.samples = 999;
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg.samples = 1000;
  cfg.inner_mass = 1.0;
  EXPECT_THROW(cfg.validate(), UsageError);
}

TEST(ExceptionalSetTest, LargeMMakesConclusiveNonMembers) {
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const int m = contraction_schedule(q, Regime::kHalfSpace).m_min;
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const ExceptionalFamily fam = ExceptionalFamily::half_space(1.0, 1, m);
  std::array<double, 3> c = {0.55, 0.05, 0.02};
  const Membership mem = exceptional_membership(
      f, GroupPoint::from_coords(c), q, fam, config(20000, 2));
  EXPECT_TRUE(mem.conclusive);
  EXPECT_FALSE(mem.member);
  c = {1.5, 0.0, 0.0};
  EXPECT_THROW(exceptional_membership(f, GroupPoint::from_coords(c), q, fam,
                                      config(1000, 2)),
               DomainError);
}

TEST(ExceptionalSetTest, PointwiseSweepHolds) {
  const HardyParams q{1, 4.0, 0.3, 1.8};
  const int m = contraction_schedule(q, Regime::kHalfSpace).m_min;
  const TestFunction f =
      bump({0.5, 0.0, 0.0}, {0.2, 0.2, 0.1}, SupportDomain::kHalfSpaceX1);
  const PointwiseSweep sweep = sweep_pointwise(
      f, q, Regime::kHalfSpace, m, ExceptionalFamily::half_space(1.0, 1, m), 5,
      50, config(5000, 12));
  EXPECT_TRUE(sweep.complete);
  EXPECT_TRUE(sweep.passed);
  EXPECT_EQ(sweep.holds, 5);
}

}  // namespace
}  // namespace hardy
