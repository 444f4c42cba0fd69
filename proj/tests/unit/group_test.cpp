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

#include "hardy/error.hpp"
#include "hardy/group.hpp"
#include "hardy/verify.hpp"

namespace hardy {
namespace {

GroupPoint pt(std::initializer_list<double> c) {
  std::vector<double> v(c);
  return GroupPoint::from_coords(v);
}

TEST(GroupLawTest, HandComputedProductN1) {
  // t = 3 + 6 + 2 (2 * 4) - 2 (1 * 5) = 15.
  const GroupPoint p = group_multiply(pt({1, 2, 3}), pt({4, 5, 6}));
  EXPECT_EQ(p, pt({5, 7, 15}));
}

TEST(GroupLawTest, HandComputedProductN2) {
  // x = (1, 0), y = (0, 1), t = 0 times x' = (0, 2), y' = (3, 0), t' = 1:
  // t'' = 1 + 2 <y, x'> - 2 <x, y'> = 1 + 4 - 6 = -1.
  const GroupPoint p =
      group_multiply(pt({1, 0, 0, 1, 0}), pt({0, 2, 3, 0, 1}));
  EXPECT_EQ(p, pt({1, 2, 3, 1, -1}));
}

TEST(GroupLawTest, InverseNegatesEveryCoordinate) {
  EXPECT_EQ(group_inverse(pt({1, -2, 3.5})), pt({-1, 2, -3.5}));
  EXPECT_EQ(group_multiply(pt({1, -2, 3.5}), group_inverse(pt({1, -2, 3.5}))),
            GroupPoint(1));
}

TEST(GroupLawTest, NonCommutativeWithSymplecticCommutator) {
  const GroupPoint a = pt({1, 0, 0});
  const GroupPoint b = pt({0, 1, 0});
  // a b has t = -2, b a has t = +2.
  EXPECT_DOUBLE_EQ(group_multiply(a, b).t(), -2.0);
  EXPECT_DOUBLE_EQ(group_multiply(b, a).t(), 2.0);
  EXPECT_DOUBLE_EQ(symplectic_form(a, b), -1.0);
}

TEST(GaugeTest, ClosedFormValues) {
  EXPECT_NEAR(koranyi_gauge(pt({1, 2, 3})), 2.414736402766418, 1e-15);
  EXPECT_DOUBLE_EQ(koranyi_gauge(pt({0, 0, 9})), 3.0);
  EXPECT_DOUBLE_EQ(koranyi_gauge(pt({3, 4, 0})), 5.0);
  EXPECT_DOUBLE_EQ(koranyi_gauge(GroupPoint(2)), 0.0);
  EXPECT_DOUBLE_EQ(gauge_from(5.0, 0.0), 5.0);
}

TEST(GaugeTest, DilationScalesLayers) {
  const GroupPoint d = dilate(2.0, pt({1, 2, 3}));
  EXPECT_EQ(d, pt({2, 4, 12}));
  EXPECT_NEAR(koranyi_gauge(d), 2.0 * koranyi_gauge(pt({1, 2, 3})), 1e-14);
}

TEST(GaugeTest, LeftDistanceIsGaugeOfQuotient) {
  const GroupPoint a = pt({0.3, -1.0, 2.0});
  const GroupPoint b = pt({-0.7, 0.4, 0.1});
  EXPECT_DOUBLE_EQ(left_distance(a, b),
                   koranyi_gauge(group_multiply(group_inverse(a), b)));
  EXPECT_DOUBLE_EQ(z_distance(a, b), std::hypot(1.0, 1.4));
}

TEST(GroupParamsTest, RejectsInvalidDimension) {
  EXPECT_THROW(GroupParams(0), UsageError);
  EXPECT_EQ(GroupParams(3).Q(), 8);
}

TEST(GroupSuiteTest, AxiomsHoldForSmallDimensions) {
  for (int n : {1, 2, 3}) {
    const GroupCheckReport rep = verify_group(n, 20000, 7);
    EXPECT_TRUE(rep.passed) << "n = " << n;
    EXPECT_LE(rep.associativity, 1e-12);
    EXPECT_LE(rep.left_invariance, 1e-10);
    EXPECT_EQ(rep.triangle_violations, 0);
  }
}

TEST(GroupSuiteTest, BallVolumeMatchesClosedForm) {
  // pi^n / Gamma(n) * B(n/2, 3/2): pi^2/2 for n = 1.
  const GroupCheckReport r1 = verify_group(1, 20000, 3);
  EXPECT_NEAR(r1.ball_volume_exact, M_PI * M_PI / 2.0, 1e-13);
  EXPECT_NEAR(verify_group(2, 1000, 3).ball_volume_exact, 6.5797362673929,
              1e-12);
  EXPECT_NEAR(verify_group(3, 1000, 3).ball_volume_exact, 6.08806818962515,
              1e-12);
  EXPECT_LE(std::abs(r1.ball_volume_z), 6.0);
}

TEST(GroupSuiteTest, IndependentOfThreadCount) {
  const GroupCheckReport a = verify_group(2, 10000, 5, 1);
  const GroupCheckReport b = verify_group(2, 10000, 5, 4);
  EXPECT_EQ(a.associativity, b.associativity);
  EXPECT_EQ(a.ball_volume.mean, b.ball_volume.mean);
  EXPECT_EQ(a.ball_volume.std_error, b.ball_volume.std_error);
}

}  // namespace
}  // namespace hardy
