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
#include <vector>

#include "hardy/error.hpp"
#include "hardy/optimize.hpp"

namespace hardy {
namespace {

double quadratic(std::span<const double> x) {
  return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 0.5) * (x[1] + 0.5);
}

double rosenbrock(std::span<const double> x) {
  return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

TEST(PatternSearchTest, FindsQuadraticMinimum) {
  const MinimizeResult r = pattern_search(quadratic, {0.0, 0.0}, 1.0, 1e-10, 5000);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.x[1], -0.5, 1e-8);
  EXPECT_LE(r.evaluations, 5000);
}

TEST(PatternSearchTest, BudgetIsRespected) {
  const MinimizeResult r = pattern_search(quadratic, {0.0, 0.0}, 1.0, 1e-12, 7);
  EXPECT_EQ(r.evaluations, 7);
  EXPECT_THROW(pattern_search(quadratic, {0.0, 0.0}, 1.0, 1e-12, 0),
               UsageError);
}

SimplexOptions box(int budget) {
  SimplexOptions o;
  o.max_evaluations = budget;
  o.initial_step = {0.5, 0.5};
  o.lower = {-5.0, -5.0};
  o.upper = {5.0, 5.0};
  return o;
}

TEST(NelderMeadTest, SolvesRosenbrock) {
  const MinimizeResult r = nelder_mead(rosenbrock, {-1.2, 1.0}, box(4000));
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 2e-3);
  EXPECT_LT(r.value, 1e-6);
}

TEST(NelderMeadTest, ZeroBudgetReturnsStart) {
  const MinimizeResult r = nelder_mead(quadratic, {0.3, 0.2}, box(0));
  EXPECT_EQ(r.evaluations, 1);
  EXPECT_EQ(r.x, (std::vector<double>{0.3, 0.2}));
}

TEST(NelderMeadTest, LargerBudgetExtendsSameTrajectory) {
  const MinimizeResult a = nelder_mead(rosenbrock, {-1.2, 1.0}, box(30));
  const MinimizeResult b = nelder_mead(rosenbrock, {-1.2, 1.0}, box(60));
  EXPECT_LE(b.value, a.value);
  const MinimizeResult c = nelder_mead(rosenbrock, {-1.2, 1.0}, box(30));
  EXPECT_EQ(a.x, c.x);
}

TEST(NelderMeadTest, StaysInsideTheBox) {
  SimplexOptions o = box(300);
  o.lower = {2.0, -5.0};
  int outside = 0;
  const Objective f = [&](std::span<const double> x) {
    if (x[0] < 2.0) ++outside;
    return quadratic(x);
  };
  const MinimizeResult r = nelder_mead(f, {3.0, 0.0}, o);
  EXPECT_EQ(outside, 0);
  EXPECT_NEAR(r.x[0], 2.0, 1e-6);
  EXPECT_NEAR(r.x[1], -0.5, 1e-3);
}

TEST(NelderMeadTest, MismatchedOptionsAreUsageErrors) {
  SimplexOptions o = box(10);
  o.lower = {0.0};
  EXPECT_THROW(nelder_mead(quadratic, {0.0, 0.0}, o), UsageError);
}

}  // namespace
}  // namespace hardy
