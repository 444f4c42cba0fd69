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

// Derivative-free minimizers. Both are deterministic given the start and the
// evaluation budget, and a larger budget only extends the same trajectory.

#ifndef HARDY_OPTIMIZE_HPP_
#define HARDY_OPTIMIZE_HPP_

#include <functional>
#include <span>
#include <vector>

namespace hardy {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

// Compass search: polls +-step along every coordinate, moves to the first
// improving poll, and halves the step when a full sweep fails. Stops when
// the step drops below min_step or the budget is spent.
MinimizeResult pattern_search(const Objective& f, std::vector<double> start,
                              double initial_step, double min_step,
                              int max_evaluations);

struct SimplexOptions {
  int max_evaluations = 200;
  // Initial simplex: start + step[i] e_i.
  std::vector<double> initial_step;
  // Box constraints; candidates are clamped into [lower, upper].
  std::vector<double> lower;
  std::vector<double> upper;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

// Nelder-Mead with reflection, expansion, inside/outside contraction and
// shrink. The start point is evaluated first and the incumbent never gets
// worse. A budget of zero returns the start point after that one evaluation.
MinimizeResult nelder_mead(const Objective& f, std::vector<double> start,
                           const SimplexOptions& options);

}  // namespace hardy

#endif  // HARDY_OPTIMIZE_HPP_
