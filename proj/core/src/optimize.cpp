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

#include "hardy/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardy/error.hpp"

namespace hardy {

MinimizeResult pattern_search(const Objective& f, std::vector<double> start,
                              double initial_step, double min_step,
                              int max_evaluations) {
  if (max_evaluations < 1) {
    throw UsageError("pattern search needs a positive evaluation budget");
  }
  if (!(initial_step > 0.0) || !(min_step > 0.0)) {
    throw UsageError("pattern search steps must be positive");
  }
  MinimizeResult best{start, f(start), 1};
  double step = initial_step;
  std::vector<double> trial = best.x;
  while (step >= min_step && best.evaluations < max_evaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < best.x.size() && !improved; ++i) {
      for (double sign : {1.0, -1.0}) {
        if (best.evaluations >= max_evaluations) break;
        trial = best.x;
        trial[i] += sign * step;
        const double v = f(trial);
        ++best.evaluations;
        if (v < best.value) {
          best.value = v;
          best.x = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

namespace {

struct Vertex {
  std::vector<double> x;
  double value;
};

}  // namespace

MinimizeResult nelder_mead(const Objective& f, std::vector<double> start,
                           const SimplexOptions& options) {
  const std::size_t dim = start.size();
  if (options.max_evaluations < 0) {
    throw UsageError("simplex budget must be non-negative");
  }
  if (options.initial_step.size() != dim || options.lower.size() != dim ||
      options.upper.size() != dim) {
    throw UsageError("simplex step and bounds must match the start dimension");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(options.lower[i] <= options.upper[i])) {
      throw UsageError("simplex parameter box is empty");
    }
  }
  auto clamp = [&](std::vector<double> x) {
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = std::clamp(x[i], options.lower[i], options.upper[i]);
    }
    return x;
  };

  start = clamp(std::move(start));
  MinimizeResult result{start, f(start), 1};
  int budget = options.max_evaluations;
  auto evaluate = [&](const std::vector<double>& x) {
    const double v = f(x);
    --budget;
    ++result.evaluations;
    if (v < result.value) {
      result.value = v;
      result.x = x;
    }
    return v;
  };

  std::vector<Vertex> simplex;
  simplex.push_back({start, result.value});
  for (std::size_t i = 0; i < dim && budget > 0; ++i) {
    std::vector<double> x = start;
    x[i] += options.initial_step[i];
    if (x[i] > options.upper[i]) x[i] = start[i] - options.initial_step[i];
    x = clamp(std::move(x));
    simplex.push_back({x, evaluate(x)});
  }
  if (simplex.size() != dim + 1) return result;

  auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.value < b.value;
  };
  auto affine = [&](const std::vector<double>& from,
                    const std::vector<double>& to, double coeff) {
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = from[i] + coeff * (to[i] - from[i]);
    return clamp(std::move(x));
  };

  while (budget > 0) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= double(dim);
    Vertex& worst = simplex.back();

    const auto xr = affine(centroid, worst.x, -options.reflection);
    const double fr = evaluate(xr);
    if (fr < simplex.front().value) {
      if (budget == 0) {
        worst = {xr, fr};
        break;
      }
      const auto xe = affine(centroid, worst.x, -options.expansion);
      const double fe = evaluate(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[dim - 1].value) {
      worst = {xr, fr};
      continue;
    }
    if (budget == 0) break;
    const bool outside = fr < worst.value;
    const auto xc = outside ? affine(centroid, xr, options.contraction)
                            : affine(centroid, worst.x, options.contraction);
    const double fc = evaluate(xc);
    if (fc < std::min(fr, worst.value)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t v = 1; v <= dim && budget > 0; ++v) {
      simplex[v].x = affine(simplex.front().x, simplex[v].x, options.shrink);
      simplex[v].value = evaluate(simplex[v].x);
    }
  }
  return result;
}

}  // namespace hardy
