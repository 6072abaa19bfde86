// Copyright 2026 The mublab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mublab/sphere_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mublab {

CVec project_to_tangent(const CVec& point, const CVec& gradient) {
  const double radial = point.dot(gradient).real();
  return gradient - radial * point;
}

SphereResult minimize_on_sphere(const SphereObjective& objective, const CVec& start,
                                const SphereOptions& options, std::vector<double>* trace) {
  const double start_norm = start.norm();
  if (!(start_norm > 0.0)) throw std::invalid_argument("minimize_on_sphere: zero start vector");

  SphereResult result;
  CVec x = start / start_norm;
  CVec raw_gradient(x.size());
  double f = objective(x, &raw_gradient);
  CVec g = project_to_tangent(x, raw_gradient);
  double g_norm = g.norm();
  if (trace) trace->push_back(f);

  double step = g_norm > 0.0 ? 0.1 / g_norm : 1.0;
  CVec x_trial(x.size());
  CVec trial_gradient(x.size());

  std::size_t it = 0;
  for (; it < options.max_iterations; ++it) {
    if (g_norm <= options.gradient_tolerance) {
      result.converged = true;
      break;
    }

    bool accepted = false;
    double f_trial = f;
    double a = step;
    for (std::size_t k = 0; k <= options.max_backtracks; ++k, a *= 0.5) {
      x_trial = x - a * g;
      x_trial.normalize();
      f_trial = objective(x_trial, &trial_gradient);
      if (f_trial <= f - options.armijo_fraction * a * g_norm * g_norm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // no descent at working precision: a (numerically) stationary point
      result.converged = true;
      break;
    }

    const CVec g_new = project_to_tangent(x_trial, trial_gradient);
    const CVec s = x_trial - x;
    const double sy = s.dot(g_new - g).real();
    step = sy > 0.0 ? s.squaredNorm() / sy : 2.0 * a;
    step = std::clamp(step, 1e-12, 1e12);

    x = x_trial;
    f = f_trial;
    g = g_new;
    g_norm = g.norm();
    if (trace) trace->push_back(f);
  }
  if (it == options.max_iterations && g_norm <= options.gradient_tolerance) result.converged = true;

  result.point = std::move(x);
  result.value = f;
  result.gradient_norm = g_norm;
  result.iterations = it;
  return result;
}

}  // namespace mublab
