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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mublab/linalg.hpp"

namespace mublab {

/// Objective on C^d viewed as R^{2d}. When `gradient` is non-null it
/// receives dF/dRe(v_k) + i dF/dIm(v_k) for every k.
using SphereObjective = std::function<double(const CVec& point, CVec* gradient)>;

struct SphereOptions {
  std::size_t max_iterations = 2000;
  double gradient_tolerance = 1e-12;
  double armijo_fraction = 1e-4;
  std::size_t max_backtracks = 60;
};

struct SphereResult {
  CVec point;
  double value = 0.0;
  double gradient_norm = 0.0;
  std::size_t iterations = 0;
  /// Terminated on the gradient criterion or because no descent step
  /// exists at working precision, rather than by the iteration cap.
  bool converged = false;
};

/// Removes the radial component: g - Re<v, g> v.
CVec project_to_tangent(const CVec& point, const CVec& gradient);

/// Projected gradient descent on the unit sphere of C^d. Each step moves
/// along the negative tangent gradient, renormalizes, and backtracks until
/// the Armijo condition holds, so the objective never increases. The trial
/// step length follows the Barzilai-Borwein estimate of the previous step.
/// If `trace` is given it receives the objective after every accepted step
/// (starting with the initial value).
SphereResult minimize_on_sphere(const SphereObjective& objective, const CVec& start,
                                const SphereOptions& options, std::vector<double>* trace = nullptr);

}  // namespace mublab
