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

#include "mublab/cv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mublab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w >= kTwoPi ? 0.0 : w;
}

struct Normalized {
  double r;
  double theta;
  double s;
  double phi;
};

Normalized normalize(const CvTriple& t) {
  const CvObservable a = t.members[0].canonical();
  const CvObservable b = t.members[1].canonical();
  const CvObservable c = t.members[2].canonical();
  return {b.r / a.r, b.theta - a.theta, c.r / a.r, c.theta - a.theta};
}

}  // namespace

CvObservable CvObservable::canonical() const {
  if (r == 0.0 || !std::isfinite(r) || !std::isfinite(theta)) {
    throw std::domain_error("CvObservable: scale must be finite and nonzero");
  }
  if (r < 0.0) return {-r, wrap_angle(theta + kPi)};
  return {r, wrap_angle(theta)};
}

std::string_view to_string(CvBranch b) { return b == CvBranch::kPlus ? "+" : "-"; }

double cv_overlap(const CvObservable& a, const CvObservable& b) {
  const double s = std::abs(std::sin(a.theta - b.theta));
  if (s < 1e-14) throw std::domain_error("not unbiased: identical quadrature direction");
  return 1.0 / (kTwoPi * (std::abs(a.r) * std::abs(b.r)) * s);
}

std::pair<CvTriple, CvTriple> complete_cv_triple(double r, double theta) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("complete_cv_triple: r must be positive");
  const double sin_t = std::sin(theta);
  if (std::abs(sin_t) < 1e-14) throw std::domain_error("complete_cv_triple: theta must not be 0 or pi");

  auto build = [&](double sign, CvBranch branch) {
    const double phi = std::atan2(sign * r * sin_t, 1.0 + sign * r * std::cos(theta));
    const double s = r * std::abs(sin_t) / std::sin(phi);
    CvTriple t;
    t.members = {CvObservable{1.0, 0.0}, CvObservable{r, theta}.canonical(), CvObservable{s, phi}.canonical()};
    t.branch = branch;
    return t;
  };
  return {build(1.0, CvBranch::kPlus), build(-1.0, CvBranch::kMinus)};
}

double cv_triple_defect(const CvTriple& t) {
  const Normalized n = normalize(t);
  const double a = n.r * std::abs(std::sin(n.theta));
  const double b = n.s * std::abs(std::sin(n.phi));
  const double c = n.r * n.s * std::abs(std::sin(n.theta - n.phi));
  const double gap = std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
  return gap / std::max({1.0, a, b, c});
}

bool verify_cv_triple(const CvTriple& t, double tol) { return cv_triple_defect(t) <= tol; }

double cv_fourth_basis_residual(const CvTriple& t, const CvGridSpec& grid) {
  if (grid.nu_points < 2 || grid.t_points < 2 || !(grid.t_min > 0.0) || !(grid.t_max > grid.t_min)) {
    throw std::invalid_argument("cv_fourth_basis_residual: invalid grid");
  }
  const Normalized n = normalize(t);
  const std::array<double, 3> scale{1.0, n.r, n.s};
  const std::array<double, 3> angle{0.0, n.theta, n.phi};
  const double common = n.r * std::abs(std::sin(n.theta));

  // candidate fourth observable (exp(log_t), nu)
  auto violation = [&](double log_t, double nu) {
    const double tt = std::exp(log_t);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double product = scale[i] * tt * std::abs(std::sin(angle[i] - nu));
      worst = std::max(worst, std::abs(product / common - 1.0));
    }
    return worst;
  };
  auto excluded = [&](double nu) {
    return std::any_of(angle.begin(), angle.end(), [&](double a) { return std::abs(std::sin(a - nu)) < 1e-9; });
  };

  const double log_lo = std::log(grid.t_min * common);
  const double log_hi = std::log(grid.t_max * common);
  const double d_log = (log_hi - log_lo) / static_cast<double>(grid.t_points - 1);
  const double d_nu = kPi / static_cast<double>(grid.nu_points);

  struct Cell {
    double value;
    double log_t;
    double nu;
  };
  constexpr std::size_t kSeeds = 8;
  std::vector<Cell> best;
  for (std::size_t j = 0; j < grid.nu_points; ++j) {
    const double nu = d_nu * static_cast<double>(j);
    if (excluded(nu)) continue;
    for (std::size_t i = 0; i < grid.t_points; ++i) {
      const double log_t = log_lo + d_log * static_cast<double>(i);
      const double v = violation(log_t, nu);
      if (best.size() < kSeeds || v < best.back().value) {
        best.push_back({v, log_t, nu});
        std::sort(best.begin(), best.end(), [](const Cell& a, const Cell& b) { return a.value < b.value; });
        if (best.size() > kSeeds) best.pop_back();
      }
    }
  }
  if (best.empty()) throw std::runtime_error("cv_fourth_basis_residual: every grid direction was excluded");

  double result = best.front().value;
  for (const Cell& seed : best) {
    Cell c = seed;
    double step_t = d_log;
    double step_nu = d_nu;
    while (step_t > 1e-14 || step_nu > 1e-14) {
      bool moved = false;
      // diagonal moves let the search follow the kinks of the max
      const std::array<std::pair<double, double>, 8> moves{{{step_t, 0.0},
                                                            {-step_t, 0.0},
                                                            {0.0, step_nu},
                                                            {0.0, -step_nu},
                                                            {step_t, step_nu},
                                                            {-step_t, -step_nu},
                                                            {step_t, -step_nu},
                                                            {-step_t, step_nu}}};
      for (const auto& [dt, dn] : moves) {
        const double nu = c.nu + dn;
        if (excluded(nu)) continue;
        const double v = violation(c.log_t + dt, nu);
        if (v < c.value) {
          c = {v, c.log_t + dt, nu};
          moved = true;
        }
      }
      if (!moved) {
        step_t *= 0.5;
        step_nu *= 0.5;
      }
    }
    result = std::min(result, c.value);
  }
  return result;
}

}  // namespace mublab
