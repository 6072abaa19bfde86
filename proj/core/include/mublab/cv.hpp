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

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

namespace mublab {

// Continuous-variable quadratures r * (cos(theta) q + sin(theta) p), in units
// with hbar = 1. The eigenbases of two such operators overlap uniformly
// with |<.|.>|^2 = 1 / (2 pi r_a r_b |sin(theta_a - theta_b)|).

struct CvObservable {
  double r = 1.0;
  double theta = 0.0;

  /// r > 0 and theta in [0, 2 pi). A negative scale is folded into the
  /// angle, since -q_theta = q_{theta + pi} has the same eigenbasis.
  CvObservable canonical() const;
};

enum class CvBranch { kPlus, kMinus };

struct CvTriple {
  std::array<CvObservable, 3> members;
  CvBranch branch = CvBranch::kPlus;
};

std::string_view to_string(CvBranch b);

/// Throws std::domain_error when the two quadratures are parallel
/// (|sin(theta_a - theta_b)| < 1e-14).
double cv_overlap(const CvObservable& a, const CvObservable& b);

/// Completes {q, r q_theta} to the two triples with third member
/// (s, phi), phi = atan2(+-r sin(theta), 1 +- r cos(theta)) and
/// s = r |sin(theta)| / sin(phi), canonicalized. Throws std::domain_error
/// for r <= 0 or theta on the q axis (0 or pi modulo 2 pi).
std::pair<CvTriple, CvTriple> complete_cv_triple(double r, double theta);

/// After rotating and rescaling so the first member is (1, 0), the three
/// products r|sin theta|, s|sin phi|, r s|sin(theta - phi)| are compared.
/// Returns the largest pairwise gap divided by max(1, largest product).
double cv_triple_defect(const CvTriple& t);

bool verify_cv_triple(const CvTriple& t, double tol = 1e-12);

struct CvGridSpec {
  std::size_t nu_points = 1000;
  std::size_t t_points = 1000;
  /// Scale range for the candidate t, relative to the common product of
  /// the triple; sampled logarithmically.
  double t_min = 0.5;
  double t_max = 1000.0;
};

/// Minimum over candidate fourth observables (t, nu) of the largest
/// relative violation | t_i / P - 1 |, where t_i are the products of the
/// candidate with the three members and P the triple's common product.
/// Grid search followed by a compass refinement around the best cells.
/// Directions parallel to a member are excluded.
double cv_fourth_basis_residual(const CvTriple& t, const CvGridSpec& grid = {});

}  // namespace mublab
