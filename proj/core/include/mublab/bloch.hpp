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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mublab/linalg.hpp"

namespace mublab {

// Generalized Bloch vectors.
//
// |v><v| - I/d is expanded in the generalized Gell-Mann matrices, taken in
// this fixed order:
//
//   1. symmetric   S(j,k) = |j><k| + |k><j|           for j < k, lexicographic
//   2. antisymmetric A(j,k) = -i|j><k| + i|k><j|       for j < k, lexicographic
//   3. diagonal    D(l) = sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l|l><l|), l = 1..d-1
//
// For d = 2 this is (sigma_x, sigma_y, sigma_z). Coordinates are
// Tr(rho G) / sqrt(2 (1 - 1/d)), which puts every pure state on the unit
// sphere and gives
//
//   |<u|v>|^2 = 1/d + (1 - 1/d) cos(angle between the Bloch vectors).

struct BlochVector {
  std::size_t dim = 0;
  Eigen::VectorXd coords;  // length dim^2 - 1
};

/// Labels S(j,k) / A(j,k) / D(l) in coordinate order.
std::vector<std::string> gell_mann_labels(std::size_t d);

/// Throws std::invalid_argument for an input that is not a unit vector
/// (within 1e-10) or has dimension < 2.
BlochVector bloch_vector(const CVec& v);

/// Cosine of the angle between the Bloch vectors of u and v.
double bloch_angle(const CVec& u, const CVec& v);

/// Rows form a regular simplex: pairwise cosines -1/(d-1) and zero sum,
/// both within 1e-9. False for non-orthonormal rows.
bool simplex_check(const Basis& b);

/// Bloch vectors of the rows of b, one per column.
Eigen::MatrixXd bloch_matrix(const Basis& b);

/// d^2 - 1 - m(d-1). Throws std::domain_error when negative or m < 0.
long complement_dimension(long d, long m);

}  // namespace mublab
