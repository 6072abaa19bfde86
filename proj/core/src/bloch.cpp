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

#include "mublab/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace mublab {

std::vector<std::string> gell_mann_labels(std::size_t d) {
  std::vector<std::string> labels;
  labels.reserve(d * d - 1);
  for (const char* family : {"S", "A"}) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        labels.push_back(std::string(family) + "(" + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  for (std::size_t l = 1; l < d; ++l) labels.push_back("D(" + std::to_string(l) + ")");
  return labels;
}

BlochVector bloch_vector(const CVec& v) {
  const auto d = static_cast<std::size_t>(v.size());
  if (d < 2) throw std::invalid_argument("bloch_vector: dimension must be >= 2");
  if (!is_state(v)) throw std::invalid_argument("bloch_vector: input is not normalized");

  const std::size_t pairs = d * (d - 1) / 2;
  BlochVector out;
  out.dim = d;
  out.coords.resize(static_cast<Eigen::Index>(d * d - 1));
  const double scale = 1.0 / std::sqrt(2.0 * (1.0 - 1.0 / static_cast<double>(d)));

  std::size_t idx = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k, ++idx) {
      // rho_jk = v_j conj(v_k)
      const Complex rho = v[static_cast<Eigen::Index>(j)] * std::conj(v[static_cast<Eigen::Index>(k)]);
      out.coords[static_cast<Eigen::Index>(idx)] = 2.0 * rho.real() * scale;
      out.coords[static_cast<Eigen::Index>(idx + pairs)] = -2.0 * rho.imag() * scale;
    }
  }
  double prefix = 0.0;
  for (std::size_t l = 1; l < d; ++l) {
    prefix += std::norm(v[static_cast<Eigen::Index>(l - 1)]);
    const double ld = static_cast<double>(l);
    const double value = std::sqrt(2.0 / (ld * (ld + 1.0))) * (prefix - ld * std::norm(v[static_cast<Eigen::Index>(l)]));
    out.coords[static_cast<Eigen::Index>(2 * pairs + l - 1)] = value * scale;
  }
  return out;
}

double bloch_angle(const CVec& u, const CVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("bloch_angle: dimension mismatch");
  const BlochVector a = bloch_vector(u);
  const BlochVector b = bloch_vector(v);
  return a.coords.dot(b.coords) / (a.coords.norm() * b.coords.norm());
}

Eigen::MatrixXd bloch_matrix(const Basis& b) {
  const auto d = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXd out(d * d - 1, d);
  for (Eigen::Index k = 0; k < d; ++k) out.col(k) = bloch_vector(b.state(static_cast<std::size_t>(k))).coords;
  return out;
}

bool simplex_check(const Basis& b) {
  const std::size_t d = b.dim();
  if (d < 2 || orthonormality_defect(b) > kDefaultTolerance) return false;
  const Eigen::MatrixXd m = bloch_matrix(b);
  const double expected = -1.0 / static_cast<double>(d - 1);
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double c = m.col(i).dot(m.col(j)) / (m.col(i).norm() * m.col(j).norm());
      if (std::abs(c - expected) > 1e-9) return false;
    }
  }
  return m.rowwise().sum().norm() <= 1e-9;
}

long complement_dimension(long d, long m) {
  if (d < 1 || m < 0) throw std::domain_error("complement_dimension: need d >= 1 and m >= 0");
  const long result = d * d - 1 - m * (d - 1);
  if (result < 0) {
    throw std::domain_error("complement_dimension: " + std::to_string(m) +
                            " bases exceed a complete set in dimension " + std::to_string(d));
  }
  return result;
}

}  // namespace mublab
