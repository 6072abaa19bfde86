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

#include "mublab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mublab {

Basis::Basis(CMat rows, std::string label) : rows_(std::move(rows)), label_(std::move(label)) {
  if (rows_.rows() == 0 || rows_.rows() != rows_.cols()) {
    throw std::invalid_argument("Basis: matrix must be square and non-empty, got " +
                                std::to_string(rows_.rows()) + "x" + std::to_string(rows_.cols()));
  }
}

MubSet::MubSet(std::vector<Basis> bases, std::string label)
    : bases_(std::move(bases)), label_(std::move(label)) {
  if (bases_.empty()) throw std::invalid_argument("MubSet: at least one basis is required");
  const std::size_t d = bases_.front().dim();
  for (std::size_t i = 1; i < bases_.size(); ++i) {
    if (bases_[i].dim() != d) {
      throw std::invalid_argument("MubSet: basis " + std::to_string(i) + " has dimension " +
                                  std::to_string(bases_[i].dim()) + ", expected " +
                                  std::to_string(d));
    }
  }
}

MubSet MubSet::with(Basis extra) const {
  auto bases = bases_;
  bases.push_back(std::move(extra));
  return MubSet(std::move(bases), label_);
}

Basis identity_basis(std::size_t d) {
  if (d == 0) throw std::domain_error("identity_basis: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  return Basis(CMat::Identity(n, n), "identity");
}

Basis fourier_basis(std::size_t d) {
  if (d == 0) throw std::domain_error("fourier_basis: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  CMat f(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index m = 0; m < n; ++m) {
      // reduce the exponent first so large d keeps full accuracy
      const auto e = static_cast<double>((j * m) % n);
      f(j, m) = std::polar(scale, 2.0 * std::numbers::pi * e / static_cast<double>(d));
    }
  }
  return Basis(std::move(f), "fourier");
}

double overlap_mag2(const CVec& u, const CVec& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("overlap_mag2: dimension mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  }
  return std::norm(u.dot(v));
}

Eigen::MatrixXd overlap_table(const Basis& a, const Basis& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("overlap_table: dimension mismatch");
  const CMat gram = a.matrix().conjugate() * b.matrix().transpose();
  return gram.cwiseAbs2();
}

double orthonormality_defect(const Basis& b) {
  const auto n = static_cast<Eigen::Index>(b.dim());
  const CMat gram = b.matrix() * b.matrix().adjoint();
  return (gram - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
}

double unbiasedness_defect(const Basis& a, const Basis& b) {
  const double target = 1.0 / static_cast<double>(a.dim());
  return (overlap_table(a, b).array() - target).abs().maxCoeff();
}

bool are_mutually_unbiased(const Basis& a, const Basis& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("are_mutually_unbiased: tolerance must be positive");
  return unbiasedness_defect(a, b) <= tol;
}

ValidationReport validate_mub_set(const MubSet& set, double tol) {
  if (set.empty()) throw std::invalid_argument("validate_mub_set: empty set");
  ValidationReport report;
  report.tolerance = tol;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double defect = orthonormality_defect(set[i]);
    report.worst_orthonormality_defect = std::max(report.worst_orthonormality_defect, defect);
    if (!(defect <= tol)) report.non_orthonormal_bases.push_back(i);
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const double defect = unbiasedness_defect(set[i], set[j]);
      report.worst_unbiasedness_defect = std::max(report.worst_unbiasedness_defect, defect);
      if (!(defect <= tol)) report.biased_pairs.emplace_back(i, j);
    }
  }
  report.ok = report.worst_orthonormality_defect <= tol && report.worst_unbiasedness_defect <= tol;
  return report;
}

MubSet standardize_set(const MubSet& set) {
  const CMat first_adjoint = set[0].matrix().adjoint();
  std::vector<Basis> out;
  out.reserve(set.size());
  for (const auto& b : set.bases()) out.emplace_back(b.matrix() * first_adjoint, b.label());
  return MubSet(std::move(out), set.label());
}

bool is_real_hadamard(const Basis& b, double tol) {
  const double modulus = 1.0 / std::sqrt(static_cast<double>(b.dim()));
  const CMat& m = b.matrix();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (std::abs(z.imag()) > tol || std::abs(std::abs(z) - modulus) > tol) return false;
  }
  return true;
}

Basis transform(const Basis& b, const CMat& unitary) {
  if (unitary.rows() != static_cast<Eigen::Index>(b.dim()) || unitary.cols() != unitary.rows()) {
    throw std::invalid_argument("transform: unitary has wrong shape");
  }
  return Basis(b.matrix() * unitary.transpose(), b.label());
}

MubSet transform(const MubSet& set, const CMat& unitary) {
  std::vector<Basis> out;
  out.reserve(set.size());
  for (const auto& b : set.bases()) out.push_back(transform(b, unitary));
  return MubSet(std::move(out), set.label());
}

bool is_state(const CVec& v, double tol) { return v.size() > 0 && std::abs(v.norm() - 1.0) <= tol; }

CVec fix_global_phase(const CVec& v) {
  if (v.size() == 0) return v;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return v;
  Eigen::Index pivot = 0;
  while (std::abs(v[pivot]) < 0.5 * largest) ++pivot;
  const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
  CVec out = v * phase;
  out[pivot] = Complex(out[pivot].real(), 0.0);
  return out;
}

}  // namespace mublab
