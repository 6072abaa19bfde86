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

#include "mublab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "mublab/number_theory.hpp"

namespace mublab {
namespace {

constexpr double kPi = std::numbers::pi;

Complex root_of_unity(std::size_t d, std::size_t power) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(power % d) / static_cast<double>(d));
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

Basis shift_basis_from_vector(const CVec& seed, double tol) {
  const auto d = static_cast<std::size_t>(seed.size());
  if (d == 0) throw std::invalid_argument("shift_basis_from_vector: empty seed");
  if (!is_state(seed, tol)) {
    throw std::invalid_argument("shift_basis_from_vector: seed is not normalized (norm " +
                                format_number(seed.norm()) + ")");
  }
  const Basis fourier = fourier_basis(d);
  double worst = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    worst = std::max(worst, std::abs(overlap_mag2(fourier.state(j), seed) - 1.0 / static_cast<double>(d)));
  }
  if (worst > tol) {
    throw std::invalid_argument(
        "shift_basis_from_vector: seed is not unbiased to the Fourier basis (worst overlap defect " +
        format_number(worst) + ")");
  }

  const auto n = static_cast<Eigen::Index>(d);
  CMat rows(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index m = 0; m < n; ++m) rows(k, (m + k) % n) = seed[m];
  }
  return Basis(std::move(rows), "shift");
}

CVec qr_seed_3mod4(int p) {
  const ResidueClasses classes = quadratic_residues(p);
  if (p % 4 != 3) throw std::invalid_argument("qr_seed_3mod4: p must be 3 mod 4");
  const double pd = p;
  const Complex alpha = Complex(-(pd - 1.0), 2.0 * std::sqrt(pd)) / (pd + 1.0);
  const double scale = 1.0 / std::sqrt(pd);
  CVec seed(p);
  for (int m = 0; m < p; ++m) seed[m] = scale * (classes.is_residue(m) ? alpha : Complex(1.0));
  return seed;
}

CVec qr_seed_1mod4(int p) {
  const ResidueClasses classes = quadratic_residues(p);
  if (p % 4 != 1) throw std::invalid_argument("qr_seed_1mod4: p must be 1 mod 4");
  const double pd = p;
  const double cos_t = (std::sqrt(pd) - 1.0) / (pd - 1.0);
  const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
  const Complex z0(cos_t, sin_t);
  const double scale = 1.0 / std::sqrt(pd);
  CVec seed(p);
  seed[0] = scale;
  for (int m = 1; m < p; ++m) seed[m] = scale * (classes.is_residue(m) ? z0 : std::conj(z0));
  return seed;
}

Basis qr_basis_3mod4(int p) {
  Basis b = shift_basis_from_vector(qr_seed_3mod4(p));
  return Basis(b.matrix(), "qr3mod4(p=" + std::to_string(p) + ")");
}

Basis qr_basis_1mod4(int p) {
  Basis b = shift_basis_from_vector(qr_seed_1mod4(p));
  return Basis(b.matrix(), "qr1mod4(p=" + std::to_string(p) + ")");
}

MubSet qr_triple(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("qr_triple: " + std::to_string(p) + " is not an odd prime");
  }
  const auto d = static_cast<std::size_t>(p);
  Basis third = (p % 4 == 3) ? qr_basis_3mod4(p) : qr_basis_1mod4(p);
  return MubSet({identity_basis(d), fourier_basis(d), std::move(third)},
                "qr-triple(p=" + std::to_string(p) + ")");
}

WhOperator WhOperator::clock(std::size_t d) {
  if (d < 2) throw std::invalid_argument("WhOperator: dimension must be >= 2");
  return WhOperator(d, 1, true);
}

WhOperator WhOperator::shift_clock(std::size_t d, std::size_t z_power) {
  if (d < 2) throw std::invalid_argument("WhOperator: dimension must be >= 2");
  return WhOperator(d, z_power % d, false);
}

CMat WhOperator::matrix() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  CMat m = CMat::Zero(n, n);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    if (pure_clock_) {
      m(col, col) = root_of_unity(dim_, j);
    } else {
      // X Z^k |j> = omega^{kj} |j+1>
      m((col + 1) % n, col) = root_of_unity(dim_, z_power_ * j);
    }
  }
  return m;
}

std::string WhOperator::name() const {
  if (pure_clock_) return "Z";
  if (z_power_ == 0) return "X";
  if (z_power_ == 1) return "XZ";
  return "XZ^" + std::to_string(z_power_);
}

Basis eigenbasis_of_unitary(const CMat& unitary, std::string label) {
  const Eigen::Index n = unitary.rows();
  Eigen::ComplexSchur<CMat> schur(unitary);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("eigenbasis_of_unitary: Schur decomposition failed");
  }
  const CMat& t = schur.matrixT();
  const CMat& q = schur.matrixU();
  // For a normal matrix T is diagonal and the Schur vectors are an
  // orthonormal eigenbasis, degenerate eigenspaces included.
  const double off_diagonal = (t - CMat(t.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  if (off_diagonal > 1e-10) {
    throw std::runtime_error("eigenbasis_of_unitary: matrix is not normal (Schur off-diagonal " +
                             format_number(off_diagonal) + ")");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  auto phase_of = [&](Eigen::Index i) {
    const double a = std::arg(t(i, i));
    return a < -1e-12 ? a + 2.0 * kPi : std::max(a, 0.0);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return phase_of(a) < phase_of(b); });

  CMat rows(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    rows.row(k) = fix_global_phase(q.col(order[static_cast<std::size_t>(k)])).transpose();
  }

  const double eigen_residual = (unitary * rows.transpose() - rows.transpose() * CMat(t.diagonal()(order).asDiagonal())).cwiseAbs().maxCoeff();
  Basis basis(std::move(rows), std::move(label));
  if (orthonormality_defect(basis) > 1e-10 || eigen_residual > 1e-10) {
    throw std::runtime_error("eigenbasis_of_unitary: numerical eigendecomposition failure");
  }
  return basis;
}

Basis wh_eigenbasis(const WhOperator& op) {
  if (op.is_pure_clock()) return Basis(identity_basis(op.dim()).matrix(), "eig(Z)");
  if (op.z_power() == 0) return Basis(fourier_basis(op.dim()).matrix(), "eig(X)");
  return eigenbasis_of_unitary(op.matrix(), "eig(" + op.name() + ")");
}

std::size_t wh_candidate_size(std::size_t d) {
  if (d < 2) throw std::invalid_argument("wh_candidate_size: dimension must be >= 2");
  return static_cast<std::size_t>(smallest_prime_factor(d)) + 1;
}

MubSet wh_candidate_set(std::size_t d) {
  const std::size_t xi = wh_candidate_size(d);
  std::vector<Basis> bases;
  bases.reserve(xi);
  bases.push_back(wh_eigenbasis(WhOperator::clock(d)));
  for (std::size_t k = 0; k + 1 < xi; ++k) bases.push_back(wh_eigenbasis(WhOperator::shift_clock(d, k)));
  MubSet set(std::move(bases), "wh-set(d=" + std::to_string(d) + ")");
  const ValidationReport report = validate_mub_set(set);
  if (!report.ok) {
    throw std::runtime_error("wh_candidate_set: eigenbases are not mutually unbiased (defect " +
                             format_number(report.worst_unbiasedness_defect) + ")");
  }
  return set;
}

bool is_dim4_extendible_case(double a, double tol) { return std::abs(a - kPi / 2.0) <= tol; }

MubSet dim4_triple(double a, double b) {
  if (!(a >= 0.0 && a < kPi) || !(b >= 0.0 && b < kPi)) {
    throw std::invalid_argument("dim4_triple: parameters must lie in [0, pi)");
  }
  const Complex i(0.0, 1.0);
  const Complex ea = std::polar(1.0, a);
  const Complex eb = std::polar(1.0, b);

  CMat b2(4, 4);
  b2 << 1.0, 1.0, 1.0, 1.0,
        1.0, i, -1.0, -i,
        1.0, -1.0, 1.0, -1.0,
        1.0, -i, -1.0, i;
  CMat b3(4, 4);
  b3 << 1.0, ea, 1.0, -ea,
        1.0, -ea, 1.0, ea,
        1.0, eb, -1.0, eb,
        1.0, -eb, -1.0, -eb;
  b2 *= 0.5;
  b3 *= 0.5;

  std::string label = "dim4-triple(a=" + format_number(a) + ",b=" + format_number(b) + ")";
  if (is_dim4_extendible_case(a)) label += " extendible case";
  return MubSet({Basis(CMat::Identity(4, 4), "B1"), Basis(std::move(b2), "B2"), Basis(std::move(b3), "B3")},
                std::move(label));
}

Basis s6_basis() {
  const Complex w = root_of_unity(3, 1);
  const Complex w2 = root_of_unity(3, 2);
  CMat s(6, 6);
  s << 1.0, 1.0, 1.0, 1.0, 1.0, 1.0,
       1.0, 1.0, w, w, w2, w2,
       1.0, w, 1.0, w2, w2, w,
       1.0, w, w2, 1.0, w, w2,
       1.0, w2, w2, w, 1.0, w,
       1.0, w2, w, w2, w, 1.0;
  s /= std::sqrt(6.0);
  return Basis(std::move(s), "S6");
}

MubSet s6_pair() { return MubSet({identity_basis(6), s6_basis()}, "s6-pair"); }

MubSet pauli_triple() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  CMat y(2, 2);
  y << h, h * i,
       h, -h * i;
  return MubSet({Basis(CMat::Identity(2, 2), "sigma_z"), Basis(fourier_basis(2).matrix(), "sigma_x"),
                 Basis(std::move(y), "sigma_y")},
                "pauli-triple");
}

MubSet fourier_complete_set(std::size_t d) {
  if (d != 2 && d != 3 && d != 5) {
    throw std::invalid_argument("fourier_complete_set: supported dimensions are 2, 3 and 5");
  }
  std::vector<Basis> bases{identity_basis(d), fourier_basis(d)};
  for (std::size_t k = 1; k < d; ++k) bases.push_back(wh_eigenbasis(WhOperator::shift_clock(d, k)));
  MubSet set(std::move(bases), "complete-set(d=" + std::to_string(d) + ")");
  if (!validate_mub_set(set).ok) throw std::runtime_error("fourier_complete_set: validation failed");
  return set;
}

}  // namespace mublab
