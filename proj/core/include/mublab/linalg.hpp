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

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mublab {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Tolerance used for orthonormality and unbiasedness checks unless the
/// caller supplies one.
inline constexpr double kDefaultTolerance = 1e-10;

/// An orthonormal basis of C^d stored as a d x d matrix whose ROWS are the
/// basis states. Construction only checks the shape; use
/// orthonormality_defect() or validate_mub_set() for the unitarity check.
class Basis {
 public:
  Basis() = default;
  explicit Basis(CMat rows, std::string label = {});

  std::size_t dim() const { return static_cast<std::size_t>(rows_.rows()); }
  const CMat& matrix() const { return rows_; }
  const std::string& label() const { return label_; }

  /// Row k as a column state vector (no conjugation).
  CVec state(std::size_t k) const { return rows_.row(static_cast<Eigen::Index>(k)).transpose(); }

 private:
  CMat rows_;
  std::string label_;
};

/// Ordered list of bases in one dimension. Every basis must share the
/// dimension of the first; the set may not be empty.
class MubSet {
 public:
  MubSet() = default;
  explicit MubSet(std::vector<Basis> bases, std::string label = {});

  std::size_t dim() const { return bases_.empty() ? 0 : bases_.front().dim(); }
  std::size_t size() const { return bases_.size(); }
  bool empty() const { return bases_.empty(); }
  const std::vector<Basis>& bases() const { return bases_; }
  const Basis& operator[](std::size_t i) const { return bases_[i]; }
  const std::string& label() const { return label_; }

  /// Returns a copy with `extra` appended.
  MubSet with(Basis extra) const;

 private:
  std::vector<Basis> bases_;
  std::string label_;
};

struct ValidationReport {
  bool ok = false;
  double tolerance = kDefaultTolerance;
  double worst_orthonormality_defect = 0.0;
  /// max over basis pairs of | |<u|v>|^2 - 1/d |
  double worst_unbiasedness_defect = 0.0;
  std::vector<std::size_t> non_orthonormal_bases;
  std::vector<std::pair<std::size_t, std::size_t>> biased_pairs;
};

Basis identity_basis(std::size_t d);

/// Rows F_{jm} = omega_d^{jm} / sqrt(d), omega_d = exp(2 pi i / d).
/// Throws std::domain_error for d = 0.
Basis fourier_basis(std::size_t d);

/// |<u|v>|^2 with the conjugate taken on u. Throws std::invalid_argument on
/// a dimension mismatch.
double overlap_mag2(const CVec& u, const CVec& v);

/// Matrix of |<row_j(a)|row_k(b)>|^2.
Eigen::MatrixXd overlap_table(const Basis& a, const Basis& b);

/// Largest entrywise deviation of B B^dagger from the identity.
double orthonormality_defect(const Basis& b);

/// Largest | |<u|v>|^2 - 1/d | over rows u of `a` and v of `b`.
double unbiasedness_defect(const Basis& a, const Basis& b);

bool are_mutually_unbiased(const Basis& a, const Basis& b, double tol = kDefaultTolerance);

ValidationReport validate_mub_set(const MubSet& set, double tol = kDefaultTolerance);

/// Maps the set by the unitary that sends the first basis to the identity:
/// every basis matrix is right-multiplied by the conjugate transpose of the
/// first one. Overlaps between all states are preserved.
MubSet standardize_set(const MubSet& set);

/// True iff every entry is real within `tol` and has modulus 1/sqrt(d)
/// within `tol`.
bool is_real_hadamard(const Basis& b, double tol = kDefaultTolerance);

/// Applies the unitary U to every state (row r becomes (U r^T)^T).
Basis transform(const Basis& b, const CMat& unitary);
MubSet transform(const MubSet& set, const CMat& unitary);

/// |norm(v) - 1| <= tol
bool is_state(const CVec& v, double tol = kDefaultTolerance);

/// Multiplies v by a global phase so that its first component of
/// substantial modulus is real and positive.
CVec fix_global_phase(const CVec& v);

}  // namespace mublab
