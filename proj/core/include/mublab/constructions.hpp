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

#include "mublab/linalg.hpp"

namespace mublab {

/// Builds the basis of cyclic shifts of `seed`: row k holds seed_m at
/// position (m + k) mod d. The seed must be a unit vector unbiased to the
/// Fourier basis within `tol`; otherwise std::invalid_argument is thrown and
/// the message names the worst Fourier overlap defect.
Basis shift_basis_from_vector(const CVec& seed, double tol = 1e-8);

/// Seed for p = 3 mod 4: entries (-(p-1) + 2i sqrt(p)) / (p+1) on the
/// quadratic residues (0 included), 1 on the non-residues, all over sqrt(p).
CVec qr_seed_3mod4(int p);

/// Seed for p = 1 mod 4: 1 at m = 0, z0 on nonzero residues, conj(z0) on
/// non-residues, over sqrt(p); z0 = cos t + i sin t with
/// cos t = (sqrt(p) - 1) / (p - 1) and sin t > 0.
CVec qr_seed_1mod4(int p);

Basis qr_basis_3mod4(int p);
Basis qr_basis_1mod4(int p);

/// {identity, Fourier, quadratic-residue basis} for an odd prime p, picking
/// the seed by p mod 4.
MubSet qr_triple(int p);

/// A Weyl-Heisenberg operator of the form Z_d or X_d Z_d^k, with
/// Z|j> = omega^j |j> and X|j> = |(j+1) mod d>.
class WhOperator {
 public:
  static WhOperator clock(std::size_t d);
  static WhOperator shift_clock(std::size_t d, std::size_t z_power);

  std::size_t dim() const { return dim_; }
  bool is_pure_clock() const { return pure_clock_; }
  std::size_t z_power() const { return z_power_; }

  CMat matrix() const;
  std::string name() const;

 private:
  WhOperator(std::size_t d, std::size_t k, bool pure_clock)
      : dim_(d), z_power_(k), pure_clock_(pure_clock) {}

  std::size_t dim_;
  std::size_t z_power_;
  bool pure_clock_;
};

/// Orthonormal eigenbasis of a unitary matrix via its complex Schur form.
/// Rows are ordered by eigenvalue phase in [0, 2 pi) and each row's global
/// phase is fixed. Throws std::runtime_error when the matrix is not normal
/// to working precision or the result fails the orthonormality check.
Basis eigenbasis_of_unitary(const CMat& unitary, std::string label = {});

/// Z_d gives the identity basis and X_d the Fourier basis exactly; every
/// other operator goes through eigenbasis_of_unitary.
Basis wh_eigenbasis(const WhOperator& op);

/// min prime factor of d, plus one.
std::size_t wh_candidate_size(std::size_t d);

/// Eigenbases of Z_d, X_d, X_d Z_d, ..., X_d Z_d^(xi-2). The set is
/// validated after assembly; std::runtime_error if it is not unbiased.
MubSet wh_candidate_set(std::size_t d);

/// Triple {B1 = I, B2, B3(a, b)} in dimension four with the 1/2 prefactors
/// stored verbatim. a = pi/2 marks the extendible case in the label.
MubSet dim4_triple(double a, double b);
bool is_dim4_extendible_case(double a, double tol = 1e-12);

/// The isolated 6x6 Hadamard matrix.
Basis s6_basis();
/// {I, S6}
MubSet s6_pair();

/// Eigenbases of sigma_z, sigma_x, sigma_y.
MubSet pauli_triple();

/// Complete sets for d in {2, 3, 5}: identity, Fourier, and the eigenbases
/// of X Z^k for k = 1..d-1. Throws std::invalid_argument otherwise.
MubSet fourier_complete_set(std::size_t d);

}  // namespace mublab
