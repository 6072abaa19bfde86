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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mublab/linalg.hpp"

namespace mublab {

// Search for states unbiased to every basis of a set.
//
// The objective is
//
//   F(v) = sum over bases B, rows b of B of (|<b|v>|^2 - 1/d)^2,
//
// minimized over unit vectors from many random starts. F vanishes exactly
// on the states unbiased to the whole set. A NOT_FOUND verdict only says the
// configured restarts never drove F below the hit threshold; it is evidence,
// not a proof.

struct SearchConfig {
  std::size_t restarts = 1000;
  std::size_t max_iterations = 2000;
  double gradient_tolerance = 1e-12;
  /// F at or below this counts as an unbiased vector.
  double hit_threshold = 1e-18;
  /// Two states are identified when |<u|v>| > 1 - dedup_threshold.
  double dedup_threshold = 1e-6;
  /// Edge threshold on |<u|v>|^2 when grouping found vectors into bases.
  double orthogonality_tolerance = 1e-8;
  std::uint64_t seed = 0;
  /// Worker threads; 0 means hardware concurrency. Never affects results.
  std::size_t threads = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

enum class Verdict { kFound, kNotFound };

struct SearchReport {
  Verdict verdict = Verdict::kNotFound;
  /// Deduplicated, global phase fixed, in order of first discovery.
  std::vector<CVec> found_vectors;
  double best_residual = 0.0;
  /// The five smallest final residuals over all restarts, ascending.
  std::vector<double> smallest_residuals;
  std::size_t restarts = 0;
  std::size_t restarts_converged = 0;
  std::uint64_t seed = 0;
};

enum class ExtendibilityLevel { kExtendsByBasis, kExtendsByVectorsOnly, kNoVectorFound };

struct ExtendibilityVerdict {
  ExtendibilityLevel level = ExtendibilityLevel::kNoVectorFound;
  SearchReport search;
  /// Disjoint orthonormal bases assembled from the found vectors.
  std::vector<Basis> new_bases;
  /// Input size plus the largest subfamily of new_bases that is mutually
  /// unbiased.
  std::size_t extended_set_size = 0;
};

std::string_view to_string(Verdict v);
std::string_view to_string(ExtendibilityLevel level);

double unbiasedness_residual(const CVec& v, const MubSet& set);

/// Gradient of F with respect to (Re v_0..Re v_{d-1}, Im v_0..Im v_{d-1}),
/// projected onto the tangent space of the unit sphere at v.
Eigen::VectorXd residual_gradient(const CVec& v, const MubSet& set);

/// Independent multi-start minimization. Restart r draws its start from a
/// generator seeded by (seed, r), so the report is a function of the
/// config and never of the thread count.
SearchReport search_unbiased_vector(const MubSet& set, const SearchConfig& config);

/// The deduplicated found vectors of a search (a lower bound on the true
/// count).
std::vector<CVec> enumerate_unbiased_vectors(const MubSet& set, const SearchConfig& config);

/// Builds the graph with an edge whenever |<u|v>|^2 <= tol and extracts a
/// maximum collection of disjoint d-cliques. Exact up to 64 vectors,
/// greedy beyond.
std::vector<Basis> partition_into_bases(std::span<const CVec> vectors, double tol = 1e-8);

ExtendibilityVerdict classify_extendibility(const MubSet& set, const SearchConfig& config);

/// Sum over bases of the base-2 Shannon entropy of {|<b_k|v>|^2}_k.
double entropy_sum(const CVec& v, const MubSet& set);

/// Largest entropy_sum found by multi-start maximization. This is a lower
/// bound on the true maximum over pure states.
double entropy_witness_bound(const MubSet& set, const SearchConfig& config);

/// Random start vector for restart r (complex Gaussian, normalized).
CVec restart_start_vector(std::size_t dim, std::uint64_t seed, std::size_t restart);

}  // namespace mublab
