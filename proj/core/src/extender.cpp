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

#include "mublab/extender.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "mublab/sphere_optimizer.hpp"

namespace mublab {
namespace {

/// All basis rows, conjugated and stacked, so that A v lists every <b|v>.
CMat stacked_bras(const MubSet& set) {
  const auto d = static_cast<Eigen::Index>(set.dim());
  CMat a(d * static_cast<Eigen::Index>(set.size()), d);
  for (std::size_t i = 0; i < set.size(); ++i) {
    a.middleRows(static_cast<Eigen::Index>(i) * d, d) = set[i].matrix().conjugate();
  }
  return a;
}

void require_dim(const CVec& v, const MubSet& set, const char* where) {
  if (static_cast<std::size_t>(v.size()) != set.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(v.size()) + " vs " + std::to_string(set.dim()) + ")");
  }
}

class ResidualObjective {
 public:
  explicit ResidualObjective(const MubSet& set)
      : bras_(stacked_bras(set)), target_(1.0 / static_cast<double>(set.dim())) {}

  double operator()(const CVec& v, CVec* gradient) const {
    const CVec amplitudes = bras_ * v;
    const Eigen::ArrayXd weights = amplitudes.cwiseAbs2().array() - target_;
    if (gradient) {
      *gradient = 4.0 * (bras_.adjoint() * (weights.cast<Complex>() * amplitudes.array()).matrix());
    }
    return weights.square().sum();
  }

 private:
  CMat bras_;
  double target_;
};

/// sum of p log2 p over every outcome of every basis (minus the entropy sum)
class NegativeEntropyObjective {
 public:
  explicit NegativeEntropyObjective(const MubSet& set) : bras_(stacked_bras(set)) {}

  double operator()(const CVec& v, CVec* gradient) const {
    const CVec amplitudes = bras_ * v;
    const Eigen::ArrayXd p = amplitudes.cwiseAbs2().array();
    double value = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (p[k] > 0.0) value += p[k] * std::log2(p[k]);
    }
    if (gradient) {
      const Eigen::ArrayXd dp =
          (p.max(std::numeric_limits<double>::min()).log() + 1.0) / std::numbers::ln2;
      *gradient = 2.0 * (bras_.adjoint() * (dp.cast<Complex>() * amplitudes.array()).matrix());
    }
    return value;
  }

 private:
  CMat bras_;
};

std::size_t resolve_threads(std::size_t requested, std::size_t jobs) {
  std::size_t n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return std::max<std::size_t>(1, std::min(n, jobs));
}

/// Runs fn(r) for r in [0, count) on `threads` workers. Each result is
/// written to its own slot, so the output is independent of scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_indexed(std::size_t count, std::size_t threads, Fn fn) {
  std::vector<Result> results(count);
  const std::size_t workers = resolve_threads(threads, count);
  if (workers <= 1) {
    for (std::size_t r = 0; r < count; ++r) results[r] = fn(r);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < count && !failed; r = next++) {
          try {
            results[r] = fn(r);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

SphereOptions sphere_options(const SearchConfig& config) {
  SphereOptions options;
  options.max_iterations = config.max_iterations;
  options.gradient_tolerance = config.gradient_tolerance;
  return options;
}

bool same_state(const CVec& u, const CVec& v, double threshold) {
  return std::abs(u.dot(v)) > 1.0 - threshold;
}

using Mask = std::uint64_t;

void collect_cliques(const std::vector<Mask>& adjacency, std::size_t size, Mask clique, Mask candidates,
                     std::size_t depth, std::vector<Mask>& out) {
  if (depth == size) {
    out.push_back(clique);
    return;
  }
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // only larger indices stay candidates, so each clique is listed once
    collect_cliques(adjacency, size, clique | (Mask{1} << v), candidates & adjacency[static_cast<std::size_t>(v)],
                    depth + 1, out);
  }
}

void best_packing(const std::vector<Mask>& cliques, std::size_t from, Mask used, std::size_t free_count,
                  std::size_t size, std::vector<std::size_t>& chosen, std::vector<std::size_t>& best) {
  if (chosen.size() > best.size()) best = chosen;
  if (chosen.size() + free_count / size <= best.size()) return;
  for (std::size_t i = from; i < cliques.size(); ++i) {
    if (cliques[i] & used) continue;
    chosen.push_back(i);
    best_packing(cliques, i + 1, used | cliques[i], free_count - size, size, chosen, best);
    chosen.pop_back();
  }
}

bool find_clique_greedy(const std::vector<std::vector<char>>& adjacent, const std::vector<char>& alive,
                        std::size_t size, std::vector<std::size_t>& clique, std::size_t from) {
  if (clique.size() == size) return true;
  for (std::size_t v = from; v < adjacent.size(); ++v) {
    if (!alive[v]) continue;
    bool ok = true;
    for (std::size_t u : clique) ok = ok && adjacent[u][v];
    if (!ok) continue;
    clique.push_back(v);
    if (find_clique_greedy(adjacent, alive, size, clique, v + 1)) return true;
    clique.pop_back();
  }
  return false;
}

Basis basis_from_rows(std::span<const CVec> vectors, const std::vector<std::size_t>& members) {
  const auto d = static_cast<Eigen::Index>(vectors.front().size());
  CMat rows(d, d);
  for (Eigen::Index k = 0; k < d; ++k) rows.row(k) = vectors[members[static_cast<std::size_t>(k)]].transpose();
  return Basis(std::move(rows), "found");
}

std::size_t largest_unbiased_family(const std::vector<Basis>& bases, double tol) {
  const std::size_t n = bases.size();
  if (n == 0) return 0;
  std::vector<std::vector<char>> unbiased(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      unbiased[i][j] = unbiased[j][i] = unbiasedness_defect(bases[i], bases[j]) <= tol;
    }
  }
  // maximum clique, exhaustive; new_bases stays small in every case we run
  std::size_t best = 1;
  std::vector<std::size_t> current;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, current.size());
    if (current.size() + (n - from) <= best) return;
    for (std::size_t v = from; v < n; ++v) {
      bool ok = true;
      for (std::size_t u : current) ok = ok && unbiased[u][v];
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  grow(grow, 0);
  return best;
}

struct RestartOutcome {
  CVec point;
  double value = 0.0;
  bool converged = false;
};

}  // namespace

void SearchConfig::validate() const {
  if (restarts == 0) throw std::invalid_argument("SearchConfig: restarts must be positive");
  if (max_iterations == 0) throw std::invalid_argument("SearchConfig: max_iterations must be positive");
  if (!(gradient_tolerance > 0.0)) throw std::invalid_argument("SearchConfig: gradient tolerance must be positive");
  if (!(hit_threshold > 0.0)) throw std::invalid_argument("SearchConfig: hit threshold must be positive");
  if (!(dedup_threshold > 0.0 && dedup_threshold < 1.0)) {
    throw std::invalid_argument("SearchConfig: dedup threshold must lie in (0, 1)");
  }
  if (!(orthogonality_tolerance > 0.0)) {
    throw std::invalid_argument("SearchConfig: orthogonality tolerance must be positive");
  }
}

std::string_view to_string(Verdict v) { return v == Verdict::kFound ? "FOUND" : "NOT_FOUND"; }

std::string_view to_string(ExtendibilityLevel level) {
  switch (level) {
    case ExtendibilityLevel::kExtendsByBasis:
      return "EXTENDS_BY_BASIS";
    case ExtendibilityLevel::kExtendsByVectorsOnly:
      return "EXTENDS_BY_VECTORS_ONLY";
    case ExtendibilityLevel::kNoVectorFound:
      break;
  }
  return "NO_VECTOR_FOUND";
}

double unbiasedness_residual(const CVec& v, const MubSet& set) {
  require_dim(v, set, "unbiasedness_residual");
  return ResidualObjective{set}(v, nullptr);
}

Eigen::VectorXd residual_gradient(const CVec& v, const MubSet& set) {
  require_dim(v, set, "residual_gradient");
  CVec g(v.size());
  ResidualObjective{set}(v, &g);
  const CVec tangent = project_to_tangent(v, g);
  Eigen::VectorXd out(2 * v.size());
  out << tangent.real(), tangent.imag();
  return out;
}

CVec restart_start_vector(std::size_t dim, std::uint64_t seed, std::size_t restart) {
  const auto r = static_cast<std::uint64_t>(restart);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  CVec v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = normal(rng);
    v[k] = Complex(re, normal(rng));
  }
  return v.normalized();
}

SearchReport search_unbiased_vector(const MubSet& set, const SearchConfig& config) {
  config.validate();
  if (set.empty()) throw std::invalid_argument("search_unbiased_vector: empty set");

  const ResidualObjective objective(set);
  const SphereObjective fn = [&objective](const CVec& v, CVec* g) { return objective(v, g); };
  const SphereOptions options = sphere_options(config);

  const auto outcomes = run_indexed<RestartOutcome>(config.restarts, config.threads, [&](std::size_t r) {
    const SphereResult res = minimize_on_sphere(fn, restart_start_vector(set.dim(), config.seed, r), options);
    RestartOutcome out;
    out.point = fix_global_phase(res.point);
    out.value = objective(out.point, nullptr);
    out.converged = res.converged || out.value <= config.hit_threshold;
    return out;
  });

  SearchReport report;
  report.seed = config.seed;
  report.restarts = config.restarts;
  report.best_residual = std::numeric_limits<double>::infinity();
  std::vector<double> residuals;
  residuals.reserve(outcomes.size());
  for (const auto& o : outcomes) {
    residuals.push_back(o.value);
    report.best_residual = std::min(report.best_residual, o.value);
    if (o.converged) ++report.restarts_converged;
    if (o.value > config.hit_threshold) continue;
    const bool seen = std::any_of(report.found_vectors.begin(), report.found_vectors.end(),
                                  [&](const CVec& f) { return same_state(f, o.point, config.dedup_threshold); });
    if (!seen) report.found_vectors.push_back(o.point);
  }
  const std::size_t keep = std::min<std::size_t>(5, residuals.size());
  std::partial_sort(residuals.begin(), residuals.begin() + static_cast<std::ptrdiff_t>(keep), residuals.end());
  report.smallest_residuals.assign(residuals.begin(), residuals.begin() + static_cast<std::ptrdiff_t>(keep));
  report.verdict = report.found_vectors.empty() ? Verdict::kNotFound : Verdict::kFound;
  return report;
}

std::vector<CVec> enumerate_unbiased_vectors(const MubSet& set, const SearchConfig& config) {
  return search_unbiased_vector(set, config).found_vectors;
}

std::vector<Basis> partition_into_bases(std::span<const CVec> vectors, double tol) {
  std::vector<Basis> out;
  if (vectors.empty()) return out;
  const std::size_t n = vectors.size();
  const auto d = static_cast<std::size_t>(vectors.front().size());
  for (const auto& v : vectors) {
    if (static_cast<std::size_t>(v.size()) != d) throw std::invalid_argument("partition_into_bases: mixed dimensions");
  }
  if (n < d) return out;

  if (n <= 64) {
    std::vector<Mask> adjacency(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (overlap_mag2(vectors[i], vectors[j]) <= tol) {
          adjacency[i] |= Mask{1} << j;
        }
      }
    }
    std::vector<Mask> cliques;
    for (std::size_t v = 0; v < n; ++v) {
      collect_cliques(adjacency, d, Mask{1} << v, adjacency[v], 1, cliques);
    }
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    best_packing(cliques, 0, 0, n, d, chosen, best);
    for (std::size_t idx : best) {
      std::vector<std::size_t> members;
      for (Mask m = cliques[idx]; m; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      out.push_back(basis_from_rows(vectors, members));
    }
    return out;
  }

  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adjacent[i][j] = adjacent[j][i] = overlap_mag2(vectors[i], vectors[j]) <= tol;
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> clique;
  while (find_clique_greedy(adjacent, alive, d, clique, 0)) {
    for (std::size_t v : clique) alive[v] = 0;
    out.push_back(basis_from_rows(vectors, clique));
    clique.clear();
  }
  return out;
}

ExtendibilityVerdict classify_extendibility(const MubSet& set, const SearchConfig& config) {
  ExtendibilityVerdict verdict;
  verdict.search = search_unbiased_vector(set, config);
  verdict.extended_set_size = set.size();
  if (verdict.search.verdict == Verdict::kNotFound) {
    verdict.level = ExtendibilityLevel::kNoVectorFound;
    return verdict;
  }
  verdict.new_bases = partition_into_bases(verdict.search.found_vectors, config.orthogonality_tolerance);
  if (verdict.new_bases.empty()) {
    verdict.level = ExtendibilityLevel::kExtendsByVectorsOnly;
    return verdict;
  }
  verdict.level = ExtendibilityLevel::kExtendsByBasis;
  verdict.extended_set_size += largest_unbiased_family(verdict.new_bases, config.orthogonality_tolerance);
  return verdict;
}

double entropy_sum(const CVec& v, const MubSet& set) {
  require_dim(v, set, "entropy_sum");
  return -NegativeEntropyObjective{set}(v, nullptr);
}

double entropy_witness_bound(const MubSet& set, const SearchConfig& config) {
  config.validate();
  const NegativeEntropyObjective objective(set);
  const SphereObjective fn = [&objective](const CVec& v, CVec* g) { return objective(v, g); };
  const SphereOptions options = sphere_options(config);
  const auto values = run_indexed<double>(config.restarts, config.threads, [&](std::size_t r) {
    const SphereResult res = minimize_on_sphere(fn, restart_start_vector(set.dim(), config.seed, r), options);
    return -res.value;
  });
  return *std::max_element(values.begin(), values.end());
}

}  // namespace mublab
