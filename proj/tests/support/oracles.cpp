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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mublab::testing {

namespace {
constexpr double kPi = std::numbers::pi;
}

CVec random_state(std::size_t d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CVec v(static_cast<Eigen::Index>(d));
  for (auto& z : v) z = {n(rng), n(rng)};
  return v / v.norm();
}

CMat random_unitary(std::size_t d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto k = static_cast<Eigen::Index>(d);
  CMat g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = {n(rng), n(rng)};
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < k; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

CMat random_orthogonal(std::size_t d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const auto k = static_cast<Eigen::Index>(d);
  Eigen::MatrixXd g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  return q.cast<std::complex<double>>();
}

double random_phase(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng); }

std::complex<double> naive_inner(const CVec& u, const CVec& v) {
  std::complex<double> s = 0.0;
  for (Eigen::Index k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double naive_residual(const CVec& v, const MubSet& set) {
  const double inv_d = 1.0 / static_cast<double>(set.dim());
  double total = 0.0;
  for (const Basis& b : set.bases()) {
    for (std::size_t k = 0; k < b.dim(); ++k) {
      const double dev = std::norm(naive_inner(b.state(k), v)) - inv_d;
      total += dev * dev;
    }
  }
  return total;
}

std::vector<double> finite_difference_gradient(const std::function<double(const CVec&)>& f, const CVec& v,
                                               double h) {
  const auto d = v.size();
  std::vector<double> g(static_cast<std::size_t>(2 * d));
  auto eval = [&](const CVec& w) { return f(w / w.norm()); };
  for (Eigen::Index k = 0; k < 2 * d; ++k) {
    const std::complex<double> step = k < d ? std::complex<double>(h, 0.0) : std::complex<double>(0.0, h);
    CVec plus = v;
    CVec minus = v;
    plus[k % d] += step;
    minus[k % d] -= step;
    g[static_cast<std::size_t>(k)] = (eval(plus) - eval(minus)) / (2.0 * h);
  }
  return g;
}

CVec naive_dft(const CVec& v) {
  const auto d = v.size();
  CVec out(d);
  for (Eigen::Index l = 0; l < d; ++l) {
    std::complex<double> s = 0.0;
    for (Eigen::Index m = 0; m < d; ++m) {
      s += std::polar(1.0, -2.0 * kPi * static_cast<double>((l * m) % d) / static_cast<double>(d)) * v[m];
    }
    out[l] = s / std::sqrt(static_cast<double>(d));
  }
  return out;
}

std::complex<double> exponential_sum(int p, int j, const std::vector<int>& set) {
  std::complex<double> s = 0.0;
  for (int m : set) s += std::polar(1.0, -2.0 * kPi * static_cast<double>((j * m) % p) / static_cast<double>(p));
  return s;
}

std::vector<int> squares_mod(int p) {
  std::vector<int> out;
  for (int x = 0; x < p; ++x) out.push_back((x * x) % p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double qubit_entropy_grid_max(const MubSet& set, std::size_t n) {
  auto h2 = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  double best = -1.0;
  CVec v(2);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = kPi * static_cast<double>(i) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double f = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
      v[0] = std::cos(t / 2.0);
      v[1] = std::polar(std::sin(t / 2.0), f);
      double total = 0.0;
      for (const Basis& b : set.bases()) {
        for (std::size_t k = 0; k < 2; ++k) total += h2(std::norm(naive_inner(b.state(k), v)));
      }
      best = std::max(best, total);
    }
  }
  return best;
}

double cv_fourth_oracle(const CvTriple& t, std::size_t samples) {
  std::array<double, 3> r{};
  std::array<double, 3> th{};
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = std::abs(t.members[i].r);
    th[i] = t.members[i].theta;
  }
  auto violation = [&](double nu) {
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double a = r[i] * std::abs(std::sin(th[i] - nu));
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    return (hi - lo) / (hi + lo);
  };
  double best_nu = 0.0;
  double best = INFINITY;
  for (std::size_t k = 0; k < samples; ++k) {
    const double nu = kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
    const double v = violation(nu);
    if (v < best) {
      best = v;
      best_nu = nu;
    }
  }
  double a = best_nu - kPi / static_cast<double>(samples);
  double b = best_nu + kPi / static_cast<double>(samples);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (violation(c) < violation(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::min(best, violation(0.5 * (a + b)));
}

std::vector<double> qubit_bloch(const CVec& v) {
  const std::complex<double> a = v[0];
  const std::complex<double> b = v[1];
  const std::complex<double> coh = std::conj(a) * b;
  return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace mublab::testing
