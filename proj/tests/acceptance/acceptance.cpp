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

// Acceptance suite. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines. Exit status is 0 only when every selected
// criterion passes.
//
//   mublab_acceptance [--only N]...

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mublab/bloch.hpp"
#include "mublab/cli.hpp"
#include "mublab/constructions.hpp"
#include "mublab/cv.hpp"
#include "mublab/extender.hpp"
#include "mublab/io.hpp"
#include "mublab/linalg.hpp"
#include "oracles.hpp"

namespace {

using namespace mublab;
using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SearchConfig standard_config() {
  SearchConfig c;
  c.restarts = 1000;
  c.seed = 0;
  return c;
}

// the printed 7x7 basis
CMat printed_a7() {
  const Complex a = (std::sqrt(Complex(-7.0)) - 3.0) / 4.0;
  const Complex o = 1.0;
  CMat m(7, 7);
  m << a, a, a, o, a, o, o,
       o, a, a, a, o, a, o,
       o, o, a, a, a, o, a,
       a, o, o, a, a, a, o,
       o, a, o, o, a, a, a,
       a, o, a, o, o, a, a,
       a, a, o, a, o, o, a;
  return m / std::sqrt(7.0);
}

Outcome complete_sets() {
  Outcome o;
  for (auto [d, expected] : {std::pair{2u, 3u}, std::pair{3u, 4u}, std::pair{5u, 6u}}) {
    const auto t0 = Clock::now();
    const MubSet s = fourier_complete_set(d);
    const ValidationReport r = validate_mub_set(s, 1e-10);
    const double t = seconds_since(t0);
    o.check(s.size() == expected && r.ok && r.worst_unbiasedness_defect <= 1e-10 && t < 1.0,
            "d=" + std::to_string(d) + ": " + std::to_string(s.size()) + " bases, worst defect " +
                fmt("%.3g", r.worst_unbiasedness_defect) + ", " + fmt("%.3f s", t));
  }
  return o;
}

Outcome residue_constructions() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int p : {3, 7, 11, 19, 23, 5, 13, 17, 29}) {
    const MubSet s = qr_triple(p);
    const ValidationReport r = validate_mub_set(s, 1e-10);
    o.check(r.ok, "p=" + std::to_string(p) + ": {I, F, qr} worst defect " + fmt("%.3g", r.worst_unbiasedness_defect));
  }
  const double a7 = (qr_basis_3mod4(7).matrix() - printed_a7()).cwiseAbs().maxCoeff();
  o.check(a7 <= 1e-12, "p=7 basis vs printed matrix: max entry difference " + fmt("%.3g", a7));
  const double t = seconds_since(t0);
  o.check(t < 1.0, "total runtime " + fmt("%.3f s", t));
  return o;
}

Outcome unextendibility_evidence() {
  Outcome o;
  std::vector<MubSet> sets{s6_pair(), dim4_triple(kPi / 3, kPi / 5), qr_triple(7), qr_triple(11), qr_triple(13)};
  for (std::size_t d = 4; d <= 16; d += 2) sets.push_back(wh_candidate_set(d));
  const SearchConfig c = standard_config();
  for (const MubSet& s : sets) {
    const auto t0 = Clock::now();
    const SearchReport r = search_unbiased_vector(s, c);
    const double t = seconds_since(t0);
    o.check(r.verdict == Verdict::kNotFound && r.best_residual >= 1e-6 && t <= 600.0,
            s.label() + ": " + std::string(to_string(r.verdict)) + ", best residual " +
                fmt("%.3e", r.best_residual) + ", " + std::to_string(r.found_vectors.size()) + " vectors, " +
                fmt("%.1f s", t));
  }
  return o;
}

Outcome extendibility_positives() {
  Outcome o;
  const auto t0 = Clock::now();
  const SearchConfig c = standard_config();
  for (auto [d, vectors, bases] : {std::tuple{3u, 6u, 2u}, std::tuple{5u, 20u, 4u}}) {
    const MubSet pair({identity_basis(d), fourier_basis(d)});
    const std::vector<CVec> vs = enumerate_unbiased_vectors(pair, c);
    const std::vector<Basis> parts = partition_into_bases(vs, 1e-8);
    bool parts_ok = true;
    for (const Basis& b : parts) {
      parts_ok = parts_ok && orthonormality_defect(b) <= 1e-8 && are_mutually_unbiased(pair[0], b, 1e-8) &&
                 are_mutually_unbiased(pair[1], b, 1e-8);
    }
    o.check(vs.size() == vectors && parts.size() == bases && parts_ok,
            "{I,F" + std::to_string(d) + "}: " + std::to_string(vs.size()) + " vectors, " +
                std::to_string(parts.size()) + " bases");
  }
  for (double b : {0.0, kPi / 4}) {
    const MubSet s = dim4_triple(kPi / 2, b);
    const ExtendibilityVerdict v = classify_extendibility(s, c);
    o.check(v.level == ExtendibilityLevel::kExtendsByBasis && v.extended_set_size == 5,
            s.label() + ": " + std::string(to_string(v.level)) + ", total " + std::to_string(v.extended_set_size) +
                " bases, best residual " + fmt("%.3e", v.search.best_residual));
  }
  const double t = seconds_since(t0);
  o.check(t <= 300.0, "runtime " + fmt("%.1f s", t));
  return o;
}

Outcome pair_lower_bound() {
  Outcome o;
  for (std::size_t d : {2u, 3u, 4u}) {
    const std::size_t n = enumerate_unbiased_vectors(MubSet({identity_basis(d), fourier_basis(d)}), standard_config()).size();
    const std::size_t bound = std::size_t{1} << (d - 1);
    o.check(n >= bound, "{I,F" + std::to_string(d) + "}: " + std::to_string(n) + " vectors, bound " +
                            std::to_string(bound));
  }
  return o;
}

Outcome gradient_and_entropy() {
  Outcome o;
  testing::Rng rng(20260101);
  for (std::size_t d = 2; d <= 8; ++d) {
    const MubSet s({identity_basis(d), fourier_basis(d), Basis(testing::random_unitary(d, rng))});
    const auto f = [&](const CVec& w) { return testing::naive_residual(w, s); };
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const CVec v = testing::random_state(d, rng);
      const Eigen::VectorXd g = residual_gradient(v, s);
      const std::vector<double> fd = testing::finite_difference_gradient(f, v, 1e-6);
      const Eigen::VectorXd ref = Eigen::Map<const Eigen::VectorXd>(fd.data(), static_cast<Eigen::Index>(fd.size()));
      worst = std::max(worst, (g - ref).norm() / ref.norm());
    }
    o.check(worst <= 1e-6, "d=" + std::to_string(d) + ": worst relative gradient error " + fmt("%.3e", worst));
  }
  const MubSet pair({identity_basis(2), fourier_basis(2)});
  const double bound = entropy_witness_bound(pair, standard_config());
  const double oracle = testing::qubit_entropy_grid_max(pair, 1000);
  o.check(std::abs(bound - 2.0) <= 1e-6 && std::abs(bound - oracle) <= 1e-6,
          "entropy {I,F2}: " + fmt("%.12f", bound) + " bits, grid oracle " + fmt("%.12f", oracle));
  return o;
}

Outcome bloch_identities() {
  Outcome o;
  testing::Rng rng(20260102);
  for (std::size_t d = 2; d <= 8; ++d) {
    const double inv_d = 1.0 / static_cast<double>(d);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const CVec u = testing::random_state(d, rng);
      const CVec v = testing::random_state(d, rng);
      worst = std::max(worst, std::abs(std::norm(testing::naive_inner(u, v)) - inv_d - (1.0 - inv_d) * bloch_angle(u, v)));
    }
    o.check(worst <= 1e-9, "d=" + std::to_string(d) + ": worst deviation " + fmt("%.3e", worst));
  }
  const long c = complement_dimension(4, 3);
  o.check(c == 6, "complement_dimension(4, 3) = " + std::to_string(c));
  return o;
}

Outcome cv_sector() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = 0.2 + (5.0 - 0.2) * i / 49.0;
    for (int j = 0; j < 50; ++j) {
      const double theta = 2.0 * kPi * (j + 0.5) / 50.0;
      const auto [plus, minus] = complete_cv_triple(r, theta);
      worst = std::max({worst, cv_triple_defect(plus), cv_triple_defect(minus)});
    }
  }
  o.check(worst <= 1e-12, "50x50 grid: worst three-way defect " + fmt("%.3e", worst));

  const auto [plus, minus] = complete_cv_triple(1.0, kPi / 2);
  const CvObservable p3 = plus.members[2];
  const CvObservable m3 = minus.members[2];
  // the minus member comes back as (sqrt 2, 3 pi / 4), the same line as -pi/4
  const double dev = std::max({std::abs(p3.r - std::sqrt(2.0)), std::abs(p3.theta - kPi / 4),
                               std::abs(m3.r - std::sqrt(2.0)), std::abs(std::sin(m3.theta + kPi / 4))});
  o.check(dev <= 1e-15 && verify_cv_triple(plus) && verify_cv_triple(minus),
          "(r=1, theta=pi/2) -> (" + fmt("%.17g", p3.r) + ", " + fmt("%.17g", p3.theta) + ") and (" +
              fmt("%.17g", m3.r) + ", " + fmt("%.17g", m3.theta) + ")");

  const CvTriple symmetric = complete_cv_triple(1.0, 2.0 * kPi / 3).first;
  const double residual = cv_fourth_basis_residual(symmetric);
  const double oracle = testing::cv_fourth_oracle(symmetric);
  o.check(residual > 0.0 && std::abs(residual - 1.0 / 3.0) <= 1e-9 && std::abs(residual - oracle) <= 1e-9,
          "symmetric triple fourth-basis residual " + fmt("%.12f", residual) + " (oracle " + fmt("%.12f", oracle) +
              ", regression 1/3)");
  return o;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input, int* code) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  *code = cli::run(args, in, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::string dim4 = to_json(dim4_triple(kPi / 3, kPi / 5)).dump();
  const std::string pair3 = to_json(MubSet({identity_basis(3), fourier_basis(3)})).dump();
  struct Case {
    std::vector<std::string> args;
    std::string input;
  };
  const std::vector<Case> cases{
      {{"search", "-", "--restarts", "200", "--seed", "11"}, dim4},
      {{"classify", "-", "--restarts", "200", "--seed", "12"}, pair3},
      {{"entropy", "-", "--restarts", "50", "--seed", "13"}, dim4},
      {{"construct", "wh-set", "--d", "12"}, ""},
      {{"table1", "--restarts", "20", "--seed", "14"}, ""},
  };
  for (const Case& c : cases) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "2", "4"}) {
      std::vector<std::string> args = c.args;
      args.insert(args.end(), {"--threads", threads});
      int code = 0;
      outputs.push_back(run_cli(args, c.input, &code));
    }
    bool same = !outputs[0].empty();
    for (const std::string& s : outputs) same = same && s == outputs[0];
    o.check(same, c.args[0] + ": byte-identical over runs with 1, 1, 2, 4 threads (" +
                      std::to_string(outputs[0].size()) + " bytes)");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--only N]...\n", argv[0]);
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "complete sets in d = 2, 3, 5", complete_sets},
      {2, "quadratic-residue constructions", residue_constructions},
      {3, "unextendibility evidence (1000 restarts)", unextendibility_evidence},
      {4, "extendibility positives", extendibility_positives},
      {5, "pair lower bound 2^(d-1)", pair_lower_bound},
      {6, "gradient and entropy oracles", gradient_and_entropy},
      {7, "Bloch identities", bloch_identities},
      {8, "continuous-variable triples", cv_sector},
      {9, "determinism across thread counts", determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = Clock::now();
    const Outcome o = c.run();
    for (const std::string& line : o.details) std::printf("    %s\n", line.c_str());
    std::printf("AC%d %s  %s  [%.1f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds_since(t0));
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
