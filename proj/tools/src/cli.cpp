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

#include "mublab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mublab/bloch.hpp"
#include "mublab/constructions.hpp"
#include "mublab/cv.hpp"
#include "mublab/extender.hpp"
#include "mublab/io.hpp"
#include "mublab/linalg.hpp"

namespace mublab::cli {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t restarts = 1000;
  std::size_t max_iterations = 2000;
  std::optional<double> hit;
  std::size_t threads = 1;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct Outcome {
  json result;
  std::string text;  // overrides the generic text rendering when set
  int exit_code = kExitOk;
};

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  auto scalar = [](const json& v) -> std::string {
    if (v.is_number_float()) return g17(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
    os << prefix << ':';
    for (const auto& v : j) os << ' ' << scalar(v);
    os << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << scalar(j) << '\n';
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// FNV-1a, identifies the input bytes in the manifest
std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SearchConfig search_config(const CommonOptions& o) {
  SearchConfig c;
  c.restarts = o.restarts;
  c.max_iterations = o.max_iterations;
  c.seed = o.seed;
  c.threads = o.threads;
  if (o.hit) c.hit_threshold = *o.hit;
  if (o.tol) c.orthogonality_tolerance = *o.tol;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

json search_parameters(const SearchConfig& c) {
  return json{{"restarts", c.restarts},
              {"max_iterations", c.max_iterations},
              {"gradient_tolerance", c.gradient_tolerance},
              {"hit_threshold", c.hit_threshold},
              {"dedup_threshold", c.dedup_threshold},
              {"orthogonality_tolerance", c.orthogonality_tolerance}};
}

struct LoadedSet {
  MubSet set;
  std::string digest;
};

LoadedSet load_set(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  return {parse_mub_set(text), digest(text)};
}

void require_valid(const MubSet& set, double tol) {
  const ValidationReport r = validate_mub_set(set, tol);
  if (!r.ok) {
    throw UsageError("input is not a set of mutually unbiased bases (worst unbiasedness defect " +
                     g17(r.worst_unbiasedness_defect) + ", worst orthonormality defect " +
                     g17(r.worst_orthonormality_defect) + ")");
  }
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::optional<std::size_t> d;
  std::optional<int> p;
  std::optional<double> a;
  std::optional<double> b;
  bool pair = false;
  bool triple = false;
};

template <class T>
T need(const std::optional<T>& v, const ConstructArgs& c, const char* flag) {
  if (!v) throw UsageError("construct " + c.kind + " requires " + flag);
  return *v;
}

Outcome cmd_construct(const ConstructArgs& c, const CommonOptions& o, json& params) {
  params["kind"] = c.kind;
  MubSet set;
  try {
    if (c.kind == "fourier") {
      const std::size_t d = need(c.d, c, "--d");
      params["d"] = d;
      params["pair"] = c.pair;
      set = c.pair ? MubSet({identity_basis(d), fourier_basis(d)}, "fourier-pair(d=" + std::to_string(d) + ")")
                   : MubSet({fourier_basis(d)}, "fourier(d=" + std::to_string(d) + ")");
    } else if (c.kind == "qr3mod4" || c.kind == "qr1mod4") {
      const int p = need(c.p, c, "--p");
      params["p"] = p;
      params["triple"] = c.triple;
      Basis b = c.kind == "qr3mod4" ? qr_basis_3mod4(p) : qr_basis_1mod4(p);
      set = c.triple ? qr_triple(p) : MubSet({std::move(b)}, c.kind + "(p=" + std::to_string(p) + ")");
    } else if (c.kind == "wh-set") {
      const std::size_t d = need(c.d, c, "--d");
      params["d"] = d;
      set = wh_candidate_set(d);
    } else if (c.kind == "dim4-triple") {
      const double a = need(c.a, c, "--a");
      const double b = need(c.b, c, "--b");
      params["a"] = a;
      params["b"] = b;
      set = dim4_triple(a, b);
    } else if (c.kind == "s6-pair") {
      set = s6_pair();
    } else {
      const std::size_t d = need(c.d, c, "--d");
      params["d"] = d;
      set = fourier_complete_set(d);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  Outcome out;
  out.result = to_json(set);
  if (o.format == "text") out.text = format_text_matrices(set);
  return out;
}

// ------------------------------------------------------------- set commands

Outcome cmd_verify(const LoadedSet& in, const CommonOptions& o, json& params) {
  const double tol = o.tol.value_or(kDefaultTolerance);
  params["tol"] = tol;
  const ValidationReport r = validate_mub_set(in.set, tol);
  Outcome out;
  out.result = json{{"dimension", in.set.dim()}, {"bases", in.set.size()}, {"report", to_json(r)}};
  out.exit_code = r.ok ? kExitOk : kExitNegative;
  return out;
}

Outcome cmd_search(const LoadedSet& in, const CommonOptions& o, json& params) {
  const SearchConfig c = search_config(o);
  params.update(search_parameters(c));
  require_valid(in.set, o.tol.value_or(kDefaultTolerance));
  const SearchReport r = search_unbiased_vector(in.set, c);
  Outcome out;
  out.result = json{{"report", to_json(r)}};
  out.exit_code = r.verdict == Verdict::kFound ? kExitOk : kExitNegative;
  return out;
}

Outcome cmd_classify(const LoadedSet& in, const CommonOptions& o, json& params) {
  const SearchConfig c = search_config(o);
  params.update(search_parameters(c));
  require_valid(in.set, kDefaultTolerance);
  const ExtendibilityVerdict v = classify_extendibility(in.set, c);
  Outcome out;
  out.result = json{{"input_size", in.set.size()}, {"verdict", to_json(v)}};
  out.exit_code = v.level == ExtendibilityLevel::kNoVectorFound ? kExitNegative : kExitOk;
  return out;
}

Outcome cmd_entropy(const LoadedSet& in, const CommonOptions& o, json& params) {
  const SearchConfig c = search_config(o);
  params.update(search_parameters(c));
  require_valid(in.set, o.tol.value_or(kDefaultTolerance));
  const double bound = entropy_witness_bound(in.set, c);
  const double ceiling = static_cast<double>(in.set.size()) * std::log2(static_cast<double>(in.set.dim()));
  Outcome out;
  out.result = json{{"entropy_bits", bound}, {"maximum_bits", ceiling}, {"gap_bits", ceiling - bound}};
  return out;
}

Outcome cmd_bloch(const LoadedSet& in, const CommonOptions&, json&) {
  const MubSet& s = in.set;
  const std::size_t d = s.dim();
  if (d < 2) throw UsageError("bloch requires dimension >= 2");
  json bases = json::array();
  std::vector<Eigen::MatrixXd> columns;
  for (const Basis& b : s.bases()) {
    Eigen::MatrixXd m;
    try {
      m = bloch_matrix(b);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    json rows = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rows.push_back(std::vector<double>(m.col(k).data(), m.col(k).data() + m.rows()));
    }
    bases.push_back(json{{"label", b.label()}, {"simplex", simplex_check(b)}, {"vectors", rows}});
    columns.push_back(std::move(m));
  }
  double cross = 0.0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      cross = std::max(cross, (columns[i].transpose() * columns[j]).cwiseAbs().maxCoeff());
    }
  }
  json complement = json::array();
  for (std::size_t m = 0; m <= d + 1; ++m) {
    complement.push_back(json{{"bases", m},
                              {"dimension", complement_dimension(static_cast<long>(d), static_cast<long>(m))}});
  }
  Outcome out;
  out.result = json{{"dimension", d},
                    {"coordinate_labels", gell_mann_labels(d)},
                    {"bases", bases},
                    {"max_cross_basis_inner_product", cross},
                    {"complement_dimension", complement}};
  return out;
}

// ------------------------------------------------------------------------ cv

struct CvArgs {
  double r = 1.0;
  double theta = std::numbers::pi / 2;
  std::string branch = "+";
  std::size_t nu_points = 1000;
  std::size_t t_points = 1000;
};

json triple_json(const CvTriple& t) {
  json j = to_json(t);
  j["defect"] = cv_triple_defect(t);
  j["verified"] = verify_cv_triple(t);
  return j;
}

std::pair<CvTriple, CvTriple> completed(const CvArgs& a) {
  try {
    return complete_cv_triple(a.r, a.theta);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

Outcome cmd_cv_complete(const CvArgs& a, json& params) {
  params["r"] = a.r;
  params["theta"] = a.theta;
  const auto [plus, minus] = completed(a);
  Outcome out;
  out.result = json{{"triples", json::array({triple_json(plus), triple_json(minus)})}};
  out.exit_code = verify_cv_triple(plus) && verify_cv_triple(minus) ? kExitOk : kExitNegative;
  return out;
}

Outcome cmd_cv_fourth(const CvArgs& a, json& params) {
  params["r"] = a.r;
  params["theta"] = a.theta;
  params["branch"] = a.branch;
  params["nu_points"] = a.nu_points;
  params["t_points"] = a.t_points;
  const auto [plus, minus] = completed(a);
  const CvTriple& t = a.branch == "+" ? plus : minus;
  CvGridSpec grid;
  grid.nu_points = a.nu_points;
  grid.t_points = a.t_points;
  double residual = 0.0;
  try {
    residual = cv_fourth_basis_residual(t, grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Outcome out;
  out.result = json{{"triple", triple_json(t)}, {"fourth_basis_residual", residual}};
  return out;
}

// -------------------------------------------------------------------- table1

Outcome cmd_table1(const CommonOptions& o, json& params) {
  const SearchConfig c = search_config(o);
  params.update(search_parameters(c));
  struct Row {
    std::string dimension;
    std::string expected;
    MubSet set;
  };
  const double pi = std::numbers::pi;
  std::vector<Row> rows;
  rows.push_back({"2", "3", fourier_complete_set(2)});
  rows.push_back({"3", "4", fourier_complete_set(3)});
  rows.push_back({"4", "3", dim4_triple(pi / 3, pi / 5)});
  rows.push_back({"5", "6", fourier_complete_set(5)});
  rows.push_back({"6", "2", s6_pair()});
  rows.push_back({"7", "<= 3", qr_triple(7)});
  rows.push_back({"16", "<= 3", wh_candidate_set(16)});

  json table = json::array();
  for (const Row& r : rows) {
    const ExtendibilityVerdict v = classify_extendibility(r.set, c);
    table.push_back(json{{"dimension", r.dimension},
                         {"known_minimal_size", r.expected},
                         {"set", r.set.label()},
                         {"set_size", r.set.size()},
                         {"level", std::string(to_string(v.level))},
                         {"best_residual", v.search.best_residual},
                         {"found_vectors", v.search.found_vectors.size()},
                         {"extended_set_size", v.extended_set_size}});
  }
  const CvTriple symmetric = complete_cv_triple(1.0, 2.0 * pi / 3.0).first;
  table.push_back(json{{"dimension", "infinite"},
                       {"known_minimal_size", "3"},
                       {"set", "quadratures (q, q_2pi/3, q_4pi/3)"},
                       {"set_size", 3},
                       {"fourth_basis_residual", cv_fourth_basis_residual(symmetric)}});
  Outcome out;
  out.result = json{{"rows", table}};
  if (o.format == "text") {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %-6s %-5s %-24s %-24s %s\n", "dimension", "known", "size", "level",
                  "best_residual", "set");
    os << line;
    for (const json& row : table) {
      const bool discrete = row.contains("level");
      std::snprintf(line, sizeof line, "%-9s %-6s %-5zu %-24s %-24s %s\n",
                    row["dimension"].get<std::string>().c_str(), row["known_minimal_size"].get<std::string>().c_str(),
                    row["set_size"].get<std::size_t>(),
                    discrete ? row["level"].get<std::string>().c_str() : "NO_FOURTH_BASIS",
                    g17(discrete ? row["best_residual"].get<double>() : row["fourth_basis_residual"].get<double>())
                        .c_str(),
                    row["set"].get<std::string>().c_str());
      os << line;
    }
    out.text = os.str();
  }
  return out;
}

}  // namespace

std::string version() { return kVersion; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, validate and extend sets of mutually unbiased bases.", "mublab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  CommonOptions o;
  app.add_option("--tol", o.tol, "Validation / orthogonality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Random seed for searches")->envname("MUBLAB_SEED");
  app.add_option("--restarts", o.restarts, "Search restarts")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", o.max_iterations, "Iterations per restart")->check(CLI::PositiveNumber);
  app.add_option("--hit", o.hit, "Residual at or below which a vector counts as unbiased")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app.add_option("--out", o.out, "Write the result to this file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "Record wall-clock time in the manifest");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build a basis or a set of bases");
  c_construct->add_option("kind", construct.kind)
      ->required()
      ->check(CLI::IsMember({"fourier", "qr3mod4", "qr1mod4", "wh-set", "dim4-triple", "s6-pair", "complete-set"}));
  c_construct->add_option("--d", construct.d, "Dimension");
  c_construct->add_option("--p", construct.p, "Prime");
  c_construct->add_option("--a", construct.a, "dim4-triple parameter a");
  c_construct->add_option("--b", construct.b, "dim4-triple parameter b");
  c_construct->add_flag("--pair", construct.pair, "fourier: emit {I, F}");
  c_construct->add_flag("--triple", construct.triple, "qr kinds: emit {I, F, qr basis}");

  std::string file = "-";
  auto add_set_command = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", file, "JSON or text matrices; '-' reads stdin");
    return sc;
  };
  auto* c_verify = add_set_command("verify", "Validate a set of bases");
  auto* c_search = add_set_command("search", "Search for a vector unbiased to every basis");
  auto* c_classify = add_set_command("classify", "Classify extendibility of a set");
  auto* c_entropy = add_set_command("entropy", "Maximize the summed outcome entropy over pure states");
  auto* c_bloch = add_set_command("bloch", "Bloch vectors and complement dimensions");

  CvArgs cv;
  auto* c_cv = app.add_subcommand("cv", "Continuous-variable quadrature triples");
  c_cv->require_subcommand(1);
  auto* c_cv_complete = c_cv->add_subcommand("complete", "Complete {q, r q_theta} to mutually unbiased triples");
  auto* c_cv_fourth = c_cv->add_subcommand("fourth", "Residual of the best candidate fourth basis");
  for (auto* sc : {c_cv_complete, c_cv_fourth}) {
    sc->fallthrough();
    sc->add_option("--r", cv.r, "Scale of the second observable")->check(CLI::PositiveNumber);
    sc->add_option("--theta", cv.theta, "Angle of the second observable");
  }
  c_cv_fourth->add_option("--branch", cv.branch)->check(CLI::IsMember({"+", "-"}));
  c_cv_fourth->add_option("--nu-points", cv.nu_points)->check(CLI::Range(2, 100000));
  c_cv_fourth->add_option("--t-points", cv.t_points)->check(CLI::Range(2, 100000));

  auto* c_table1 = app.add_subcommand("table1", "Reproduce the minimal-set cardinality table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json params = json::object();
  std::string subcommand;
  std::string input_digest;
  Outcome result;
  try {
    auto with_set = [&](auto command) {
      const LoadedSet loaded = load_set(file, in);
      input_digest = loaded.digest;
      return command(loaded, o, params);
    };
    if (*c_construct) {
      subcommand = "construct";
      result = cmd_construct(construct, o, params);
    } else if (*c_verify) {
      subcommand = "verify";
      result = with_set(cmd_verify);
    } else if (*c_search) {
      subcommand = "search";
      result = with_set(cmd_search);
    } else if (*c_classify) {
      subcommand = "classify";
      result = with_set(cmd_classify);
    } else if (*c_entropy) {
      subcommand = "entropy";
      result = with_set(cmd_entropy);
    } else if (*c_bloch) {
      subcommand = "bloch";
      result = with_set(cmd_bloch);
    } else if (*c_cv_complete) {
      subcommand = "cv complete";
      result = cmd_cv_complete(cv, params);
    } else if (*c_cv_fourth) {
      subcommand = "cv fourth";
      result = cmd_cv_fourth(cv, params);
    } else if (*c_table1) {
      subcommand = "table1";
      result = cmd_table1(o, params);
    }
  } catch (const UsageError& e) {
    err << "mublab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "mublab: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mublab: " << e.what() << '\n';
    return kExitFailure;
  }

  json manifest{{"tool", "mublab"}, {"version", kVersion}, {"subcommand", subcommand}, {"parameters", params}};
  if (!input_digest.empty()) manifest["input_fnv1a"] = input_digest;
  if (subcommand == "search" || subcommand == "classify" || subcommand == "entropy" || subcommand == "table1") {
    manifest["seed"] = o.seed;
  }
  if (o.timing) {
    manifest["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  result.result["manifest"] = manifest;

  std::string rendered;
  if (o.format == "json") {
    rendered = result.result.dump(2) + "\n";
  } else if (!result.text.empty()) {
    rendered = result.text;
  } else {
    std::ostringstream os;
    render_text(result.result, "", os);
    rendered = os.str();
  }

  if (o.out.empty()) {
    out << rendered;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << rendered)) {
      err << "mublab: cannot write '" << o.out << "'\n";
      return kExitFailure;
    }
  }
  return result.exit_code;
}

}  // namespace mublab::cli
