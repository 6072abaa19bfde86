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

#include "mublab/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace mublab {

using nlohmann::json;

namespace {

double parse_double(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed complex entry '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

Basis basis_from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t d = rows.size();
  CMat m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(d));
    }
    for (std::size_t k = 0; k < d; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return Basis(std::move(m));
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVec& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v[k]));
  return out;
}

json to_json(const Basis& b) {
  json rows = json::array();
  for (std::size_t k = 0; k < b.dim(); ++k) rows.push_back(to_json(b.state(k)));
  return rows;
}

json to_json(const MubSet& set) {
  json bases = json::array();
  json labels = json::array();
  for (const auto& b : set.bases()) {
    bases.push_back(to_json(b));
    labels.push_back(b.label());
  }
  return json{{"dimension", set.dim()}, {"label", set.label()}, {"basis_labels", labels}, {"bases", bases}};
}

json to_json(const ValidationReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.biased_pairs) pairs.push_back(json::array({a, b}));
  return json{{"ok", r.ok},
              {"tolerance", r.tolerance},
              {"worst_orthonormality_defect", r.worst_orthonormality_defect},
              {"worst_unbiasedness_defect", r.worst_unbiasedness_defect},
              {"non_orthonormal_bases", r.non_orthonormal_bases},
              {"biased_pairs", pairs}};
}

json to_json(const SearchReport& r) {
  json vectors = json::array();
  for (const auto& v : r.found_vectors) vectors.push_back(to_json(v));
  return json{{"verdict", std::string(to_string(r.verdict))},
              {"best_residual", r.best_residual},
              {"smallest_residuals", r.smallest_residuals},
              {"restarts", r.restarts},
              {"restarts_converged", r.restarts_converged},
              {"seed", r.seed},
              {"found_count", r.found_vectors.size()},
              {"found_vectors", vectors}};
}

json to_json(const ExtendibilityVerdict& v) {
  json bases = json::array();
  for (const auto& b : v.new_bases) bases.push_back(to_json(b));
  return json{{"level", std::string(to_string(v.level))},
              {"extended_set_size", v.extended_set_size},
              {"new_bases", bases},
              {"search", to_json(v.search)}};
}

json to_json(const BlochVector& v) {
  return json{{"dimension", v.dim}, {"coords", std::vector<double>(v.coords.begin(), v.coords.end())}};
}

json to_json(const CvObservable& o) { return json{{"r", o.r}, {"theta", o.theta}}; }

json to_json(const CvTriple& t) {
  json members = json::array();
  for (const auto& m : t.members) members.push_back(to_json(m));
  return json{{"branch", std::string(to_string(t.branch))}, {"members", members}};
}

CVec cvec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("state must be a non-empty array of [re, im] pairs");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    v[static_cast<Eigen::Index>(k)] = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

MubSet mub_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bases") || !j["bases"].is_array() || j["bases"].empty()) {
    throw ParseError("expected an object with a non-empty \"bases\" array");
  }
  std::vector<Basis> bases;
  const json* labels = j.contains("basis_labels") && j["basis_labels"].is_array() ? &j["basis_labels"] : nullptr;
  for (std::size_t i = 0; i < j["bases"].size(); ++i) {
    const json& rows_json = j["bases"][i];
    if (!rows_json.is_array()) throw ParseError("basis " + std::to_string(i) + " is not an array of rows");
    std::vector<std::vector<Complex>> rows;
    for (const json& row : rows_json) {
      const CVec v = cvec_from_json(row);
      rows.emplace_back(v.data(), v.data() + v.size());
    }
    if (rows.empty()) throw ParseError("basis " + std::to_string(i) + " is empty");
    Basis b = basis_from_rows(rows);
    if (labels && i < labels->size() && (*labels)[i].is_string()) b = Basis(b.matrix(), (*labels)[i].get<std::string>());
    bases.push_back(std::move(b));
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  try {
    MubSet set(std::move(bases), std::move(label));
    if (j.contains("dimension") && (!j["dimension"].is_number_unsigned() || j["dimension"].get<std::size_t>() != set.dim())) {
      throw ParseError("\"dimension\" does not match the basis size");
    }
    return set;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Complex parse_complex(std::string_view token) {
  const std::string_view s = trim(token);
  if (s.empty()) throw ParseError("empty complex entry");
  const char last = s.back();
  if (last != 'j' && last != 'i' && last != 'J') return {parse_double(s, token), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, token);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, split), token), imag_part(body.substr(split))};
}

MubSet parse_text_matrices(std::string_view text) {
  std::vector<Basis> bases;
  std::vector<std::vector<Complex>> rows;
  auto flush = [&] {
    if (rows.empty()) return;
    bases.push_back(basis_from_rows(rows));
    rows.clear();
  };
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<Complex> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) row.push_back(parse_complex(line.substr(pos, end - pos)));
      pos = end;
    }
    rows.push_back(std::move(row));
  }
  flush();
  if (bases.empty()) throw ParseError("no matrices found in text input");
  try {
    return MubSet(std::move(bases));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MubSet parse_mub_set(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return mub_set_from_json(j);
  }
  return parse_text_matrices(text);
}

std::string format_text_matrices(const MubSet& set) {
  std::ostringstream os;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) os << '\n';
    os << "# " << (set[i].label().empty() ? "basis " + std::to_string(i) : set[i].label()) << '\n';
    const CMat& m = set[i].matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c > 0) os << '\t';
        const Complex z = m(r, c);
        const std::string im = format_g17(z.imag());
        os << format_g17(z.real()) << (im.front() == '-' ? "" : "+") << im << 'j';
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace mublab
