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

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mublab/bloch.hpp"
#include "mublab/cv.hpp"
#include "mublab/extender.hpp"
#include "mublab/linalg.hpp"

namespace mublab {

// Interchange formats.
//
// JSON (canonical):
//   {"dimension": d, "bases": [ basis, ... ]}
//   basis = [ row, ... ]  (d rows), row = [ [re, im], ... ]  (d entries)
// Extra keys ("label", "manifest", ...) are ignored on input. Doubles are
// written in shortest round-trip form, so parsing reproduces every bit.
//
// Text (input only): one matrix row per line, entries "re+imj" separated
// by tabs (any whitespace is accepted); blank lines separate bases.
// Lines starting with '#' are comments.

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const CVec& v);
nlohmann::json to_json(const Basis& b);
nlohmann::json to_json(const MubSet& set);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const ExtendibilityVerdict& verdict);
nlohmann::json to_json(const BlochVector& v);
nlohmann::json to_json(const CvObservable& o);
nlohmann::json to_json(const CvTriple& t);

CVec cvec_from_json(const nlohmann::json& j);
MubSet mub_set_from_json(const nlohmann::json& j);

Complex parse_complex(std::string_view token);
MubSet parse_text_matrices(std::string_view text);

/// Detects JSON (first non-space character '{') or the text format.
/// Throws ParseError on malformed input.
MubSet parse_mub_set(std::string_view text);

/// Text rendering with 17 significant digits, re-readable by
/// parse_text_matrices.
std::string format_text_matrices(const MubSet& set);

}  // namespace mublab
