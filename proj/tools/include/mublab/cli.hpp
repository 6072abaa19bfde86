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

#include <iosfwd>
#include <string>
#include <vector>

namespace mublab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNegative = 3;

/// Runs the command line `args` (without the program name). Input files
/// named "-" are read from `in`; results go to `out` unless --out is given,
/// diagnostics to `err`. Returns the process exit code:
///   0 success or positive finding, 2 usage or input error,
///   3 negative result (invalid set, NOT_FOUND, NO_VECTOR_FOUND),
///   1 any other failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace mublab::cli
