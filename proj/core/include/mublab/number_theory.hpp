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

#include <cstdint>
#include <vector>

namespace mublab {

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order; empty for n < 2.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// Quadratic residues modulo an odd prime, with 0 counted as a residue.
struct ResidueClasses {
  int p = 0;
  std::vector<int> residues;      // sorted, includes 0
  std::vector<int> non_residues;  // sorted

  bool is_residue(int m) const;
};

/// Throws std::invalid_argument unless p is an odd prime.
ResidueClasses quadratic_residues(int p);

}  // namespace mublab
