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

#include "mublab/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mublab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f <= n / f; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be >= 2");
  return prime_factors(n).front();
}

bool ResidueClasses::is_residue(int m) const {
  const int r = ((m % p) + p) % p;
  return std::binary_search(residues.begin(), residues.end(), r);
}

ResidueClasses quadratic_residues(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("quadratic_residues: " + std::to_string(p) +
                                " is not an odd prime");
  }
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (long long x = 0; x < p; ++x) square[static_cast<std::size_t>((x * x) % p)] = true;

  ResidueClasses out;
  out.p = p;
  for (int m = 0; m < p; ++m) {
    (square[static_cast<std::size_t>(m)] ? out.residues : out.non_residues).push_back(m);
  }
  return out;
}

}  // namespace mublab
