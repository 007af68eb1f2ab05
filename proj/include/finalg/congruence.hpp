// Copyright 2026 the finalg authors
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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/partition.hpp"

namespace finalg {

/// A witness that a partition is not compatible with an operation: replacing
/// args[position] by the equivalent element `replacement` moves the result to
/// a different block.
struct CompatibilityViolation {
  int op = 0;
  std::vector<int> args;
  int position = 0;
  int replacement = 0;
  int result = 0;
  int replaced_result = 0;
  std::string describe(const FiniteAlgebra& a) const;
};

/// Single-coordinate compatibility check.
std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& a,
                                                              const Partition& p);
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Least congruence identifying x and y (union-find plus a worklist of pairs
/// closed under all one-variable translations of the basic operations).
Partition principal_congruence(const FiniteAlgebra& a, int x, int y);
Partition congruence_generated_by(const FiniteAlgebra& a,
                                  const std::vector<std::pair<int, int>>& pairs);

/// All congruences in a canonical total order (more blocks first, then
/// lexicographic on the canonical labels), with the Hasse cover relation.
struct CongruenceLattice {
  std::vector<Partition> congruences;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted
  std::vector<std::vector<bool>> leq;       // leq[i][j]: congruences[i] ⊆ congruences[j]

  int index_of(const Partition& p) const;  // -1 when absent
  std::vector<int> atom_indices() const;   // covers of omega (index 0)
  std::vector<int> cover_indices_of(int i) const;
  bool covered_by(int i, int j) const;
};

/// Join-closure of the principal congruences. Guarded by
/// limits().max_congruence_lattice_size.
CongruenceLattice all_congruences(const FiniteAlgebra& a);

std::vector<Partition> atoms(const CongruenceLattice& lat);
/// Minimal congruences strictly above theta; throws std::invalid_argument
/// when theta is not in the lattice.
std::vector<Partition> covers_of(const CongruenceLattice& lat, const Partition& theta);

/// Modular law over all triples.
bool is_modular(const CongruenceLattice& lat);
/// Upper semimodularity in cover form: x∧y ≺ x implies y ≺ x∨y.
bool is_semimodular(const CongruenceLattice& lat);

/// Every congruence has blocks of one common size.
bool is_congruence_uniform(const FiniteAlgebra& a);
bool is_congruence_uniform(const CongruenceLattice& lat);

/// Alternating relational compositions of length n agree for every pair of
/// congruences. n >= 2.
bool is_n_permutable(const FiniteAlgebra& a, int n);
bool is_n_permutable(const std::vector<Partition>& congruences, int n);

}  // namespace finalg
