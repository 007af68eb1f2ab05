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

#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/congruence.hpp"
#include "finalg/partition.hpp"
#include "finalg/subuniverse.hpp"

namespace finalg {

/// Quotient by a congruence. The universe of `algebra` is the set of block
/// indices of theta (canonical first-occurrence order).
struct QuotientAlgebra {
  FiniteAlgebra algebra;
  Partition theta;
  std::vector<int> representative_of;  // block index -> least element

  int class_of(int element) const { return theta.block_of(element); }
};

/// Throws std::invalid_argument when theta is not a congruence of a.
QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Partition& theta);

/// Union of the given theta-blocks.
ElementSet lift_subset(const Partition& theta, const std::vector<int>& blocks);

/// phi/theta as a partition of the theta-blocks. Requires theta ⊆ phi, both
/// congruences of a.
Partition project_congruence(const FiniteAlgebra& a, const Partition& theta,
                             const Partition& phi);

/// Preimage of a congruence psi of a/theta. Inverse of project_congruence on
/// the congruences above theta.
Partition lift_congruence(const FiniteAlgebra& a, const Partition& theta, const Partition& psi);

/// Correspondence between Rees-shaped relations of a quotient and of the base
/// algebra, for B a set of theta-blocks with union C:
///   quotient_rees:     B² ∪ ω is a congruence of a/theta
///   base_rees:         C² ∪ theta is a congruence of a
///   equality_holds:    the projection of C² ∪ theta equals B² ∪ ω
///                      (vacuously true unless both relations are congruences)
///   subuniverse_match: B closed in a/theta iff C closed in a
struct QuotientReesCheck {
  bool quotient_rees = false;
  bool base_rees = false;
  bool equality_holds = false;
  bool subuniverse_match = false;
};
QuotientReesCheck quotient_rees_correspondence(const FiniteAlgebra& a, const Partition& theta,
                                               const std::vector<int>& blocks);

/// Whether a/theta is quasi-Rees, decided entirely in the base algebra: every
/// congruence strictly above theta has a class C that is a subuniverse of a,
/// not a theta-block, with C² ∪ theta a congruence of a.
bool quotient_quasi_rees_via_base(const FiniteAlgebra& a, const Partition& theta);

/// Whether a/theta has the one-block property, decided in the base algebra:
/// every cover of theta is of the form (union of theta-blocks)² ∪ theta,
/// i.e. its projection has exactly one non-singleton block.
bool quotient_obp_via_base(const FiniteAlgebra& a, const Partition& theta);

}  // namespace finalg
