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
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/congruence.hpp"
#include "finalg/partition.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/subuniverse.hpp"

namespace finalg {

/// B² ∪ ω as a partition: one block B (when |B| >= 2), singletons elsewhere.
/// Not necessarily a congruence.
Partition rees_extension(const ElementSet& block);

/// B² ∪ ω is a congruence of a.
bool is_rees_block(const FiniteAlgebra& a, const ElementSet& block);

/// Equivalent route through the unary polynomials: for every pair in B²,
/// every p maps it into B² ∪ ω.
bool is_rees_block_via_polynomials(const FiniteAlgebra& a, const ElementSet& block,
                                   const std::vector<UnaryFunction>& p1);

struct ReesVerdict {
  bool holds = false;
  std::optional<ElementSet> failing_subuniverse;  // first failure in canonical order
};

/// B² ∪ ω is a congruence for every subuniverse B.
ReesVerdict is_rees_algebra(const FiniteAlgebra& a);
/// Same property through the two-generated subalgebras: every subuniverse of
/// every ⟨{x,y}⟩ must be a Rees block of a itself.
bool is_rees_algebra_via_two_generated(const FiniteAlgebra& a);
/// Same property through the unary polynomials and generated subuniverses.
bool is_rees_algebra_via_polynomials(const FiniteAlgebra& a);

struct QuasiReesVerdict {
  bool holds = false;
  // When true: for every non-trivial congruence the chosen class (the
  // qualifying block with the least minimum element), in lattice order.
  std::vector<std::pair<Partition, ElementSet>> witnesses;
  std::optional<Partition> failing_congruence;
};

/// Every non-trivial congruence has a class C that is a non-trivial
/// subuniverse with C² ∪ ω a congruence. Vacuously true when there is no
/// non-trivial congruence.
QuasiReesVerdict is_quasi_rees(const FiniteAlgebra& a);
QuasiReesVerdict is_quasi_rees(const FiniteAlgebra& a, const CongruenceLattice& lat);

struct OneBlockVerdict {
  bool holds = false;
  // Non-singleton blocks per atom, in lattice order.
  std::vector<std::pair<Partition, std::vector<ElementSet>>> atom_blocks;
  std::optional<Partition> failing_atom;
};

/// Every atom of the congruence lattice has exactly one non-singleton block.
OneBlockVerdict has_one_block_property(const FiniteAlgebra& a);
OneBlockVerdict has_one_block_property(const FiniteAlgebra& a, const CongruenceLattice& lat);

/// Pairwise characterization of the one-block property: whenever (a,b) lies
/// in Θ(x,y) for every non-diagonal (x,y) ∈ Θ(a,b), all those pairs lie in
/// [a]Θ(a,b).
bool obp_characterization_holds(const FiniteAlgebra& a);

/// θ -> [e]θ is injective on the congruences.
bool is_weakly_regular_at(const FiniteAlgebra& a, int e);
bool is_weakly_regular_at(const FiniteAlgebra& a, int e, const CongruenceLattice& lat);

/// f(v(x),...,v(x)) ≈ v(x) for every symbol f; v may use at most one
/// variable.
bool check_closed_image_term(const FiniteAlgebra& a, const Term& v);

/// All terms agree at (x,y) exactly when x = y. Terms use at most the
/// variables x and y.
bool check_diagonal_separation(const FiniteAlgebra& a, const std::vector<Term>& terms);

/// All terms equal `unit` at (x,y) exactly when x = y.
bool check_unit_separation(const FiniteAlgebra& a, int unit, const std::vector<Term>& terms);

/// Per non-trivial congruence: the first block (by least element) that is a
/// non-trivial subuniverse, when one exists. Lattice order.
std::vector<std::pair<Partition, std::optional<ElementSet>>> nontrivial_subuniverse_class_report(
    const FiniteAlgebra& a);

}  // namespace finalg
