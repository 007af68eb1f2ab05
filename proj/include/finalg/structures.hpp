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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Fixtures.

/// Four-element join-semilattice over the diamond order: 0 below the
/// incomparable pair 1, 2, with top 3. One binary symbol "join".
FiniteAlgebra diamond_semilattice();
/// Same, with the top adjoined as a nullary symbol "one".
FiniteAlgebra diamond_semilattice_with_top();
/// Join (max) on the chain 0 < 1 < ... < n-1.
FiniteAlgebra chain_semilattice(int n);
/// Meet (min) on the same chain plus a nullary "zero" — 0 is absorbing.
FiniteAlgebra chain_meet_with_zero(int n);
/// Addition mod n as a bare groupoid.
FiniteAlgebra cyclic_addition(int n);
/// Addition mod n with a nullary "zero".
FiniteAlgebra cyclic_addition_with_zero(int n);
/// Componentwise addition on pairs mod 2 (xor on {0..3}) as a groupoid.
FiniteAlgebra xor_pairs();
/// The cyclic group of order n in full loop signature (mul, rdiv, ldiv, one).
FiniteAlgebra cyclic_loop(int n);
/// Two-element implication algebra: imp(x,y) = x -> y.
FiniteAlgebra two_element_implication();
/// Implication algebra of the four-element Boolean algebra.
FiniteAlgebra four_element_implication();
/// A four-element directoid that is not a semilattice: 0,1 < 2 < 3 with
/// 0 ⊔ 1 = 1 ⊔ 0 = 3.
FiniteAlgebra sample_directoid();

// Directoids.

/// The four directoid identities, checked exhaustively. Requires exactly one
/// binary symbol and nothing else; other signatures yield false.
bool is_directoid(const FiniteAlgebra& a);
/// {(x,y) : x ⊔ y = y}. Throws std::invalid_argument unless is_directoid.
std::vector<std::pair<int, int>> directoid_order(const FiniteAlgebra& a);
/// All directoid tables on {0..n-1}, lexicographic. Guarded by
/// limits().max_directoid_enum_size.
std::vector<FiniteAlgebra> enumerate_directoids(int n);

// Implication algebras.

bool is_implication_algebra(const FiniteAlgebra& a);
/// The common value of x·x when it is constant.
std::optional<int> implication_unit(const FiniteAlgebra& a);

// Loops.

/// Signature (mul, rdiv, ldiv, one) of arities (2,2,2,0) satisfying the loop
/// identities; other signature shapes yield false.
bool is_loop(const FiniteAlgebra& a);
/// Builds the full loop signature from an n×n Cayley table (flat, row-major).
/// Throws std::invalid_argument when the table is not a Latin square or has
/// no identity element.
FiniteAlgebra loop_from_cayley(const std::vector<int>& table, int n,
                               const std::string& name = "loop");

// Enumeration and random generation.

/// All binary tables on {0..n-1} in lexicographic order, optionally pruned to
/// canonical representatives (minimum table under relabeling) and filtered.
/// Guarded by limits().max_table_enum_size.
std::vector<FiniteAlgebra> enumerate_groupoids(
    int n, bool up_to_iso = false,
    const std::function<bool(const FiniteAlgebra&)>& filter = {});

/// Exhaustive enumeration over all tables of an arbitrary signature.
std::vector<FiniteAlgebra> enumerate_algebras(
    const Signature& sig, int n, bool up_to_iso = false,
    const std::function<bool(const FiniteAlgebra&)>& filter = {});

struct GeneratorSpec {
  Signature signature;
  int size = 0;
  bool exhaustive = true;
  uint64_t seed = 0;    // random mode
  uint64_t count = 0;   // random mode
  bool up_to_iso = false;
};

/// Seed-deterministic stream of `count` random algebras (names r0, r1, ...).
std::vector<FiniteAlgebra> random_algebras(const GeneratorSpec& spec);
FiniteAlgebra random_algebra(const Signature& sig, int n, std::mt19937_64& rng,
                             std::string name);

}  // namespace finalg
