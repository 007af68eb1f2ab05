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

#include <doctest.h>

#include <random>

#include "finalg/congruence.hpp"
#include "finalg/error.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/structures.hpp"
#include "oracles.hpp"

using namespace finalg;

namespace {

const std::vector<std::string> kDiamondCongruences = {
    "0|1|2|3", "0|1 3|2", "0|1|2 3", "0 1|2 3", "0 2|1 3", "0|1 2 3", "0 1 2 3"};

std::vector<std::string> canonical_strings(const CongruenceLattice& lat) {
  std::vector<std::string> out;
  for (const Partition& p : lat.congruences) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("is_congruence on the diamond") {
  FiniteAlgebra a = diamond_semilattice();
  CHECK(is_congruence(a, Partition::from_blocks(4, {{0}, {1, 2, 3}})));
  CHECK(is_congruence(a, Partition::omega(4)));
  CHECK(is_congruence(a, Partition::full(4)));

  auto violation = compatibility_violation(a, Partition::from_blocks(4, {{0, 3}, {1}, {2}}));
  REQUIRE(violation.has_value());
  // re-verify the witness against the table
  std::vector<int> original = violation->args;
  std::vector<int> replaced = original;
  replaced[violation->position] = violation->replacement;
  CHECK(a.eval(violation->op, original) == violation->result);
  CHECK(a.eval(violation->op, replaced) == violation->replaced_result);
  Partition p = Partition::from_blocks(4, {{0, 3}, {1}, {2}});
  CHECK(p.same_block(original[violation->position], violation->replacement));
  CHECK_FALSE(p.same_block(violation->result, violation->replaced_result));
}

TEST_CASE("principal congruences of the diamond") {
  FiniteAlgebra a = diamond_semilattice();
  for (int e = 0; e < 4; ++e) CHECK(principal_congruence(a, e, e) == Partition::omega(4));
  CHECK(principal_congruence(a, 1, 2) == Partition::from_blocks(4, {{0}, {1, 2, 3}}));
  CHECK(principal_congruence(a, 0, 1) == Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(principal_congruence(a, 0, 9), std::invalid_argument);
}

TEST_CASE("congruence_generated_by") {
  FiniteAlgebra a = diamond_semilattice();
  CHECK(congruence_generated_by(a, {}) == Partition::omega(4));
  CHECK(congruence_generated_by(a, {{2, 3}, {1, 3}}) ==
        Partition::from_blocks(4, {{0}, {1, 2, 3}}));

  std::mt19937_64 rng(23);
  for (const FiniteAlgebra& g : oracles::random_groupoids(35, 20, 3, 5)) {
    int x = static_cast<int>(rng() % g.size);
    int y = static_cast<int>(rng() % g.size);
    CHECK(congruence_generated_by(g, {{x, y}}) == principal_congruence(g, x, y));
  }
}

TEST_CASE("principal congruence is the least congruence containing the pair") {
  for (const FiniteAlgebra& a : oracles::random_groupoids(41, 25, 3, 4)) {
    auto all = oracles::brute_force_congruences(a);
    for (int x = 0; x < a.size; ++x) {
      for (int y = x + 1; y < a.size; ++y) {
        Partition principal = principal_congruence(a, x, y);
        // meet of the brute-force congruences containing (x,y)
        Partition least = Partition::full(a.size);
        for (const Partition& c : all)
          if (c.same_block(x, y)) least = meet(least, c);
        CHECK(principal == least);
      }
    }
  }
}

TEST_CASE("all_congruences of the diamond matches the known lattice") {
  CongruenceLattice lat = all_congruences(diamond_semilattice());
  CHECK(canonical_strings(lat) == kDiamondCongruences);
  std::vector<std::pair<int, int>> expected_covers = {{0, 1}, {0, 2}, {1, 4}, {1, 5}, {2, 3},
                                                      {2, 5}, {3, 6}, {4, 6}, {5, 6}};
  CHECK(lat.covers == expected_covers);
  CHECK(lat.atom_indices() == std::vector<int>{1, 2});
}

TEST_CASE("all_congruences of the three-element chain") {
  CongruenceLattice lat = all_congruences(chain_semilattice(3));
  CHECK(canonical_strings(lat) ==
        std::vector<std::string>{"0|1|2", "0 1|2", "0|1 2", "0 1 2"});
}

TEST_CASE("one-element algebra has only omega") {
  CongruenceLattice lat = all_congruences(chain_semilattice(1));
  CHECK(lat.congruences.size() == 1);
  CHECK(lat.atom_indices().empty());
}

TEST_CASE("all_congruences equals the brute-force filter") {
  auto check = [](const FiniteAlgebra& a) {
    CongruenceLattice lat = all_congruences(a);
    auto brute = oracles::brute_force_congruences(a);
    REQUIRE(lat.congruences.size() == brute.size());
    for (size_t i = 0; i < brute.size(); ++i) CHECK(lat.congruences[i] == brute[i]);
  };
  for (const FiniteAlgebra& a : oracles::fixture_corpus())
    if (a.size <= 6) check(a);
  for (const FiniteAlgebra& a : oracles::random_groupoids(7, 30, 3, 5)) check(a);
}

TEST_CASE("lattice closure under join and meet") {
  for (const FiniteAlgebra& a : oracles::random_groupoids(91, 15, 3, 5)) {
    CongruenceLattice lat = all_congruences(a);
    for (const Partition& p : lat.congruences) {
      for (const Partition& q : lat.congruences) {
        CHECK(lat.index_of(join(p, q)) >= 0);
        CHECK(lat.index_of(meet(p, q)) >= 0);
      }
    }
  }
}

TEST_CASE("lattice size guard") {
  FiniteAlgebra big;
  big.name = "big";
  big.size = 13;
  CHECK_THROWS_AS(all_congruences(big), limit_error);
}

TEST_CASE("atoms and covers accessors") {
  FiniteAlgebra a = diamond_semilattice();
  CongruenceLattice lat = all_congruences(a);
  auto atom_list = atoms(lat);
  REQUIRE(atom_list.size() == 2);
  CHECK(atom_list[0] == Partition::from_blocks(4, {{0}, {2}, {1, 3}}));
  CHECK(atom_list[1] == Partition::from_blocks(4, {{0}, {1}, {2, 3}}));

  auto above_theta4 = covers_of(lat, Partition::from_blocks(4, {{0}, {1, 2, 3}}));
  REQUIRE(above_theta4.size() == 1);
  CHECK(above_theta4[0] == Partition::full(4));

  CHECK_THROWS_AS(covers_of(lat, Partition::from_blocks(4, {{0, 3}, {1}, {2}})),
                  std::invalid_argument);
}

TEST_CASE("modularity and semimodularity") {
  CongruenceLattice diamond = all_congruences(diamond_semilattice());
  CHECK_FALSE(is_modular(diamond));
  CHECK(is_semimodular(diamond));

  CongruenceLattice chain = all_congruences(chain_semilattice(3));
  CHECK(is_modular(chain));
  CHECK(is_semimodular(chain));

  CongruenceLattice two = all_congruences(two_element_implication());
  REQUIRE(two.congruences.size() == 2);
  CHECK(is_modular(two));
  CHECK(is_semimodular(two));
}

TEST_CASE("modular law agrees with the pentagon search") {
  for (const FiniteAlgebra& a : oracles::random_groupoids(57, 25, 3, 5)) {
    CongruenceLattice lat = all_congruences(a);
    CHECK(is_modular(lat) == !oracles::has_n5(lat));
  }
  for (const FiniteAlgebra& a : oracles::fixture_corpus()) {
    CongruenceLattice lat = all_congruences(a);
    CHECK(is_modular(lat) == !oracles::has_n5(lat));
  }
}

TEST_CASE("congruence uniformity") {
  CHECK_FALSE(is_congruence_uniform(diamond_semilattice()));
  CHECK(is_congruence_uniform(cyclic_addition(3)));
  CHECK(is_congruence_uniform(chain_semilattice(1)));
  CHECK(is_congruence_uniform(xor_pairs()));
}

TEST_CASE("n-permutability") {
  CHECK(is_n_permutable(cyclic_addition(3), 2));
  CHECK_FALSE(is_n_permutable(chain_semilattice(3), 2));
  // |Con| = 2: any degree works
  for (int n = 2; n <= 4; ++n) CHECK(is_n_permutable(two_element_implication(), n));
  CHECK_THROWS_AS(is_n_permutable(cyclic_addition(3), 1), std::invalid_argument);
}

TEST_CASE("cover reachability equals strict inclusion") {
  // the Hasse edges emitted to DOT must generate exactly the inclusion order
  for (const FiniteAlgebra& a : oracles::random_groupoids(63, 15, 3, 5)) {
    CongruenceLattice lat = all_congruences(a);
    int m = static_cast<int>(lat.congruences.size());
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (const auto& [lo, hi] : lat.covers) reach[lo][hi] = true;
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(reach[i][j] == (i != j && lat.leq[i][j]));
  }
}

TEST_CASE("compatibility agrees with the unary polynomial criterion") {
  std::mt19937 rng(77);
  auto polynomial_compatible = [](const FiniteAlgebra& a, const Partition& p) {
    for (const UnaryFunction& q : unary_polynomials(a)) {
      for (int x = 0; x < a.size; ++x)
        for (int y = x + 1; y < a.size; ++y)
          if (p.same_block(x, y) && !p.same_block(q[x], q[y])) return false;
    }
    return true;
  };
  for (const FiniteAlgebra& a : oracles::random_groupoids(99, 12, 3, 5)) {
    for (int round = 0; round < 8; ++round) {
      std::vector<int> raw(a.size);
      for (int& v : raw) v = static_cast<int>(rng() % a.size);
      Partition p(raw);
      CHECK(is_congruence(a, p) == polynomial_compatible(a, p));
    }
  }
}
