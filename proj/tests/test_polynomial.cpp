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

#include <algorithm>

#include "finalg/error.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/quotient.hpp"
#include "finalg/structures.hpp"
#include "oracles.hpp"

using namespace finalg;

TEST_CASE("unary polynomials of the diamond") {
  std::vector<UnaryFunction> p1 = unary_polynomials(diamond_semilattice());
  // identity, four constants, x -> x∨1 and x -> x∨2 (x∨0 = x, x∨3 = const 3)
  CHECK(p1.size() == 7);
  auto has = [&](const UnaryFunction& f) {
    return std::find(p1.begin(), p1.end(), f) != p1.end();
  };
  CHECK(has({0, 1, 2, 3}));
  for (int c = 0; c < 4; ++c) CHECK(has(UnaryFunction(4, c)));
  CHECK(has({1, 1, 3, 3}));
  CHECK(has({2, 3, 2, 3}));
  CHECK(std::is_sorted(p1.begin(), p1.end()));
}

TEST_CASE("degenerate polynomial sets") {
  FiniteAlgebra one;
  one.name = "one";
  one.size = 1;
  CHECK(unary_polynomials(one).size() == 1);

  // no operations of arity >= 1: identity plus constants
  FiniteAlgebra bare;
  bare.name = "bare";
  bare.size = 3;
  bare.signature.symbols.push_back({"c", 0});
  bare.tables.push_back({2});
  CHECK(unary_polynomials(bare).size() == 4);
}

TEST_CASE("polynomial size guard") {
  FiniteAlgebra big;
  big.name = "big";
  big.size = 8;
  CHECK_THROWS_AS(unary_polynomials(big), limit_error);
}

TEST_CASE("closure matches the pass-based oracle") {
  auto check = [](const FiniteAlgebra& a) {
    std::vector<UnaryFunction> fast = unary_polynomials(a);
    std::vector<UnaryFunction> slow = oracles::naive_unary_polynomials(a);
    CHECK(fast == slow);
    // insertion order must not matter
    for (unsigned seed : {1u, 2u, 3u})
      CHECK(oracles::naive_unary_polynomials(a, seed) == slow);
  };
  for (const FiniteAlgebra& a : oracles::fixture_corpus())
    if (a.size <= 4) check(a);
  for (const FiniteAlgebra& a : oracles::random_groupoids(19, 12, 3, 4)) check(a);
}

TEST_CASE("closure contains seeds and is closed under composition") {
  for (const FiniteAlgebra& a : oracles::random_groupoids(29, 8, 3, 4)) {
    std::vector<UnaryFunction> p1 = unary_polynomials(a);
    auto member = [&](const UnaryFunction& f) {
      return std::binary_search(p1.begin(), p1.end(), f);
    };
    UnaryFunction identity(a.size);
    for (int i = 0; i < a.size; ++i) identity[i] = i;
    CHECK(member(identity));
    for (int c = 0; c < a.size; ++c) CHECK(member(UnaryFunction(a.size, c)));
    for (const UnaryFunction& g : p1) {
      for (const UnaryFunction& h : p1) {
        UnaryFunction composite(a.size);
        for (int x = 0; x < a.size; ++x)
          composite[x] = a.eval(0, std::vector<int>{g[x], h[x]});
        CHECK(member(composite));
      }
    }
  }
}

TEST_CASE("quotient polynomials match the quotient's own closure") {
  auto check = [](const FiniteAlgebra& a) {
    for (const Partition& theta : all_congruences(a).congruences) {
      std::vector<UnaryFunction> projected = quotient_unary_polynomials(a, theta);
      std::vector<UnaryFunction> direct =
          unary_polynomials(quotient_algebra(a, theta).algebra);
      CHECK(projected == direct);
    }
  };
  check(diamond_semilattice());
  check(two_element_implication());
  check(cyclic_loop(3));
  for (const FiniteAlgebra& a : oracles::random_groupoids(43, 10, 3, 4)) check(a);
}

TEST_CASE("quotient polynomials at the lattice ends") {
  FiniteAlgebra a = diamond_semilattice();
  CHECK(quotient_unary_polynomials(a, Partition::omega(4)) == unary_polynomials(a));
  auto collapsed = quotient_unary_polynomials(a, Partition::full(4));
  REQUIRE(collapsed.size() == 1);
  CHECK(collapsed[0] == UnaryFunction{0});
  CHECK_THROWS_AS(quotient_unary_polynomials(a, Partition::from_blocks(4, {{0, 3}, {1}, {2}})),
                  std::invalid_argument);
}
