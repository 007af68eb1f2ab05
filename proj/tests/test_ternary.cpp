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

// Operations of arity three exercise the stride arithmetic in the
// compatibility check, the context enumeration in the congruence worklist,
// and the tuple walks in the polynomial closure.

#include <doctest.h>

#include "finalg/error.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/properties.hpp"
#include "finalg/textio.hpp"
#include "oracles.hpp"

using namespace finalg;

namespace {

// majority vote on {0,1}
FiniteAlgebra majority2() {
  FiniteAlgebra a;
  a.name = "maj2";
  a.size = 2;
  a.signature.symbols.push_back({"maj", 3});
  a.tables.push_back({0, 0, 0, 1, 0, 1, 1, 1});
  return a;
}

// t(x,y,z) = z when x = y, else x
FiniteAlgebra discriminator(int n) {
  FiniteAlgebra a;
  a.name = "disc" + std::to_string(n);
  a.size = n;
  a.signature.symbols.push_back({"t", 3});
  auto& table = a.tables.emplace_back();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) table.push_back(x == y ? z : x);
  return a;
}

}  // namespace

TEST_CASE("ternary evaluation uses row-major order with the left argument slowest") {
  FiniteAlgebra a = majority2();
  CHECK(validate(a).empty());
  CHECK(a.eval("maj", std::vector<int>{0, 1, 1}) == 1);
  CHECK(a.eval("maj", std::vector<int>{1, 0, 0}) == 0);
  CHECK(a.eval("maj", std::vector<int>{1, 1, 0}) == 1);

  FiniteAlgebra d = discriminator(3);
  CHECK(validate(d).empty());
  CHECK(d.eval("t", std::vector<int>{1, 1, 2}) == 2);
  CHECK(d.eval("t", std::vector<int>{1, 2, 0}) == 1);
}

TEST_CASE("majority algebra basics") {
  FiniteAlgebra a = majority2();
  CHECK(is_idempotent_algebra(a));
  CHECK(absorbing_elements(a).empty());

  CongruenceLattice lat = all_congruences(a);
  REQUIRE(lat.congruences.size() == 2);
  CHECK(lat.congruences == oracles::brute_force_congruences(a));

  // majority is monotone and compositions of monotone functions with
  // constants stay monotone, so negation never appears
  std::vector<UnaryFunction> p1 = unary_polynomials(a);
  REQUIRE(p1.size() == 3);
  CHECK(p1 == std::vector<UnaryFunction>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(p1 == oracles::naive_unary_polynomials(a));

  CHECK(is_rees_algebra(a).holds);
  CHECK(is_quasi_rees(a).holds);
}

TEST_CASE("ternary discriminator algebras are simple") {
  for (int n = 2; n <= 4; ++n) {
    FiniteAlgebra d = discriminator(n);
    CongruenceLattice lat = all_congruences(d);
    REQUIRE(lat.congruences.size() == 2);
    CHECK(lat.congruences[0] == Partition::omega(n));
    CHECK(lat.congruences[1] == Partition::full(n));
    CHECK(lat.congruences == oracles::brute_force_congruences(d));
    CHECK(is_quasi_rees(d).holds);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) CHECK(principal_congruence(d, x, y) == Partition::full(n));
  }
}

TEST_CASE("ternary compatibility violations carry a usable witness") {
  FiniteAlgebra d = discriminator(3);
  Partition p = Partition::from_blocks(3, {{0, 1}, {2}});
  auto violation = compatibility_violation(d, p);
  REQUIRE(violation.has_value());
  std::vector<int> replaced = violation->args;
  replaced[violation->position] = violation->replacement;
  CHECK(d.eval(violation->op, violation->args) == violation->result);
  CHECK(d.eval(violation->op, replaced) == violation->replaced_result);
  CHECK(p.same_block(violation->args[violation->position], violation->replacement));
  CHECK_FALSE(p.same_block(violation->result, violation->replaced_result));
}

TEST_CASE("ternary tables round-trip through the file format") {
  for (const FiniteAlgebra& a : {majority2(), discriminator(3)}) {
    FiniteAlgebra round = parse_algebra(serialize_algebra(a));
    CHECK(round.tables == a.tables);
    CHECK(round.signature.symbols[0].arity == 3);
  }
  // terms over a ternary symbol
  FiniteAlgebra d = discriminator(3);
  Term t = parse_term("t(x, y, t(x, x, z))", d.signature);
  CHECK(eval_term(d, t, {1, 1, 2}) == 2);
  CHECK_THROWS_AS(parse_term("t(x, y)", d.signature), parse_error);
}

TEST_CASE("random ternary algebras agree with the brute-force oracle") {
  Signature sig;
  sig.symbols.push_back({"t", 3});
  std::mt19937_64 rng(2029);
  for (int i = 0; i < 12; ++i) {
    FiniteAlgebra a = random_algebra(sig, 3, rng, "t" + std::to_string(i));
    CHECK(all_congruences(a).congruences == oracles::brute_force_congruences(a));
    CHECK(unary_polynomials(a) == oracles::naive_unary_polynomials(a));
    bool r1 = is_rees_algebra(a).holds;
    CHECK(r1 == is_rees_algebra_via_two_generated(a));
    CHECK(r1 == is_rees_algebra_via_polynomials(a));
    CHECK(has_one_block_property(a).holds == obp_characterization_holds(a));
  }
}

TEST_CASE("negative table entries are rejected by validation") {
  CHECK_THROWS_WITH_AS(parse_algebra("algebra a\nsize 2\nop f 1\n0 -1\n"),
                       doctest::Contains("out of range"), parse_error);
}

TEST_CASE("identities between constant terms evaluate once") {
  FiniteAlgebra a;
  a.name = "consts";
  a.size = 3;
  a.signature.symbols = {{"c", 0}, {"d", 0}};
  a.tables = {{1}, {1}};
  CHECK(satisfies_identity(a, Term::app("c", {}), Term::app("d", {})));
  a.tables[1] = {2};
  auto cex = identity_counterexample(a, Term::app("c", {}), Term::app("d", {}));
  REQUIRE(cex.has_value());
  CHECK(cex->empty());
}
