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

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/structures.hpp"
#include "oracles.hpp"

using namespace finalg;

namespace {

FiniteAlgebra make(int size, std::vector<OpSymbol> symbols, std::vector<std::vector<int>> tables) {
  FiniteAlgebra a;
  a.name = "t";
  a.size = size;
  a.signature.symbols = std::move(symbols);
  a.tables = std::move(tables);
  return a;
}

}  // namespace

TEST_CASE("validate accepts the diamond semilattice") {
  CHECK(validate(diamond_semilattice()).empty());
  CHECK(validate(diamond_semilattice_with_top()).empty());
  CHECK(validate(cyclic_loop(3)).empty());
}

TEST_CASE("validate reports out-of-range entries") {
  FiniteAlgebra a = make(2, {{"f", 2}}, {{0, 5, 1, 0}});
  auto violations = validate(a);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("out of range") != std::string::npos);
  CHECK(violations[0].find("5") != std::string::npos);
}

TEST_CASE("validate reports wrong table length") {
  FiniteAlgebra a = make(3, {{"f", 2}}, {{0, 1, 2, 0, 1, 2, 0, 1}});
  auto violations = validate(a);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("expected 9") != std::string::npos);
  CHECK(violations[0].find("'f'") != std::string::npos);
}

TEST_CASE("validate reports duplicate and malformed symbols") {
  FiniteAlgebra a = make(2, {{"f", 1}, {"f", 0}, {"0bad", 0}}, {{0, 1}, {0}, {1}});
  auto violations = validate(a);
  CHECK(violations.size() == 2);
}

TEST_CASE("eval_op on the diamond") {
  FiniteAlgebra a = diamond_semilattice();
  CHECK(a.eval("join", std::vector<int>{1, 2}) == 3);
  CHECK(a.eval("join", std::vector<int>{0, 3}) == 3);
  for (int x = 0; x < 4; ++x) CHECK(a.eval("join", std::vector<int>{x, x}) == x);
  CHECK_THROWS_AS(a.eval("join", std::vector<int>{0}), std::invalid_argument);
  CHECK_THROWS_AS(a.eval("join", std::vector<int>{0, 9}), std::invalid_argument);
  CHECK_THROWS_AS(a.eval("meet", std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("eval_term") {
  FiniteAlgebra a = diamond_semilattice();
  CHECK(eval_term(a, Term::var(0), {2}) == 2);

  // join(x, join(y, x)) at x=1, y=2: join(2,1)=3, join(1,3)=3
  Term nested = Term::app("join", {Term::var(0), Term::app("join", {Term::var(1), Term::var(0)})});
  CHECK(eval_term(a, nested, {1, 2}) == 3);

  FiniteAlgebra c = make(2, {{"c", 0}}, {{1}});
  CHECK(eval_term(c, Term::app("c", {}), {}) == 1);
  CHECK(eval_term(c, Term::app("c", {}), {0}) == 1);

  CHECK_THROWS_AS(eval_term(a, Term::var(3), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eval_term(a, Term::app("join", {Term::var(0)}), {0}), std::invalid_argument);
}

TEST_CASE("satisfies_identity on the diamond") {
  FiniteAlgebra a = diamond_semilattice();
  Term x = Term::var(0), y = Term::var(1);
  CHECK(satisfies_identity(a, Term::app("join", {x, y}), Term::app("join", {y, x})));

  auto cex = identity_counterexample(a, Term::app("join", {x, y}), x);
  REQUIRE(cex.has_value());
  CHECK((*cex)[0] == 0);
  CHECK((*cex)[1] == 1);
}

TEST_CASE("x ≈ x holds everywhere") {
  for (const FiniteAlgebra& a : oracles::fixture_corpus())
    CHECK(satisfies_identity(a, Term::var(0), Term::var(0)));
}

TEST_CASE("t ≈ t holds for random terms") {
  std::mt19937_64 rng(11);
  for (const FiniteAlgebra& a : oracles::random_groupoids(12, 10, 3, 5)) {
    Term t = oracles::random_binary_term(a.signature, rng, 3);
    CHECK(satisfies_identity(a, t, t));
  }
}

TEST_CASE("identity check guard") {
  // seven variables at size 30 exceed the assignment cap
  FiniteAlgebra a = make(30, {{"f", 2}}, {std::vector<int>(900, 0)});
  Term t = Term::var(6);
  Term chain = Term::var(0);
  for (int v = 1; v <= 6; ++v) chain = Term::app("f", {Term::var(v), chain});
  CHECK_THROWS_AS(satisfies_identity(a, chain, t), limit_error);
}

TEST_CASE("is_idempotent_algebra") {
  CHECK(is_idempotent_algebra(diamond_semilattice()));
  CHECK_FALSE(is_idempotent_algebra(diamond_semilattice_with_top()));
  CHECK(is_idempotent_algebra(make(1, {{"c", 0}, {"f", 2}}, {{0}, {0}})));
  CHECK_FALSE(is_idempotent_algebra(cyclic_addition(3)));
}

TEST_CASE("absorbing_elements") {
  CHECK(absorbing_elements(diamond_semilattice()) == std::vector<int>{3});
  CHECK(absorbing_elements(diamond_semilattice_with_top()) == std::vector<int>{3});
  CHECK(absorbing_elements(chain_semilattice(2)) == std::vector<int>{1});
  CHECK(absorbing_elements(cyclic_addition(3)).empty());
  CHECK(absorbing_elements(chain_meet_with_zero(3)) == std::vector<int>{0});
  // no operations at all: every element absorbs vacuously
  FiniteAlgebra empty_sig = make(2, {}, {});
  CHECK(absorbing_elements(empty_sig) == std::vector<int>{0, 1});
}

TEST_CASE("absorbing element fixes every non-constant unary polynomial") {
  std::vector<FiniteAlgebra> algs = oracles::fixture_corpus();
  for (const FiniteAlgebra& a : algs) {
    for (int e : absorbing_elements(a)) {
      for (const UnaryFunction& p : unary_polynomials(a)) {
        bool constant = std::all_of(p.begin(), p.end(), [&](int v) { return v == p[0]; });
        CHECK((constant || p[e] == e));
      }
    }
  }
}
