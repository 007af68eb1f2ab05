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

#include "finalg/partition.hpp"
#include "oracles.hpp"

using namespace finalg;

TEST_CASE("omega and full") {
  CHECK(Partition::omega(4).to_string() == "0|1|2|3");
  CHECK(Partition::full(4).to_string() == "0 1 2 3");
  CHECK(Partition::omega(1) == Partition::full(1));
  CHECK_THROWS_AS(Partition::omega(0), std::invalid_argument);
  CHECK_THROWS_AS(Partition::full(0), std::invalid_argument);
}

TEST_CASE("canonical labels are first-occurrence numbered") {
  Partition p(std::vector<int>{2, 0, 2, 1});
  CHECK(p.labels() == std::vector<int>{0, 1, 0, 2});
  CHECK(p.to_string() == "0 2|1|3");
  CHECK(p.block_count() == 3);
}

TEST_CASE("normalizing a normalized partition is the identity") {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> raw(n);
    for (int& v : raw) v = static_cast<int>(rng() % n);
    Partition p(raw);
    CHECK(Partition(p.labels()) == p);
  }
}

TEST_CASE("from_blocks validates coverage") {
  CHECK(Partition::from_blocks(4, {{0}, {1, 2, 3}}).to_string() == "0|1 2 3");
  CHECK_THROWS_AS(Partition::from_blocks(4, {{0}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks(4, {{0, 0}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("meet and join on the diamond congruences") {
  // theta3 = {0 1}{2 3}, theta5 = {0 2}{1 3}, theta1/2 the atoms
  Partition theta1 = Partition::from_blocks(4, {{0}, {1}, {2, 3}});
  Partition theta2 = Partition::from_blocks(4, {{0}, {2}, {1, 3}});
  Partition theta3 = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  Partition theta4 = Partition::from_blocks(4, {{0}, {1, 2, 3}});
  Partition theta5 = Partition::from_blocks(4, {{0, 2}, {1, 3}});

  CHECK(meet(theta3, theta5) == Partition::omega(4));
  CHECK(join(theta1, theta2) == theta4);
  CHECK(meet(theta3, theta1) == theta1);
  CHECK(join(theta3, theta5) == Partition::full(4));
}

TEST_CASE("join and meet against the closure oracle") {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> raw_p(n), raw_q(n);
    for (int& v : raw_p) v = static_cast<int>(rng() % n);
    for (int& v : raw_q) v = static_cast<int>(rng() % n);
    Partition p(raw_p), q(raw_q);

    CHECK(join(p, q) == oracles::join_oracle(p, q));
    CHECK(join(p, Partition::omega(n)) == p);
    CHECK(meet(p, Partition::full(n)) == p);

    Partition m = meet(p, q);
    CHECK(m.refines(p));
    CHECK(m.refines(q));
    Partition j = join(p, q);
    CHECK(p.refines(j));
    CHECK(q.refines(j));
  }
}

TEST_CASE("refines is a partial order") {
  Partition theta1 = Partition::from_blocks(4, {{0}, {1}, {2, 3}});
  Partition theta3 = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  CHECK(theta1.refines(theta3));
  CHECK_FALSE(theta3.refines(theta1));
  CHECK(theta3.refines(theta3));
  CHECK(Partition::omega(4).refines(theta1));
  CHECK(theta3.refines(Partition::full(4)));
}

TEST_CASE("block accessors") {
  Partition p = Partition::from_blocks(5, {{0, 4}, {1}, {2, 3}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 4}, {1}, {2, 3}});
  CHECK(p.block(2) == std::vector<int>{2, 3});
  CHECK(p.block_sizes() == std::vector<int>{2, 1, 2});
  CHECK_THROWS_AS(p.block(3), std::invalid_argument);
}
