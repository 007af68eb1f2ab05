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
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/partition.hpp"

namespace finalg {

/// Subset of {0..n-1}, n <= 64 (bitmask representation).
class ElementSet {
 public:
  explicit ElementSet(int n, uint64_t mask = 0);
  static ElementSet from_elements(int n, const std::vector<int>& elements);
  static ElementSet full(int n);

  int universe_size() const { return n_; }
  int count() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int e) const;
  void add(int e);
  uint64_t mask() const { return mask_; }
  std::vector<int> elements() const;

  bool operator==(const ElementSet&) const = default;

  std::string to_string() const;  // "{1 2 3}"

 private:
  int n_;
  uint64_t mask_;
};

/// Closed under every operation; nullary constants must belong. The empty set
/// is a subuniverse exactly when the signature has no nullary symbol.
bool is_subuniverse(const FiniteAlgebra& a, const ElementSet& s);

/// Least closed superset of s (including all constants).
ElementSet generated_subuniverse(const FiniteAlgebra& a, const ElementSet& s);

/// Every closed subset, ordered by size then lexicographically on the element
/// lists. Guarded by limits().max_subuniverse_enum_size.
std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& a);

/// The blocks of theta that are subuniverses, in block order. theta must be a
/// congruence of a.
std::vector<ElementSet> classes_that_are_subuniverses(const FiniteAlgebra& a,
                                                      const Partition& theta);

ElementSet block_as_set(const Partition& p, int block);

/// Restriction of a to a nonempty closed subset; elements renumbered in
/// ascending order.
FiniteAlgebra subalgebra(const FiniteAlgebra& a, const ElementSet& s);

}  // namespace finalg
