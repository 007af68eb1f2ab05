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

#include <string>
#include <vector>

namespace finalg {

/// Partition of {0..n-1} in canonical form: blocks are numbered by first
/// occurrence, so block_of(0) == 0 and block indices are contiguous. Block
/// order therefore coincides with ascending least elements.
class Partition {
 public:
  explicit Partition(std::vector<int> block_of);  // normalizes the labels
  static Partition omega(int n);                  // all singletons
  static Partition full(int n);                   // one block
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int e) const { return block_of_.at(e); }
  bool same_block(int a, int b) const { return block_of_.at(a) == block_of_.at(b); }
  const std::vector<int>& labels() const { return block_of_; }

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block(int index) const;
  std::vector<int> block_sizes() const;

  /// this ⊆ other as relations: every block of this lies inside a block of
  /// other. Sizes must match.
  bool refines(const Partition& other) const;

  bool operator==(const Partition&) const = default;

  /// Canonical string: blocks sorted by least element, elements ascending,
  /// blocks separated by '|', elements by single spaces. E.g. "0|1 2 3".
  std::string to_string() const;

 private:
  std::vector<int> block_of_;
  int blocks_ = 0;
};

Partition meet(const Partition& p, const Partition& q);  // common refinement
Partition join(const Partition& p, const Partition& q);  // transitive closure of the union

}  // namespace finalg
