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

#include "finalg/partition.hpp"

#include <stdexcept>

#include "finalg/union_find.hpp"

namespace finalg {

Partition::Partition(std::vector<int> block_of) : block_of_(std::move(block_of)) {
  if (block_of_.empty()) throw std::invalid_argument("partition of an empty universe");
  int n = size();
  std::vector<int> relabel(n, -1);
  int next = 0;
  for (int& b : block_of_) {
    if (b < 0 || b >= n) throw std::invalid_argument("partition label out of range");
    if (relabel[b] < 0) relabel[b] = next++;
    b = relabel[b];
  }
  blocks_ = next;
}

Partition Partition::omega(int n) {
  if (n < 1) throw std::invalid_argument("universe must be non-empty");
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return Partition(std::move(labels));
}

Partition Partition::full(int n) {
  if (n < 1) throw std::invalid_argument("universe must be non-empty");
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw std::invalid_argument("universe must be non-empty");
  std::vector<int> labels(n, -1);
  int next = 0;
  for (const auto& block : blocks) {
    for (int e : block) {
      if (e < 0 || e >= n) throw std::invalid_argument("block element out of range");
      if (labels[e] >= 0) throw std::invalid_argument("element occurs in two blocks");
      labels[e] = next;
    }
    ++next;
  }
  for (int e = 0; e < n; ++e)
    if (labels[e] < 0) throw std::invalid_argument("element " + std::to_string(e) + " missing");
  return Partition(std::move(labels));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int e = 0; e < size(); ++e) out[block_of_[e]].push_back(e);
  return out;
}

std::vector<int> Partition::block(int index) const {
  if (index < 0 || index >= blocks_) throw std::invalid_argument("block index out of range");
  std::vector<int> out;
  for (int e = 0; e < size(); ++e)
    if (block_of_[e] == index) out.push_back(e);
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> out(blocks_, 0);
  for (int b : block_of_) ++out[b];
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) throw std::invalid_argument("partition size mismatch");
  std::vector<int> image(blocks_, -1);
  for (int e = 0; e < size(); ++e) {
    int b = block_of_[e];
    if (image[b] < 0) image[b] = other.block_of_[e];
    else if (image[b] != other.block_of_[e]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::vector<std::string> parts(blocks_);
  for (int e = 0; e < size(); ++e) {
    std::string& s = parts[block_of_[e]];
    if (!s.empty()) s += ' ';
    s += std::to_string(e);
  }
  std::string out;
  for (int b = 0; b < blocks_; ++b) {
    if (b > 0) out += '|';
    out += parts[b];
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
  int n = p.size();
  std::vector<int> labels(n);
  // pair of labels, renumbered by the Partition constructor
  std::vector<int> key(static_cast<size_t>(p.block_count()) * q.block_count(), -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    int k = p.block_of(e) * q.block_count() + q.block_of(e);
    if (key[k] < 0) key[k] = next++;
    labels[e] = key[k];
  }
  return Partition(std::move(labels));
}

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
  int n = p.size();
  UnionFind uf(n);
  std::vector<int> first_p(p.block_count(), -1);
  std::vector<int> first_q(q.block_count(), -1);
  for (int e = 0; e < n; ++e) {
    int& fp = first_p[p.block_of(e)];
    if (fp < 0) fp = e;
    else uf.unite(e, fp);
    int& fq = first_q[q.block_of(e)];
    if (fq < 0) fq = e;
    else uf.unite(e, fq);
  }
  return Partition(uf.labels());
}

}  // namespace finalg
