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

#include "finalg/quotient.hpp"

#include <cassert>
#include <stdexcept>

#include "finalg/properties.hpp"

namespace finalg {

QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size) throw std::invalid_argument("partition size mismatch");
  if (!is_congruence(a, theta)) throw std::invalid_argument("partition is not a congruence");

  int blocks = theta.block_count();
  std::vector<int> rep(blocks, -1);
  for (int e = a.size - 1; e >= 0; --e) rep[theta.block_of(e)] = e;

  FiniteAlgebra q;
  q.name = a.name + "_mod" + std::to_string(blocks);
  q.size = blocks;
  q.signature = a.signature;
  q.tables.resize(a.signature.count());

  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    std::vector<int>& table = q.tables[op];
    if (arity == 0) {
      table = {theta.block_of(a.tables[op].at(0))};
      continue;
    }
    std::vector<int> counters(arity, 0);
    std::vector<int> args(arity);
    while (true) {
      for (int i = 0; i < arity; ++i) args[i] = rep[counters[i]];
      table.push_back(theta.block_of(a.eval(op, args)));
      int i = arity - 1;
      for (; i >= 0; --i) {
        if (++counters[i] < blocks) break;
        counters[i] = 0;
      }
      if (i < 0) break;
    }
  }

#ifndef NDEBUG
  // well-definedness: the projected results agree with the tables over every
  // element tuple, not just the representatives
  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    if (arity == 0) continue;
    const auto& table = a.tables[op];
    std::vector<int> args(arity), blocks_of(arity);
    for (size_t flat = 0; flat < table.size(); ++flat) {
      size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % a.size);
        rest /= a.size;
      }
      for (int i = 0; i < arity; ++i) blocks_of[i] = theta.block_of(args[i]);
      assert(q.eval(op, blocks_of) == theta.block_of(table[flat]));
    }
  }
#endif

  return {std::move(q), theta, std::move(rep)};
}

ElementSet lift_subset(const Partition& theta, const std::vector<int>& blocks) {
  ElementSet out(theta.size());
  for (int b : blocks) {
    if (b < 0 || b >= theta.block_count()) throw std::invalid_argument("block index out of range");
    for (int e : theta.block(b)) out.add(e);
  }
  return out;
}

Partition project_congruence(const FiniteAlgebra& a, const Partition& theta,
                             const Partition& phi) {
  if (!is_congruence(a, theta) || !is_congruence(a, phi))
    throw std::invalid_argument("partition is not a congruence");
  if (!theta.refines(phi)) throw std::invalid_argument("first congruence must be below the second");
  std::vector<int> labels(theta.block_count());
  for (int b = 0; b < theta.block_count(); ++b) labels[b] = phi.block_of(theta.block(b).front());
  return Partition(std::move(labels));
}

Partition lift_congruence(const FiniteAlgebra& a, const Partition& theta, const Partition& psi) {
  QuotientAlgebra q = quotient_algebra(a, theta);
  if (psi.size() != q.algebra.size) throw std::invalid_argument("partition size mismatch");
  if (!is_congruence(q.algebra, psi))
    throw std::invalid_argument("partition is not a congruence of the quotient");
  std::vector<int> labels(a.size);
  for (int e = 0; e < a.size; ++e) labels[e] = psi.block_of(theta.block_of(e));
  return Partition(std::move(labels));
}

namespace {

// C² ∪ theta as a partition, where C is a union of theta-blocks.
Partition merge_blocks(const Partition& theta, const ElementSet& c) {
  std::vector<int> labels = theta.labels();
  int merged = -1;
  for (int e = 0; e < theta.size(); ++e) {
    if (!c.contains(e)) continue;
    if (merged < 0) merged = labels[e];
    labels[e] = merged;
  }
  return Partition(std::move(labels));
}

}  // namespace

QuotientReesCheck quotient_rees_correspondence(const FiniteAlgebra& a, const Partition& theta,
                                               const std::vector<int>& blocks) {
  QuotientAlgebra q = quotient_algebra(a, theta);
  ElementSet block_set(q.algebra.size);
  for (int b : blocks) block_set.add(b);  // range-checks against the quotient
  ElementSet c = lift_subset(theta, blocks);

  QuotientReesCheck check;
  check.quotient_rees = is_rees_block(q.algebra, block_set);
  Partition base = merge_blocks(theta, c);
  check.base_rees = is_congruence(a, base);
  check.equality_holds = true;
  if (check.quotient_rees && check.base_rees) {
    check.equality_holds = project_congruence(a, theta, base) == rees_extension(block_set);
  }
  check.subuniverse_match = is_subuniverse(q.algebra, block_set) == is_subuniverse(a, c);
  return check;
}

bool quotient_quasi_rees_via_base(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw std::invalid_argument("partition is not a congruence");
  CongruenceLattice lat = all_congruences(a);
  for (const Partition& phi : lat.congruences) {
    if (!(theta.refines(phi)) || phi == theta) continue;
    bool found = false;
    for (int b = 0; b < phi.block_count() && !found; ++b) {
      ElementSet c = block_as_set(phi, b);
      // C is a union of theta-blocks; it equals one exactly when all its
      // elements are theta-equivalent
      std::vector<int> elems = c.elements();
      bool is_theta_block = true;
      for (size_t i = 1; i < elems.size() && is_theta_block; ++i)
        is_theta_block = theta.same_block(elems[0], elems[i]);
      if (is_theta_block) continue;
      if (!is_subuniverse(a, c)) continue;
      if (is_congruence(a, merge_blocks(theta, c))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool quotient_obp_via_base(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw std::invalid_argument("partition is not a congruence");
  CongruenceLattice lat = all_congruences(a);
  int it = lat.index_of(theta);
  for (int j : lat.cover_indices_of(it)) {
    Partition projected = project_congruence(a, theta, lat.congruences[j]);
    int non_singleton = 0;
    for (int s : projected.block_sizes())
      if (s >= 2) ++non_singleton;
    if (non_singleton != 1) return false;
  }
  return true;
}

}  // namespace finalg
