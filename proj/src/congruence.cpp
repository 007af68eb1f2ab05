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

#include "finalg/congruence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"
#include "finalg/union_find.hpp"

namespace finalg {

std::string CompatibilityViolation::describe(const FiniteAlgebra& a) const {
  std::string s = a.signature.symbols.at(op).name + "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(args[i]);
  }
  s += ") = " + std::to_string(result) + " but replacing argument " +
       std::to_string(position) + " by the equivalent " + std::to_string(replacement) +
       " gives " + std::to_string(replaced_result);
  return s;
}

std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& a,
                                                              const Partition& p) {
  if (p.size() != a.size) throw std::invalid_argument("partition size mismatch");
  int n = a.size;
  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    if (arity == 0) continue;
    const auto& table = a.tables[op];
    std::vector<int> args(arity, 0);
    size_t stride_last = 1;  // strides: rightmost argument has stride 1
    for (size_t flat = 0; flat < table.size(); ++flat) {
      // decode flat -> args (leftmost slowest)
      size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      int result = table[flat];
      size_t stride = stride_last;
      for (int pos = arity - 1; pos >= 0; --pos, stride *= n) {
        for (int v = 0; v < n; ++v) {
          if (v == args[pos] || !p.same_block(v, args[pos])) continue;
          size_t other_flat = flat + static_cast<size_t>(v) * stride -
                              static_cast<size_t>(args[pos]) * stride;
          int other = table[other_flat];
          if (!p.same_block(result, other)) {
            return CompatibilityViolation{op, args, pos, v, result, other};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  return !compatibility_violation(a, p).has_value();
}

namespace {

// Closes a union-find under all one-variable translations of the basic
// operations, starting from the seeded pairs.
Partition close_under_translations(const FiniteAlgebra& a,
                                   std::vector<std::pair<int, int>> work) {
  int n = a.size;
  UnionFind uf(n);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (int op = 0; op < a.signature.count(); ++op) {
      int arity = a.signature.arity(op);
      if (arity == 0) continue;
      const auto& table = a.tables[op];
      size_t stride = 1;
      for (int pos = arity - 1; pos >= 0; --pos, stride *= n) {
        // every flat index whose digit at `pos` is zero is a context
        for (size_t flat = 0; flat < table.size(); ++flat) {
          if ((flat / stride) % n != 0) continue;
          int fx = table[flat + x * stride];
          int fy = table[flat + y * stride];
          if (!uf.same(fx, fy)) work.emplace_back(fx, fy);
        }
      }
    }
  }
  return Partition(uf.labels());
}

}  // namespace

Partition principal_congruence(const FiniteAlgebra& a, int x, int y) {
  if (x < 0 || x >= a.size || y < 0 || y >= a.size)
    throw std::invalid_argument("element out of range");
  return close_under_translations(a, {{x, y}});
}

Partition congruence_generated_by(const FiniteAlgebra& a,
                                  const std::vector<std::pair<int, int>>& pairs) {
  for (auto [x, y] : pairs)
    if (x < 0 || x >= a.size || y < 0 || y >= a.size)
      throw std::invalid_argument("element out of range");
  return close_under_translations(a, pairs);
}

int CongruenceLattice::index_of(const Partition& p) const {
  for (int i = 0; i < static_cast<int>(congruences.size()); ++i)
    if (congruences[i] == p) return i;
  return -1;
}

std::vector<int> CongruenceLattice::atom_indices() const { return cover_indices_of(0); }

std::vector<int> CongruenceLattice::cover_indices_of(int i) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers)
    if (lo == i) out.push_back(hi);
  return out;
}

bool CongruenceLattice::covered_by(int i, int j) const {
  return std::binary_search(covers.begin(), covers.end(), std::make_pair(i, j));
}

CongruenceLattice all_congruences(const FiniteAlgebra& a) {
  if (a.size > limits().max_congruence_lattice_size) {
    throw limit_error("congruence lattice guard: size " + std::to_string(a.size) + " exceeds " +
                      std::to_string(limits().max_congruence_lattice_size));
  }
  int n = a.size;

  std::vector<Partition> principals;
  std::map<std::vector<int>, int> seen;
  auto remember = [&](const Partition& p) {
    return seen.emplace(p.labels(), static_cast<int>(seen.size())).second;
  };

  std::vector<Partition> all;
  Partition omega = Partition::omega(n);
  remember(omega);
  all.push_back(omega);

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Partition p = principal_congruence(a, x, y);
      if (remember(p)) all.push_back(p);
      if (std::find(principals.begin(), principals.end(), p) == principals.end())
        principals.push_back(p);
    }
  }

  // join closure
  for (size_t i = 0; i < all.size(); ++i) {
    for (const Partition& p : principals) {
      Partition j = join(all[i], p);
      if (remember(j)) all.push_back(j);
    }
  }

  std::sort(all.begin(), all.end(), [](const Partition& p, const Partition& q) {
    if (p.block_count() != q.block_count()) return p.block_count() > q.block_count();
    return p.labels() < q.labels();
  });

  CongruenceLattice lat;
  lat.congruences = std::move(all);
  int m = static_cast<int>(lat.congruences.size());
  lat.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      lat.leq[i][j] = lat.congruences[i].refines(lat.congruences[j]);

  // transitive reduction of the strict order
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k) {
        if (k == i || k == j) continue;
        if (lat.leq[i][k] && lat.leq[k][j]) cover = false;
      }
      if (cover) lat.covers.emplace_back(i, j);
    }
  }
  std::sort(lat.covers.begin(), lat.covers.end());
  return lat;
}

std::vector<Partition> atoms(const CongruenceLattice& lat) {
  std::vector<Partition> out;
  for (int i : lat.atom_indices()) out.push_back(lat.congruences[i]);
  return out;
}

std::vector<Partition> covers_of(const CongruenceLattice& lat, const Partition& theta) {
  int i = lat.index_of(theta);
  if (i < 0) throw std::invalid_argument("partition is not in the lattice");
  std::vector<Partition> out;
  for (int j : lat.cover_indices_of(i)) out.push_back(lat.congruences[j]);
  return out;
}

namespace {

// join/meet tables over lattice indices
struct IndexTables {
  std::vector<std::vector<int>> join_of, meet_of;
};

IndexTables index_tables(const CongruenceLattice& lat) {
  int m = static_cast<int>(lat.congruences.size());
  IndexTables t;
  t.join_of.assign(m, std::vector<int>(m, -1));
  t.meet_of.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      int jo = lat.index_of(join(lat.congruences[i], lat.congruences[j]));
      int me = lat.index_of(meet(lat.congruences[i], lat.congruences[j]));
      if (jo < 0 || me < 0) throw std::logic_error("congruence set not closed under join/meet");
      t.join_of[i][j] = t.join_of[j][i] = jo;
      t.meet_of[i][j] = t.meet_of[j][i] = me;
    }
  }
  return t;
}

}  // namespace

bool is_modular(const CongruenceLattice& lat) {
  int m = static_cast<int>(lat.congruences.size());
  IndexTables t = index_tables(lat);
  for (int x = 0; x < m; ++x) {
    for (int z = 0; z < m; ++z) {
      if (!lat.leq[x][z]) continue;
      for (int y = 0; y < m; ++y) {
        // x <= z: x ∨ (y ∧ z) = (x ∨ y) ∧ z
        if (t.join_of[x][t.meet_of[y][z]] != t.meet_of[t.join_of[x][y]][z]) return false;
      }
    }
  }
  return true;
}

bool is_semimodular(const CongruenceLattice& lat) {
  int m = static_cast<int>(lat.congruences.size());
  IndexTables t = index_tables(lat);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (!lat.covered_by(t.meet_of[x][y], x)) continue;
      if (!lat.covered_by(y, t.join_of[x][y])) return false;
    }
  }
  return true;
}

bool is_congruence_uniform(const CongruenceLattice& lat) {
  for (const Partition& p : lat.congruences) {
    std::vector<int> sizes = p.block_sizes();
    for (int s : sizes)
      if (s != sizes[0]) return false;
  }
  return true;
}

bool is_congruence_uniform(const FiniteAlgebra& a) {
  return is_congruence_uniform(all_congruences(a));
}

namespace {

// equivalence relation as bit rows; n <= 64 after the lattice guard
std::vector<uint64_t> relation_rows(const Partition& p) {
  int n = p.size();
  std::vector<uint64_t> block_mask(p.block_count(), 0);
  for (int e = 0; e < n; ++e) block_mask[p.block_of(e)] |= uint64_t(1) << e;
  std::vector<uint64_t> rows(n);
  for (int e = 0; e < n; ++e) rows[e] = block_mask[p.block_of(e)];
  return rows;
}

std::vector<uint64_t> compose(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  int n = static_cast<int>(a.size());
  std::vector<uint64_t> out(n, 0);
  for (int x = 0; x < n; ++x) {
    uint64_t row = a[x];
    for (int y = 0; y < n; ++y)
      if (row >> y & 1) out[x] |= b[y];
  }
  return out;
}

std::vector<uint64_t> alternating(const std::vector<uint64_t>& first,
                                  const std::vector<uint64_t>& second, int n) {
  std::vector<uint64_t> acc = first;
  for (int k = 2; k <= n; ++k) acc = compose(acc, k % 2 == 0 ? second : first);
  return acc;
}

}  // namespace

bool is_n_permutable(const std::vector<Partition>& congruences, int n) {
  if (n < 2) throw std::invalid_argument("permutability degree must be at least 2");
  for (size_t i = 0; i < congruences.size(); ++i) {
    if (congruences[i].size() > 64) throw limit_error("universe too large for relation rows");
    auto ri = relation_rows(congruences[i]);
    for (size_t j = i + 1; j < congruences.size(); ++j) {
      auto rj = relation_rows(congruences[j]);
      if (alternating(ri, rj, n) != alternating(rj, ri, n)) return false;
    }
  }
  return true;
}

bool is_n_permutable(const FiniteAlgebra& a, int n) {
  return is_n_permutable(all_congruences(a).congruences, n);
}

}  // namespace finalg
