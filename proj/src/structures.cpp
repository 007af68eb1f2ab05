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

#include "finalg/structures.hpp"

#include <algorithm>
#include <stdexcept>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"

namespace finalg {

namespace {

FiniteAlgebra groupoid(std::string name, int n, std::string op, std::vector<int> table) {
  FiniteAlgebra a;
  a.name = std::move(name);
  a.size = n;
  a.signature.symbols.push_back({std::move(op), 2});
  a.tables.push_back(std::move(table));
  return a;
}

}  // namespace

FiniteAlgebra diamond_semilattice() {
  return groupoid("diamond", 4, "join",
                  {0, 1, 2, 3,
                   1, 1, 3, 3,
                   2, 3, 2, 3,
                   3, 3, 3, 3});
}

FiniteAlgebra diamond_semilattice_with_top() {
  FiniteAlgebra a = diamond_semilattice();
  a.name = "diamond_top";
  a.signature.symbols.push_back({"one", 0});
  a.tables.push_back({3});
  return a;
}

FiniteAlgebra chain_semilattice(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = std::max(x, y);
  return groupoid("chain" + std::to_string(n), n, "join", std::move(table));
}

FiniteAlgebra chain_meet_with_zero(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = std::min(x, y);
  FiniteAlgebra a = groupoid("meetchain" + std::to_string(n), n, "meet", std::move(table));
  a.signature.symbols.push_back({"zero", 0});
  a.tables.push_back({0});
  return a;
}

FiniteAlgebra cyclic_addition(int n) {
  if (n < 1) throw std::invalid_argument("cyclic addition needs a positive modulus");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  return groupoid("cyclic" + std::to_string(n), n, "add", std::move(table));
}

FiniteAlgebra cyclic_addition_with_zero(int n) {
  FiniteAlgebra a = cyclic_addition(n);
  a.name = "cyclic" + std::to_string(n) + "z";
  a.signature.symbols.push_back({"zero", 0});
  a.tables.push_back({0});
  return a;
}

FiniteAlgebra xor_pairs() {
  std::vector<int> table(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) table[x * 4 + y] = x ^ y;
  return groupoid("xorpairs", 4, "add", std::move(table));
}

FiniteAlgebra cyclic_loop(int n) {
  if (n < 1) throw std::invalid_argument("loop needs a positive order");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  return loop_from_cayley(table, n, "loop" + std::to_string(n));
}

FiniteAlgebra two_element_implication() {
  return groupoid("imp2", 2, "imp", {1, 1, 0, 1});
}

FiniteAlgebra four_element_implication() {
  std::vector<int> table(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) table[x * 4 + y] = (~x | y) & 3;
  return groupoid("imp4", 4, "imp", std::move(table));
}

FiniteAlgebra sample_directoid() {
  // order 0,1 < 2 < 3; comparable pairs join to the maximum, the
  // incomparable pair 0,1 joins to 3
  return groupoid("directoid4", 4, "join",
                  {0, 3, 2, 3,
                   3, 1, 2, 3,
                   2, 2, 2, 3,
                   3, 3, 3, 3});
}

namespace {

bool directoid_identities_hold(const std::vector<int>& t, int n) {
  auto f = [&](int x, int y) { return t[x * n + y]; };
  for (int x = 0; x < n; ++x)
    if (f(x, x) != x) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int a = f(x, y);
      if (f(a, x) != a) return false;
      if (f(y, a) != a) return false;
      for (int z = 0; z < n; ++z) {
        int b = f(a, z);
        if (f(x, b) != b) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_directoid(const FiniteAlgebra& a) {
  if (a.signature.count() != 1 || a.signature.arity(0) != 2) return false;
  return directoid_identities_hold(a.tables[0], a.size);
}

std::vector<std::pair<int, int>> directoid_order(const FiniteAlgebra& a) {
  if (!is_directoid(a)) throw std::invalid_argument("algebra is not a directoid");
  std::vector<std::pair<int, int>> order;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (a.tables[0][x * a.size + y] == y) order.emplace_back(x, y);
  return order;
}

std::vector<FiniteAlgebra> enumerate_directoids(int n) {
  if (n < 1) throw std::invalid_argument("directoid enumeration needs a positive size");
  if (n > limits().max_directoid_enum_size) {
    throw limit_error("directoid enumeration guard: size " + std::to_string(n) + " exceeds " +
                      std::to_string(limits().max_directoid_enum_size));
  }

  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) table[x * n + x] = x;

  std::vector<int> cells;  // off-diagonal, row-major
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) cells.push_back(x * n + y);

  // partial check treating unfilled cells as unknown
  auto consistent = [&](void) -> bool {
    auto f = [&](int x, int y) { return table[x * n + y]; };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int a = f(x, y);
        if (a < 0) continue;
        int b = f(a, x);
        if (b >= 0 && b != a) return false;
        int c = f(y, a);
        if (c >= 0 && c != a) return false;
        for (int z = 0; z < n; ++z) {
          int d = f(a, z);
          if (d < 0) continue;
          int e = f(x, d);
          if (e >= 0 && e != d) return false;
        }
      }
    }
    return true;
  };

  std::vector<FiniteAlgebra> out;
  long long counter = 0;
  auto emit = [&]() {
    out.push_back(groupoid("d" + std::to_string(counter++), n, "join", table));
  };

  auto recurse = [&](auto&& self, size_t k) -> void {
    if (k == cells.size()) {
      emit();
      return;
    }
    for (int v = 0; v < n; ++v) {
      table[cells[k]] = v;
      if (consistent()) self(self, k + 1);
    }
    table[cells[k]] = -1;
  };
  recurse(recurse, 0);
  return out;
}

bool is_implication_algebra(const FiniteAlgebra& a) {
  if (a.signature.count() != 1 || a.signature.arity(0) != 2) return false;
  int n = a.size;
  auto f = [&](int x, int y) { return a.tables[0][x * n + y]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (f(f(x, y), x) != x) return false;
      if (f(f(x, y), y) != f(f(y, x), x)) return false;
      for (int z = 0; z < n; ++z)
        if (f(x, f(y, z)) != f(y, f(x, z))) return false;
    }
  }
  return true;
}

std::optional<int> implication_unit(const FiniteAlgebra& a) {
  if (a.signature.count() != 1 || a.signature.arity(0) != 2) return std::nullopt;
  int n = a.size;
  int unit = a.tables[0][0];
  for (int x = 1; x < n; ++x)
    if (a.tables[0][x * n + x] != unit) return std::nullopt;
  return unit;
}

bool is_loop(const FiniteAlgebra& a) {
  const auto& syms = a.signature.symbols;
  if (syms.size() != 4 || syms[0].arity != 2 || syms[1].arity != 2 || syms[2].arity != 2 ||
      syms[3].arity != 0) {
    return false;
  }
  int n = a.size;
  auto mul = [&](int x, int y) { return a.tables[0][x * n + y]; };
  auto rdiv = [&](int x, int y) { return a.tables[1][x * n + y]; };
  auto ldiv = [&](int x, int y) { return a.tables[2][x * n + y]; };
  int one = a.tables[3][0];
  for (int x = 0; x < n; ++x) {
    if (mul(x, one) != x || mul(one, x) != x) return false;
    for (int y = 0; y < n; ++y) {
      if (mul(rdiv(x, y), y) != x) return false;
      if (rdiv(mul(x, y), y) != x) return false;
      if (mul(x, ldiv(x, y)) != y) return false;
      if (ldiv(x, mul(x, y)) != y) return false;
    }
  }
  return true;
}

FiniteAlgebra loop_from_cayley(const std::vector<int>& table, int n, const std::string& name) {
  if (n < 1) throw std::invalid_argument("loop needs a positive order");
  if (static_cast<int>(table.size()) != n * n)
    throw std::invalid_argument("Cayley table must have n*n entries");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");

  auto mul = [&](int x, int y) { return table[x * n + y]; };

  // Latin square: every row and column is a permutation
  for (int x = 0; x < n; ++x) {
    std::vector<bool> row(n, false), col(n, false);
    for (int y = 0; y < n; ++y) {
      if (row[mul(x, y)]) throw std::invalid_argument("not a Latin square: repeated row value");
      row[mul(x, y)] = true;
      if (col[mul(y, x)]) throw std::invalid_argument("not a Latin square: repeated column value");
      col[mul(y, x)] = true;
    }
  }

  int one = -1;
  for (int e = 0; e < n && one < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) one = e;
  }
  if (one < 0) throw std::invalid_argument("Cayley table has no identity element");

  std::vector<int> rdiv(static_cast<size_t>(n) * n), ldiv(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (mul(z, y) == x) rdiv[x * n + y] = z;  // (x/y)y = x
        if (mul(x, z) == y) ldiv[x * n + y] = z;  // x(x\y) = y
      }
    }
  }

  FiniteAlgebra a;
  a.name = name;
  a.size = n;
  a.signature.symbols = {{"mul", 2}, {"rdiv", 2}, {"ldiv", 2}, {"one", 0}};
  a.tables = {table, std::move(rdiv), std::move(ldiv), {one}};
  return a;
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Relabels every table of `a` by perm; perm maps old elements to new ones.
std::vector<std::vector<int>> relabel_tables(const FiniteAlgebra& a,
                                             const std::vector<int>& perm) {
  int n = a.size;
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
  std::vector<std::vector<int>> out(a.tables.size());
  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    const auto& table = a.tables[op];
    std::vector<int>& target = out[op];
    target.resize(table.size());
    std::vector<int> args(arity);
    for (size_t flat = 0; flat < table.size(); ++flat) {
      size_t rest = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      size_t source = 0;
      for (int i = 0; i < arity; ++i) source = source * n + static_cast<size_t>(inverse[args[i]]);
      target[flat] = perm[table[source]];
    }
  }
  return out;
}

bool is_canonical_labeling(const FiniteAlgebra& a, const std::vector<std::vector<int>>& perms) {
  for (const auto& perm : perms) {
    if (relabel_tables(a, perm) < a.tables) return false;
  }
  return true;
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_algebras(const Signature& sig, int n, bool up_to_iso,
                                              const std::function<bool(const FiniteAlgebra&)>& filter) {
  if (n < 1) throw std::invalid_argument("enumeration needs a positive size");
  if (n > limits().max_table_enum_size) {
    throw limit_error("table enumeration guard: size " + std::to_string(n) + " exceeds " +
                      std::to_string(limits().max_table_enum_size));
  }

  long long cells = 0;
  for (const OpSymbol& sym : sig.symbols) {
    long long c = 1;
    for (int i = 0; i < sym.arity; ++i) c *= n;
    cells += c;
  }
  long long total = 1;
  for (long long i = 0; i < cells; ++i) {
    if (total > limits().max_enumeration_count / n)
      throw limit_error("table enumeration guard: too many candidate tables");
    total *= n;
  }

  std::vector<std::vector<int>> perms = up_to_iso ? permutations_of(n) : std::vector<std::vector<int>>{};

  FiniteAlgebra a;
  a.size = n;
  a.signature = sig;
  a.tables.resize(sig.count());
  for (int op = 0; op < sig.count(); ++op) {
    long long c = 1;
    for (int i = 0; i < sig.arity(op); ++i) c *= n;
    a.tables[op].assign(static_cast<size_t>(c), 0);
  }

  std::vector<FiniteAlgebra> out;
  long long index = 0;
  while (true) {
    if (!up_to_iso || is_canonical_labeling(a, perms)) {
      a.name = "g" + std::to_string(index);
      if (!filter || filter(a)) out.push_back(a);
    }
    ++index;
    // odometer over all cells, last table cell fastest
    int op = sig.count() - 1;
    bool carried = true;
    for (; op >= 0 && carried; --op) {
      auto& table = a.tables[op];
      for (int i = static_cast<int>(table.size()) - 1; i >= 0; --i) {
        if (++table[i] < n) {
          carried = false;
          break;
        }
        table[i] = 0;
      }
    }
    if (carried) break;
  }
  return out;
}

std::vector<FiniteAlgebra> enumerate_groupoids(int n, bool up_to_iso,
                                               const std::function<bool(const FiniteAlgebra&)>& filter) {
  Signature sig;
  sig.symbols.push_back({"f", 2});
  return enumerate_algebras(sig, n, up_to_iso, filter);
}

FiniteAlgebra random_algebra(const Signature& sig, int n, std::mt19937_64& rng,
                             std::string name) {
  if (n < 1) throw std::invalid_argument("random algebra needs a positive size");
  FiniteAlgebra a;
  a.name = std::move(name);
  a.size = n;
  a.signature = sig;
  a.tables.resize(sig.count());
  for (int op = 0; op < sig.count(); ++op) {
    long long cells = 1;
    for (int i = 0; i < sig.arity(op); ++i) {
      if (cells > limits().max_table_cells / n) throw limit_error("operation table too large");
      cells *= n;
    }
    a.tables[op].resize(static_cast<size_t>(cells));
    // rng() % n keeps the stream platform-stable
    for (auto& cell : a.tables[op]) cell = static_cast<int>(rng() % n);
  }
  return a;
}

std::vector<FiniteAlgebra> random_algebras(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<FiniteAlgebra> out;
  out.reserve(spec.count);
  for (uint64_t i = 0; i < spec.count; ++i)
    out.push_back(random_algebra(spec.signature, spec.size, rng, "r" + std::to_string(i)));
  return out;
}

}  // namespace finalg
