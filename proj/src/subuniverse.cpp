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

#include "finalg/subuniverse.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "finalg/congruence.hpp"
#include "finalg/error.hpp"
#include "finalg/limits.hpp"

namespace finalg {

ElementSet::ElementSet(int n, uint64_t mask) : n_(n), mask_(mask) {
  if (n < 1) throw std::invalid_argument("universe must be non-empty");
  if (n > 64) throw limit_error("element sets support universes up to 64 elements");
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("set element out of range");
}

ElementSet ElementSet::from_elements(int n, const std::vector<int>& elements) {
  ElementSet s(n);
  for (int e : elements) s.add(e);
  return s;
}

ElementSet ElementSet::full(int n) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) s.add(e);
  return s;
}

int ElementSet::count() const { return std::popcount(mask_); }

bool ElementSet::contains(int e) const {
  if (e < 0 || e >= n_) throw std::invalid_argument("element out of range");
  return mask_ >> e & 1;
}

void ElementSet::add(int e) {
  if (e < 0 || e >= n_) throw std::invalid_argument("element out of range");
  mask_ |= uint64_t(1) << e;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (int e = 0; e < n_; ++e)
    if (mask_ >> e & 1) out.push_back(e);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ' ';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

namespace {

// Applies fn to every tuple over `pool`^arity.
template <typename Fn>
bool for_each_tuple(const std::vector<int>& pool, int arity, Fn&& fn) {
  std::vector<int> args(arity, 0);
  std::vector<size_t> counters(arity, 0);
  if (pool.empty()) return arity != 0;  // no tuples at positive arity
  while (true) {
    for (int i = 0; i < arity; ++i) args[i] = pool[counters[i]];
    if (!fn(args)) return false;
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (++counters[i] < pool.size()) break;
      counters[i] = 0;
    }
    if (i < 0) return true;
  }
}

}  // namespace

bool is_subuniverse(const FiniteAlgebra& a, const ElementSet& s) {
  if (s.universe_size() != a.size) throw std::invalid_argument("set universe mismatch");
  std::vector<int> pool = s.elements();
  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    if (arity == 0) {
      if (!s.contains(a.tables[op].at(0))) return false;
      continue;
    }
    bool closed = for_each_tuple(pool, arity, [&](const std::vector<int>& args) {
      return s.contains(a.eval(op, args));
    });
    if (!closed) return false;
  }
  return true;
}

ElementSet generated_subuniverse(const FiniteAlgebra& a, const ElementSet& s) {
  if (s.universe_size() != a.size) throw std::invalid_argument("set universe mismatch");
  ElementSet closure = s;
  for (int op = 0; op < a.signature.count(); ++op)
    if (a.signature.arity(op) == 0) closure.add(a.tables[op].at(0));

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> pool = closure.elements();
    for (int op = 0; op < a.signature.count(); ++op) {
      int arity = a.signature.arity(op);
      if (arity == 0) continue;
      for_each_tuple(pool, arity, [&](const std::vector<int>& args) {
        int r = a.eval(op, args);
        if (!closure.contains(r)) {
          closure.add(r);
          changed = true;
        }
        return true;
      });
    }
  }
  return closure;
}

std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& a) {
  if (a.size > limits().max_subuniverse_enum_size) {
    throw limit_error("subuniverse enumeration guard: size " + std::to_string(a.size) +
                      " exceeds " + std::to_string(limits().max_subuniverse_enum_size));
  }
  std::vector<ElementSet> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << a.size); ++mask) {
    ElementSet s(a.size, mask);
    if (is_subuniverse(a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.elements() < y.elements();
  });
  return out;
}

std::vector<ElementSet> classes_that_are_subuniverses(const FiniteAlgebra& a,
                                                      const Partition& theta) {
  if (!is_congruence(a, theta)) throw std::invalid_argument("partition is not a congruence");
  std::vector<ElementSet> out;
  for (int b = 0; b < theta.block_count(); ++b) {
    ElementSet s = block_as_set(theta, b);
    if (is_subuniverse(a, s)) out.push_back(s);
  }
  return out;
}

ElementSet block_as_set(const Partition& p, int block) {
  ElementSet s(p.size());
  for (int e : p.block(block)) s.add(e);
  return s;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& a, const ElementSet& s) {
  if (s.empty()) throw std::invalid_argument("subalgebra of the empty set");
  if (!is_subuniverse(a, s)) throw std::invalid_argument("set is not a subuniverse");
  std::vector<int> elems = s.elements();
  std::vector<int> local(a.size, -1);
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);

  FiniteAlgebra sub;
  sub.name = a.name + "_sub";
  sub.size = static_cast<int>(elems.size());
  sub.signature = a.signature;
  sub.tables.resize(a.signature.count());
  for (int op = 0; op < a.signature.count(); ++op) {
    int arity = a.signature.arity(op);
    if (arity == 0) {
      sub.tables[op] = {local[a.tables[op].at(0)]};
      continue;
    }
    std::vector<int>& table = sub.tables[op];
    for_each_tuple(elems, arity, [&](const std::vector<int>& args) {
      table.push_back(local[a.eval(op, args)]);
      return true;
    });
  }
  return sub;
}

}  // namespace finalg
