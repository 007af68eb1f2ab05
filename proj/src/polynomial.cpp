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

#include "finalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "finalg/congruence.hpp"
#include "finalg/error.hpp"
#include "finalg/limits.hpp"

namespace finalg {

namespace {

// Unary tables packed four bits per entry; usable for n <= 16.
uint64_t pack(const std::vector<int>& table) {
  uint64_t v = 0;
  for (size_t i = 0; i < table.size(); ++i) v |= uint64_t(table[i]) << (4 * i);
  return v;
}

int entry(uint64_t f, int x) { return static_cast<int>(f >> (4 * x) & 0xF); }

std::vector<int> unpack(uint64_t f, int n) {
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = entry(f, x);
  return out;
}

}  // namespace

std::vector<UnaryFunction> unary_polynomials(const FiniteAlgebra& a) {
  if (a.size > limits().max_polynomial_size) {
    throw limit_error("unary polynomial guard: size " + std::to_string(a.size) + " exceeds " +
                      std::to_string(limits().max_polynomial_size));
  }
  if (a.size > 16) throw limit_error("unary polynomials support universes up to 16 elements");
  int n = a.size;

  std::vector<uint64_t> members;
  std::unordered_set<uint64_t> seen;
  auto push = [&](uint64_t f) {
    if (seen.insert(f).second) members.push_back(f);
  };

  {
    std::vector<int> t(n);
    for (int x = 0; x < n; ++x) t[x] = x;
    push(pack(t));  // identity
    for (int c = 0; c < n; ++c) push(pack(std::vector<int>(n, c)));
  }

  // When member k arrives, compose every operation over argument tuples that
  // draw from members[0..k] and use members[k] at least once; tuples over
  // earlier members were handled when their own maximum index arrived.
  for (size_t k = 0; k < members.size(); ++k) {
    for (int op = 0; op < a.signature.count(); ++op) {
      int arity = a.signature.arity(op);
      if (arity == 0) continue;
      const auto& table = a.tables[op];
      // first position holding members[k]: earlier slots range over [0..k),
      // later slots over [0..k]
      for (int first = 0; first < arity; ++first) {
        std::vector<size_t> idx(arity, 0);
        idx[first] = k;
        bool done = false;
        while (!done) {
          uint64_t composed = 0;
          for (int x = 0; x < n; ++x) {
            size_t flat = 0;
            for (int j = 0; j < arity; ++j)
              flat = flat * n + static_cast<size_t>(entry(members[idx[j]], x));
            composed |= uint64_t(table[flat]) << (4 * x);
          }
          push(composed);
          // odometer over the free slots (everything except `first`)
          int j = arity - 1;
          for (; j >= 0; --j) {
            if (j == first) continue;
            size_t bound = j < first ? k : k + 1;  // earlier slots stay below k
            if (++idx[j] < bound) break;
            idx[j] = 0;
          }
          if (j < 0) done = true;
        }
        if (k == 0 && first > 0) break;  // all-zero tuple already covered at first == 0
      }
    }
  }

  std::vector<UnaryFunction> out;
  out.reserve(members.size());
  for (uint64_t f : members) out.push_back(unpack(f, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnaryFunction> quotient_unary_polynomials(const FiniteAlgebra& a,
                                                      const Partition& theta) {
  if (!is_congruence(a, theta)) throw std::invalid_argument("partition is not a congruence");
  std::vector<int> rep(theta.block_count(), -1);
  for (int e = a.size - 1; e >= 0; --e) rep[theta.block_of(e)] = e;

  std::vector<UnaryFunction> out;
  for (const UnaryFunction& p : unary_polynomials(a)) {
    UnaryFunction q(theta.block_count());
    for (int b = 0; b < theta.block_count(); ++b) q[b] = theta.block_of(p[rep[b]]);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace finalg
