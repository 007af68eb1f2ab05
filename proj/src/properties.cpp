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

#include "finalg/properties.hpp"

#include <stdexcept>

namespace finalg {

Partition rees_extension(const ElementSet& block) {
  int n = block.universe_size();
  std::vector<int> labels(n);
  int merged = -1;
  for (int e = 0; e < n; ++e) {
    if (block.contains(e)) {
      if (merged < 0) merged = e;
      labels[e] = merged;
    } else {
      labels[e] = e;
    }
  }
  return Partition(std::move(labels));
}

bool is_rees_block(const FiniteAlgebra& a, const ElementSet& block) {
  return is_congruence(a, rees_extension(block));
}

bool is_rees_block_via_polynomials(const FiniteAlgebra& a, const ElementSet& block,
                                   const std::vector<UnaryFunction>& p1) {
  if (block.universe_size() != a.size) throw std::invalid_argument("set universe mismatch");
  std::vector<int> elems = block.elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      for (const UnaryFunction& p : p1) {
        int px = p[elems[i]];
        int py = p[elems[j]];
        if (px != py && !(block.contains(px) && block.contains(py))) return false;
      }
    }
  }
  return true;
}

ReesVerdict is_rees_algebra(const FiniteAlgebra& a) {
  for (const ElementSet& b : all_subuniverses(a)) {
    if (!is_rees_block(a, b)) return {false, b};
  }
  return {true, std::nullopt};
}

bool is_rees_algebra_via_two_generated(const FiniteAlgebra& a) {
  // Rees blocks are evaluated in the ambient algebra: a subuniverse of a
  // two-generated subalgebra may extend to a congruence of the subalgebra
  // without extending to one of a, so the restricted check would not match
  // the definition.
  for (int x = 0; x < a.size; ++x) {
    for (int y = x; y < a.size; ++y) {
      ElementSet gen = generated_subuniverse(a, ElementSet::from_elements(a.size, {x, y}));
      FiniteAlgebra sub = subalgebra(a, gen);
      std::vector<int> global = gen.elements();
      for (const ElementSet& local : all_subuniverses(sub)) {
        ElementSet c(a.size);
        for (int e : local.elements()) c.add(global[e]);
        if (!is_rees_block(a, c)) return false;
      }
    }
  }
  return true;
}

bool is_rees_algebra_via_polynomials(const FiniteAlgebra& a) {
  std::vector<UnaryFunction> p1 = unary_polynomials(a);
  for (int x = 0; x < a.size; ++x) {
    for (int y = x + 1; y < a.size; ++y) {
      ElementSet gen = generated_subuniverse(a, ElementSet::from_elements(a.size, {x, y}));
      for (const UnaryFunction& p : p1) {
        int px = p[x];
        int py = p[y];
        if (px != py && !(gen.contains(px) && gen.contains(py))) return false;
      }
    }
  }
  return true;
}

QuasiReesVerdict is_quasi_rees(const FiniteAlgebra& a) {
  return is_quasi_rees(a, all_congruences(a));
}

QuasiReesVerdict is_quasi_rees(const FiniteAlgebra& a, const CongruenceLattice& lat) {
  QuasiReesVerdict verdict;
  verdict.holds = true;
  for (const Partition& theta : lat.congruences) {
    if (theta.block_count() == theta.size()) continue;  // omega
    bool found = false;
    for (int b = 0; b < theta.block_count() && !found; ++b) {
      ElementSet c = block_as_set(theta, b);
      if (c.count() < 2) continue;
      if (!is_subuniverse(a, c)) continue;
      if (!is_rees_block(a, c)) continue;
      verdict.witnesses.emplace_back(theta, c);
      found = true;
    }
    if (!found) {
      verdict.holds = false;
      verdict.failing_congruence = theta;
      verdict.witnesses.clear();
      return verdict;
    }
  }
  return verdict;
}

OneBlockVerdict has_one_block_property(const FiniteAlgebra& a) {
  return has_one_block_property(a, all_congruences(a));
}

OneBlockVerdict has_one_block_property(const FiniteAlgebra& a, const CongruenceLattice& lat) {
  (void)a;
  OneBlockVerdict verdict;
  verdict.holds = true;
  for (int i : lat.atom_indices()) {
    const Partition& atom = lat.congruences[i];
    std::vector<ElementSet> big;
    for (int b = 0; b < atom.block_count(); ++b) {
      ElementSet c = block_as_set(atom, b);
      if (c.count() >= 2) big.push_back(c);
    }
    if (big.size() != 1 && verdict.holds) {
      verdict.holds = false;
      verdict.failing_atom = atom;
    }
    verdict.atom_blocks.emplace_back(atom, std::move(big));
  }
  return verdict;
}

bool obp_characterization_holds(const FiniteAlgebra& a) {
  int n = a.size;
  std::vector<std::vector<Partition>> principal;
  principal.reserve(n);
  for (int x = 0; x < n; ++x) {
    std::vector<Partition> row;
    row.reserve(n);
    for (int y = 0; y < n; ++y) row.push_back(principal_congruence(a, x, y));
    principal.push_back(std::move(row));
  }

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Partition& theta = principal[x][y];
      bool hypothesis = true;
      for (int u = 0; u < n && hypothesis; ++u) {
        for (int v = u + 1; v < n && hypothesis; ++v) {
          if (!theta.same_block(u, v)) continue;
          if (!principal[u][v].same_block(x, y)) hypothesis = false;
        }
      }
      if (!hypothesis) continue;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!theta.same_block(u, v)) continue;
          if (!theta.same_block(u, x) || !theta.same_block(v, x)) return false;
        }
      }
    }
  }
  return true;
}

bool is_weakly_regular_at(const FiniteAlgebra& a, int e) {
  return is_weakly_regular_at(a, e, all_congruences(a));
}

bool is_weakly_regular_at(const FiniteAlgebra& a, int e, const CongruenceLattice& lat) {
  if (e < 0 || e >= a.size) throw std::invalid_argument("element out of range");
  std::vector<ElementSet> classes;
  for (const Partition& theta : lat.congruences) {
    ElementSet c = block_as_set(theta, theta.block_of(e));
    for (const ElementSet& other : classes)
      if (other == c) return false;
    classes.push_back(c);
  }
  return true;
}

bool check_closed_image_term(const FiniteAlgebra& a, const Term& v) {
  check_term(a, v);
  if (term_variables(v).size() > 1)
    throw std::invalid_argument("term must use at most one variable");
  for (const OpSymbol& sym : a.signature.symbols) {
    std::vector<Term> args(sym.arity, v);
    if (!satisfies_identity(a, Term::app(sym.name, args), v)) return false;
  }
  return true;
}

namespace {

void require_binary_terms(const FiniteAlgebra& a, const std::vector<Term>& terms) {
  if (terms.empty()) throw std::invalid_argument("at least one term required");
  for (const Term& t : terms) {
    check_term(a, t);
    for (int v : term_variables(t))
      if (v > 1) throw std::invalid_argument("terms may use only the variables x and y");
  }
}

}  // namespace

bool check_diagonal_separation(const FiniteAlgebra& a, const std::vector<Term>& terms) {
  require_binary_terms(a, terms);
  Assignment asg(2, 0);
  for (int x = 0; x < a.size; ++x) {
    for (int y = 0; y < a.size; ++y) {
      asg[0] = x;
      asg[1] = y;
      bool agree = true;
      int first = eval_term(a, terms[0], asg);
      for (size_t i = 1; i < terms.size() && agree; ++i)
        agree = eval_term(a, terms[i], asg) == first;
      if (agree != (x == y)) return false;
    }
  }
  return true;
}

bool check_unit_separation(const FiniteAlgebra& a, int unit, const std::vector<Term>& terms) {
  if (unit < 0 || unit >= a.size) throw std::invalid_argument("unit element out of range");
  require_binary_terms(a, terms);
  Assignment asg(2, 0);
  for (int x = 0; x < a.size; ++x) {
    for (int y = 0; y < a.size; ++y) {
      asg[0] = x;
      asg[1] = y;
      bool all_unit = true;
      for (size_t i = 0; i < terms.size() && all_unit; ++i)
        all_unit = eval_term(a, terms[i], asg) == unit;
      if (all_unit != (x == y)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Partition, std::optional<ElementSet>>> nontrivial_subuniverse_class_report(
    const FiniteAlgebra& a) {
  std::vector<std::pair<Partition, std::optional<ElementSet>>> out;
  for (const Partition& theta : all_congruences(a).congruences) {
    if (theta.block_count() == theta.size()) continue;
    std::optional<ElementSet> witness;
    for (int b = 0; b < theta.block_count(); ++b) {
      ElementSet c = block_as_set(theta, b);
      if (c.count() >= 2 && is_subuniverse(a, c)) {
        witness = c;
        break;
      }
    }
    out.emplace_back(theta, witness);
  }
  return out;
}

}  // namespace finalg
