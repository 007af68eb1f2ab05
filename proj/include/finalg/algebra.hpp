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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace finalg {

struct OpSymbol {
  std::string name;
  int arity = 0;
};

/// Operation symbols in declaration order.
struct Signature {
  std::vector<OpSymbol> symbols;

  int find(std::string_view name) const;  // index, or -1 when absent
  int arity(int op) const { return symbols.at(op).arity; }
  int count() const { return static_cast<int>(symbols.size()); }
  bool has_nullary() const;
};

bool is_valid_identifier(std::string_view s);

/// Finite algebra on the universe {0..size-1}. Every table is flat and
/// row-major with the leftmost argument varying slowest; a nullary table
/// holds exactly one entry. Values are immutable by convention: every
/// operation in this library is a pure function of its inputs.
struct FiniteAlgebra {
  std::string name;
  int size = 0;
  Signature signature;
  std::vector<std::vector<int>> tables;  // one per symbol

  int eval(int op, std::span<const int> args) const;
  int eval(std::string_view op_name, std::span<const int> args) const;
};

/// Every invariant violation (duplicate or malformed symbol name, wrong table
/// length, out-of-range entry) as a human-readable message with its location.
/// An empty result means the algebra is valid.
std::vector<std::string> validate(const FiniteAlgebra& a);

/// A term: variable (by index) or operation symbol applied to subterms.
class Term {
 public:
  static Term var(int index);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return var_ >= 0; }
  int var_index() const { return var_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }
  std::string to_string() const;  // x, y, z, x3, x4, ... for variables

 private:
  Term() = default;
  int var_ = -1;
  std::string symbol_;
  std::vector<Term> args_;
};

/// Variable index -> element. Must cover every variable of the terms in play.
using Assignment = std::vector<int>;

/// Throws std::invalid_argument when t mentions unknown symbols or applies a
/// symbol at the wrong arity.
void check_term(const FiniteAlgebra& a, const Term& t);

int eval_term(const FiniteAlgebra& a, const Term& t, const Assignment& asg);

std::vector<int> term_variables(const Term& t);  // sorted, distinct

/// Exhaustive check of lhs ≈ rhs over all assignments to the variables that
/// occur in either term. Returns the first failing assignment (assignments
/// enumerated with the last variable fastest), or nullopt when the identity
/// holds. Guarded by limits().max_identity_assignments.
std::optional<Assignment> identity_counterexample(const FiniteAlgebra& a, const Term& lhs,
                                                  const Term& rhs);
bool satisfies_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs);

/// f(x,...,x) ≈ x for every symbol f. A nullary symbol fails this unless the
/// algebra has one element.
bool is_idempotent_algebra(const FiniteAlgebra& a);

/// All elements e such that every operation of arity >= 1 returns e whenever
/// some argument is e, and every nullary symbol equals e.
std::vector<int> absorbing_elements(const FiniteAlgebra& a);

}  // namespace finalg
