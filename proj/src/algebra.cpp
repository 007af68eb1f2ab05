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

#include "finalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"

namespace finalg {

int Signature::find(std::string_view name) const {
  for (int i = 0; i < count(); ++i)
    if (symbols[i].name == name) return i;
  return -1;
}

bool Signature::has_nullary() const {
  return std::any_of(symbols.begin(), symbols.end(),
                     [](const OpSymbol& s) { return s.arity == 0; });
}

bool is_valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

// Number of table cells of an m-ary operation, guarded against overflow.
long long table_cells(int n, int arity) {
  long long cells = 1;
  for (int i = 0; i < arity; ++i) {
    if (cells > limits().max_table_cells / std::max(n, 1)) {
      throw limit_error("operation table would exceed the cell limit");
    }
    cells *= n;
  }
  return cells;
}

}  // namespace

int FiniteAlgebra::eval(int op, std::span<const int> args) const {
  if (op < 0 || op >= signature.count()) throw std::invalid_argument("unknown operation index");
  const OpSymbol& sym = signature.symbols[op];
  if (static_cast<int>(args.size()) != sym.arity) {
    throw std::invalid_argument("operation '" + sym.name + "' expects " +
                                std::to_string(sym.arity) + " arguments, got " +
                                std::to_string(args.size()));
  }
  size_t index = 0;
  for (int a : args) {
    if (a < 0 || a >= size) {
      throw std::invalid_argument("argument " + std::to_string(a) + " out of range for '" +
                                  sym.name + "'");
    }
    index = index * static_cast<size_t>(size) + static_cast<size_t>(a);
  }
  return tables.at(op).at(index);
}

int FiniteAlgebra::eval(std::string_view op_name, std::span<const int> args) const {
  int op = signature.find(op_name);
  if (op < 0) throw std::invalid_argument("unknown operation '" + std::string(op_name) + "'");
  return eval(op, args);
}

std::vector<std::string> validate(const FiniteAlgebra& a) {
  std::vector<std::string> out;
  if (a.size <= 0) out.push_back("size must be positive, got " + std::to_string(a.size));
  if (!is_valid_identifier(a.name)) out.push_back("algebra name '" + a.name + "' is not an identifier");

  std::set<std::string> seen;
  for (const OpSymbol& sym : a.signature.symbols) {
    if (!is_valid_identifier(sym.name))
      out.push_back("operation name '" + sym.name + "' is not an identifier");
    if (sym.arity < 0)
      out.push_back("operation '" + sym.name + "' has negative arity");
    if (!seen.insert(sym.name).second)
      out.push_back("duplicate operation name '" + sym.name + "'");
  }

  if (static_cast<int>(a.tables.size()) != a.signature.count()) {
    out.push_back("expected " + std::to_string(a.signature.count()) + " tables, got " +
                  std::to_string(a.tables.size()));
    return out;
  }
  if (a.size <= 0) return out;

  for (int op = 0; op < a.signature.count(); ++op) {
    const OpSymbol& sym = a.signature.symbols[op];
    if (sym.arity < 0) continue;
    long long want;
    try {
      want = table_cells(a.size, sym.arity);
    } catch (const limit_error&) {
      out.push_back("table of '" + sym.name + "' exceeds the cell limit");
      continue;
    }
    const auto& table = a.tables[op];
    if (static_cast<long long>(table.size()) != want) {
      out.push_back("table of '" + sym.name + "': expected " + std::to_string(want) +
                    " entries, got " + std::to_string(table.size()));
      continue;
    }
    for (size_t i = 0; i < table.size(); ++i) {
      if (table[i] < 0 || table[i] >= a.size) {
        out.push_back("table of '" + sym.name + "': entry " + std::to_string(table[i]) +
                      " at index " + std::to_string(i) + " out of range");
      }
    }
  }
  return out;
}

Term Term::var(int index) {
  if (index < 0) throw std::invalid_argument("variable index must be non-negative");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

std::string Term::to_string() const {
  if (is_var()) {
    static const char* named[] = {"x", "y", "z"};
    if (var_ < 3) return named[var_];
    return "x" + std::to_string(var_);
  }
  if (args_.empty()) return symbol_;
  std::string out = symbol_ + "(";
  for (size_t i = 0; i < args_.size(); ++i) {
    if (i > 0) out += ",";
    out += args_[i].to_string();
  }
  return out + ")";
}

void check_term(const FiniteAlgebra& a, const Term& t) {
  if (t.is_var()) return;
  int op = a.signature.find(t.symbol());
  if (op < 0) throw std::invalid_argument("unknown symbol '" + t.symbol() + "' in term");
  int arity = a.signature.arity(op);
  if (static_cast<int>(t.args().size()) != arity) {
    throw std::invalid_argument("symbol '" + t.symbol() + "' expects " + std::to_string(arity) +
                                " arguments, got " + std::to_string(t.args().size()));
  }
  for (const Term& arg : t.args()) check_term(a, arg);
}

int eval_term(const FiniteAlgebra& a, const Term& t, const Assignment& asg) {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(asg.size()))
      throw std::invalid_argument("unbound variable " + t.to_string());
    int v = asg[t.var_index()];
    if (v < 0 || v >= a.size)
      throw std::invalid_argument("assignment value " + std::to_string(v) + " out of range");
    return v;
  }
  std::vector<int> args;
  args.reserve(t.args().size());
  for (const Term& arg : t.args()) args.push_back(eval_term(a, arg, asg));
  return a.eval(t.symbol(), args);
}

namespace {

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_var()) {
    out.push_back(t.var_index());
    return;
  }
  for (const Term& arg : t.args()) collect_vars(arg, out);
}

}  // namespace

std::vector<int> term_variables(const Term& t) {
  std::vector<int> vars;
  collect_vars(t, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::optional<Assignment> identity_counterexample(const FiniteAlgebra& a, const Term& lhs,
                                                  const Term& rhs) {
  check_term(a, lhs);
  check_term(a, rhs);
  std::vector<int> vars = term_variables(lhs);
  for (int v : term_variables(rhs)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  long long total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (total > limits().max_identity_assignments / std::max(a.size, 1))
      throw limit_error("identity check over " + std::to_string(vars.size()) +
                        " variables exceeds the assignment limit");
    total *= a.size;
  }

  int maxvar = vars.empty() ? -1 : vars.back();
  Assignment asg(maxvar + 1, 0);
  std::vector<int> counters(vars.size(), 0);
  for (long long step = 0; step < total; ++step) {
    for (size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = counters[i];
    if (eval_term(a, lhs, asg) != eval_term(a, rhs, asg)) return asg;
    // odometer, last variable fastest
    for (int i = static_cast<int>(counters.size()) - 1; i >= 0; --i) {
      if (++counters[i] < a.size) break;
      counters[i] = 0;
    }
  }
  return std::nullopt;
}

bool satisfies_identity(const FiniteAlgebra& a, const Term& lhs, const Term& rhs) {
  return !identity_counterexample(a, lhs, rhs).has_value();
}

bool is_idempotent_algebra(const FiniteAlgebra& a) {
  Term x = Term::var(0);
  for (const OpSymbol& sym : a.signature.symbols) {
    std::vector<Term> args(sym.arity, x);
    if (!satisfies_identity(a, Term::app(sym.name, args), x)) return false;
  }
  return true;
}

std::vector<int> absorbing_elements(const FiniteAlgebra& a) {
  std::vector<int> out;
  for (int e = 0; e < a.size; ++e) {
    bool absorbing = true;
    for (int op = 0; op < a.signature.count() && absorbing; ++op) {
      int arity = a.signature.arity(op);
      const auto& table = a.tables[op];
      if (arity == 0) {
        absorbing = table.at(0) == e;
        continue;
      }
      for (size_t flat = 0; flat < table.size() && absorbing; ++flat) {
        // decode the argument tuple to see whether e occurs in it
        size_t rest = flat;
        bool uses_e = false;
        for (int i = 0; i < arity; ++i) {
          if (static_cast<int>(rest % a.size) == e) uses_e = true;
          rest /= a.size;
        }
        if (uses_e && table[flat] != e) absorbing = false;
      }
    }
    if (absorbing) out.push_back(e);
  }
  return out;
}

}  // namespace finalg
