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

#include "finalg/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"

namespace finalg {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{"", line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      t.text += text[i];
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw parse_error("unexpected end of input", last_line());
    return tokens_[pos_];
  }

  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }

  void expect_keyword(const std::string& kw) {
    Token t = next();
    if (t.text != kw)
      throw parse_error("expected '" + kw + "', got '" + t.text + "'", t.line, t.col);
  }

  long long next_int(const std::string& what) {
    Token t = next();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      throw parse_error("expected " + what + ", got '" + t.text + "'", t.line, t.col);
    return value;
  }

  int last_line() const { return tokens_.empty() ? 0 : tokens_.back().line; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

long long checked_table_cells(int n, int arity, const Token& at) {
  long long cells = 1;
  for (int i = 0; i < arity; ++i) {
    if (cells > limits().max_table_cells / std::max(n, 1))
      throw limit_error("line " + std::to_string(at.line) + ": operation table too large");
    cells *= n;
  }
  return cells;
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text) {
  TokenStream ts(tokenize(text));

  ts.expect_keyword("algebra");
  Token name = ts.next();
  if (!is_valid_identifier(name.text))
    throw parse_error("algebra name '" + name.text + "' is not an identifier", name.line,
                      name.col);

  ts.expect_keyword("size");
  long long size = ts.next_int("a size");
  if (size < 1) throw parse_error("size must be positive, got " + std::to_string(size));

  FiniteAlgebra a;
  a.name = name.text;
  a.size = static_cast<int>(size);

  while (!ts.done()) {
    Token kw = ts.next();
    if (kw.text != "op")
      throw parse_error("expected 'op', got '" + kw.text + "'", kw.line, kw.col);
    Token op_name = ts.next();
    if (!is_valid_identifier(op_name.text))
      throw parse_error("operation name '" + op_name.text + "' is not an identifier",
                        op_name.line, op_name.col);
    long long arity = ts.next_int("an arity");
    if (arity < 0) throw parse_error("arity must be non-negative", op_name.line, op_name.col);

    long long cells = checked_table_cells(a.size, static_cast<int>(arity), op_name);
    std::vector<int> table;
    table.reserve(static_cast<size_t>(cells));
    for (long long i = 0; i < cells; ++i) {
      if (ts.done() || ts.peek().text == "op") {
        throw parse_error("table of '" + op_name.text + "': expected " + std::to_string(cells) +
                              " entries, got " + std::to_string(i),
                          op_name.line, op_name.col);
      }
      long long v = ts.next_int("a table entry");
      table.push_back(static_cast<int>(v));
    }
    a.signature.symbols.push_back({op_name.text, static_cast<int>(arity)});
    a.tables.push_back(std::move(table));
  }

  std::vector<std::string> violations = validate(a);
  if (!violations.empty()) {
    std::string msg = "invalid algebra";
    for (const std::string& v : violations) msg += "; " + v;
    throw parse_error(msg);
  }
  return a;
}

std::string serialize_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name << "\n";
  out << "size " << a.size << "\n";
  for (int op = 0; op < a.signature.count(); ++op) {
    const OpSymbol& sym = a.signature.symbols[op];
    out << "op " << sym.name << " " << sym.arity << "\n";
    const auto& table = a.tables[op];
    if (sym.arity == 0) {
      out << table.at(0) << "\n";
      continue;
    }
    // rows of n entries: the last argument varies within a line
    for (size_t i = 0; i < table.size(); ++i) {
      out << table[i];
      out << ((i + 1) % a.size == 0 ? '\n' : ' ');
    }
  }
  return out.str();
}

Partition parse_partition(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("universe must be non-empty");
  std::vector<int> labels(n, -1);
  int block = 0;
  bool block_has_elements = false;

  size_t i = 0;
  auto skip_soft = [&]() {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
      ++i;
    }
  };
  skip_soft();
  if (i >= text.size()) throw parse_error("empty partition");

  while (i < text.size()) {
    if (text[i] == '|') {
      if (!block_has_elements) throw parse_error("empty block in partition");
      ++block;
      block_has_elements = false;
      ++i;
      skip_soft();
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error(std::string("unexpected character '") + text[i] + "' in partition");
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    int value = 0;
    std::from_chars(text.data() + start, text.data() + i, value);
    if (value >= n) throw parse_error("element " + std::to_string(value) + " out of range");
    if (labels[value] >= 0) throw parse_error("duplicate element " + std::to_string(value));
    labels[value] = block;
    block_has_elements = true;
    skip_soft();
  }
  if (!block_has_elements) throw parse_error("empty block in partition");
  for (int e = 0; e < n; ++e)
    if (labels[e] < 0) throw parse_error("element " + std::to_string(e) + " missing");
  return Partition(std::move(labels));
}

namespace {

class TermParser {
 public:
  TermParser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = parse_term();
    skip_spaces();
    if (pos_ < text_.size())
      throw parse_error("trailing input after term", 1, static_cast<int>(pos_) + 1);
    return t;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, 1, static_cast<int>(pos_) + 1);
  }

  std::string parse_identifier() {
    skip_spaces();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a name");
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  static std::optional<int> variable_index(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    if (name.size() == 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1])))
      return name[1] - '0';
    return std::nullopt;
  }

  Term parse_term() {
    std::string name = parse_identifier();
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;  // '('
      int op = sig_.find(name);
      if (op < 0) fail("unknown symbol '" + name + "'");
      std::vector<Term> args;
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        while (true) {
          args.push_back(parse_term());
          skip_spaces();
          if (pos_ >= text_.size()) fail("expected ',' or ')'");
          if (text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (text_[pos_] == ')') {
            ++pos_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
      if (static_cast<int>(args.size()) != sig_.arity(op)) {
        fail("symbol '" + name + "' expects " + std::to_string(sig_.arity(op)) +
             " arguments, got " + std::to_string(args.size()));
      }
      return Term::app(name, std::move(args));
    }
    if (auto v = variable_index(name)) return Term::var(*v);
    int op = sig_.find(name);
    if (op < 0) fail("unknown symbol or variable '" + name + "'");
    if (sig_.arity(op) != 0) fail("symbol '" + name + "' needs arguments");
    return Term::app(name, {});
  }

  const std::string& text_;
  const Signature& sig_;
  size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
  return TermParser(text, sig).parse();
}

Signature parse_signature_spec(const std::string& text) {
  Signature sig;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream in(group);
    std::string kw, name;
    long long arity = -1;
    if (!(in >> kw >> name >> arity) || kw != "op")
      throw parse_error("signature groups look like 'op <name> <arity>', got '" + group + "'");
    std::string extra;
    if (in >> extra) throw parse_error("trailing input in signature group '" + group + "'");
    if (!is_valid_identifier(name))
      throw parse_error("operation name '" + name + "' is not an identifier");
    if (arity < 0) throw parse_error("arity must be non-negative");
    if (sig.find(name) >= 0) throw parse_error("duplicate operation name '" + name + "'");
    sig.symbols.push_back({name, static_cast<int>(arity)});
  }
  if (sig.symbols.empty()) throw parse_error("empty signature");
  return sig;
}

std::string emit_dot(const CongruenceLattice& lat) {
  std::ostringstream out;
  out << "digraph conlat {\n";
  out << "  rankdir=BT;\n";
  for (size_t i = 0; i < lat.congruences.size(); ++i)
    out << "  n" << i << " [label=\"" << lat.congruences[i].to_string() << "\"];\n";
  for (const auto& [lo, hi] : lat.covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace finalg
