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

// Command line front end; talks to the library exclusively through the C API
// in finalg.h.
//
// Exit codes: 0 success (or property holds), 1 property fails (check
// commands), 2 usage or parse error, 3 resource guard exceeded, 4 internal
// error.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "finalg.h"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;
constexpr int kInternal = 4;

int exit_code_for(finalg_status status) {
  switch (status) {
    case FINALG_OK:
      return kOk;
    case FINALG_PARSE_ERROR:
    case FINALG_INVALID_ARGUMENT:
      return kUsage;
    case FINALG_LIMIT_EXCEEDED:
      return kLimit;
    default:
      return kInternal;
  }
}

int report_failure(finalg_status status) {
  std::cerr << "error: " << finalg_last_error() << "\n";
  return exit_code_for(status);
}

struct AlgebraHandle {
  finalg_algebra* ptr = nullptr;
  ~AlgebraHandle() { finalg_algebra_free(ptr); }
};

struct LatticeHandle {
  finalg_lattice* ptr = nullptr;
  ~LatticeHandle() { finalg_lattice_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { finalg_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

std::vector<const char*> c_view(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const std::string& s : items) out.push_back(s.c_str());
  return out;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << content;
  return true;
}

int cmd_validate(const std::string& file) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);
  std::cout << "ok: " << finalg_algebra_name(a.ptr) << " (size " << finalg_algebra_size(a.ptr)
            << ")\n";
  return kOk;
}

int cmd_conlat(const std::string& file, const std::string& dot_path, bool json) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);
  LatticeHandle lat;
  status = finalg_lattice_compute(a.ptr, &lat.ptr);
  if (status != FINALG_OK) return report_failure(status);

  if (!dot_path.empty()) {
    StringHandle dot;
    status = finalg_lattice_dot(lat.ptr, &dot.ptr);
    if (status != FINALG_OK) return report_failure(status);
    if (!write_output(dot_path, dot.str())) return kUsage;
  }

  StringHandle body;
  status = json ? finalg_lattice_json(lat.ptr, &body.ptr) : finalg_lattice_text(lat.ptr, &body.ptr);
  if (status != FINALG_OK) return report_failure(status);
  std::cout << body.str();
  return kOk;
}

int cmd_analyze(const std::string& file, bool json) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);
  StringHandle body;
  status = json ? finalg_analyze_json(a.ptr, &body.ptr) : finalg_analyze_text(a.ptr, &body.ptr);
  if (status != FINALG_OK) return report_failure(status);
  std::cout << body.str();
  return kOk;
}

int cmd_quotient(const std::string& file, const std::string& theta, const std::string& out_path) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);
  AlgebraHandle q;
  status = finalg_quotient(a.ptr, theta.c_str(), &q.ptr);
  if (status != FINALG_OK) return report_failure(status);
  StringHandle text;
  status = finalg_algebra_to_text(q.ptr, &text.ptr);
  if (status != FINALG_OK) return report_failure(status);
  return write_output(out_path, text.str()) ? kOk : kUsage;
}

int cmd_check_identity(const std::string& file, const std::string& lhs, const std::string& rhs) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);
  int holds = 0;
  StringHandle counterexample;
  status = finalg_check_identity(a.ptr, lhs.c_str(), rhs.c_str(), &holds, &counterexample.ptr);
  if (status != FINALG_OK) return report_failure(status);
  if (holds) {
    std::cout << "holds\n";
    return kOk;
  }
  std::cout << "fails: " << counterexample.str() << "\n";
  return kPropertyFails;
}

// Dispatch: --constant runs the unit-separation check over all given terms;
// otherwise --p0 plus --p terms run the diagonal-agreement check; --p0 alone
// runs the closed-image check.
int cmd_check_terms(const std::string& file, const std::string& p0,
                    const std::vector<std::string>& ps, int constant, bool has_constant) {
  AlgebraHandle a;
  finalg_status status = finalg_algebra_read_file(file.c_str(), &a.ptr);
  if (status != FINALG_OK) return report_failure(status);

  int holds = 0;
  if (has_constant) {
    std::vector<std::string> terms;
    if (!p0.empty()) terms.push_back(p0);
    terms.insert(terms.end(), ps.begin(), ps.end());
    if (terms.empty()) {
      std::cerr << "error: --constant needs at least one term\n";
      return kUsage;
    }
    auto view = c_view(terms);
    status = finalg_check_unit_separation(a.ptr, constant, view.data(), view.size(), &holds);
    if (status != FINALG_OK) return report_failure(status);
    std::cout << "unit separation at " << constant << ": " << (holds ? "holds" : "fails") << "\n";
  } else if (!ps.empty()) {
    if (p0.empty()) {
      std::cerr << "error: the diagonal check needs --p0\n";
      return kUsage;
    }
    std::vector<std::string> terms{p0};
    terms.insert(terms.end(), ps.begin(), ps.end());
    auto view = c_view(terms);
    status = finalg_check_diagonal(a.ptr, view.data(), view.size(), &holds);
    if (status != FINALG_OK) return report_failure(status);
    std::cout << "diagonal separation: " << (holds ? "holds" : "fails") << "\n";
  } else {
    if (p0.empty()) {
      std::cerr << "error: nothing to check; give --p0 (and --p/--constant)\n";
      return kUsage;
    }
    status = finalg_check_closed_image(a.ptr, p0.c_str(), &holds);
    if (status != FINALG_OK) return report_failure(status);
    std::cout << "closed image: " << (holds ? "holds" : "fails") << "\n";
  }
  return holds ? kOk : kPropertyFails;
}

int cmd_search(const std::string& signature, int size, bool exhaustive,
               const std::vector<uint64_t>& random_args, bool up_to_iso, long long limit,
               const std::vector<std::string>& require, const std::vector<std::string>& forbid,
               bool json) {
  if (exhaustive == !random_args.empty()) {
    std::cerr << "error: choose exactly one of --exhaustive and --random SEED COUNT\n";
    return kUsage;
  }
  uint64_t seed = random_args.empty() ? 0 : random_args[0];
  uint64_t count = random_args.empty() ? 0 : random_args[1];
  auto require_view = c_view(require);
  auto forbid_view = c_view(forbid);
  StringHandle body;
  finalg_status status =
      (json ? finalg_search_json : finalg_search_text)(signature.c_str(), size, exhaustive ? 1 : 0,
                                                       seed, count, up_to_iso ? 1 : 0, limit,
                                                       require_view.data(), require_view.size(),
                                                       forbid_view.data(), forbid_view.size(),
                                                       &body.ptr);
  if (status != FINALG_OK) return report_failure(status);
  std::cout << body.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal-algebra workbench"};
  app.require_subcommand(1);

  int max_size = 0;
  app.add_option("--max-size", max_size, "override every size guard (UA_MAX_SIZE equivalent)");

  std::string file, dot_path, out_path, theta, lhs, rhs, p0, signature;
  std::vector<std::string> ps, require, forbid;
  bool json = false, exhaustive = false, up_to_iso = false;
  int constant = 0;
  long long limit = -1;
  int size = 0;
  std::vector<uint64_t> random_args;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  validate->add_option("file", file)->required();

  CLI::App* conlat = app.add_subcommand("conlat", "compute the congruence lattice");
  conlat->add_option("file", file)->required();
  conlat->add_option("--dot", dot_path, "write the Hasse diagram as DOT ('-' for stdout)");
  conlat->add_flag("--json", json);

  CLI::App* analyze = app.add_subcommand("analyze", "run every decider and report");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--json", json);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient by a congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("--theta", theta, "congruence, e.g. \"0|1 2 3\"")->required();
  quotient->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* check_identity = app.add_subcommand("check-identity", "test lhs ≈ rhs exhaustively");
  check_identity->add_option("file", file)->required();
  check_identity->add_option("--lhs", lhs)->required();
  check_identity->add_option("--rhs", rhs)->required();

  CLI::App* check_terms = app.add_subcommand("check-terms", "term condition checks");
  check_terms->add_option("file", file)->required();
  check_terms->add_option("--p0", p0);
  check_terms->add_option("--p", ps, "additional binary terms");
  CLI::Option* constant_opt = check_terms->add_option("--constant", constant, "unit element");

  CLI::App* search = app.add_subcommand("search", "enumerate or sample algebras by properties");
  search->add_option("--signature", signature, "e.g. \"op f 2\"")->required();
  search->add_option("--size", size)->required();
  search->add_flag("--exhaustive", exhaustive);
  search->add_option("--random", random_args, "SEED COUNT")->expected(2);
  search->add_flag("--up-to-iso", up_to_iso);
  search->add_option("--limit", limit, "keep at most this many witnesses (< 0: all)");
  search->add_option("--require", require, "rees|quasi-rees|obp|uniform|directoid|idempotent");
  search->add_option("--forbid", forbid, "same predicate names");
  search->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (max_size > 0) finalg_set_max_size(max_size);

  if (validate->parsed()) return cmd_validate(file);
  if (conlat->parsed()) return cmd_conlat(file, dot_path, json);
  if (analyze->parsed()) return cmd_analyze(file, json);
  if (quotient->parsed()) return cmd_quotient(file, theta, out_path);
  if (check_identity->parsed()) return cmd_check_identity(file, lhs, rhs);
  if (check_terms->parsed())
    return cmd_check_terms(file, p0, ps, constant, constant_opt->count() > 0);
  if (search->parsed())
    return cmd_search(signature, size, exhaustive, random_args, up_to_iso, limit, require, forbid,
                      json);
  return kUsage;
}
