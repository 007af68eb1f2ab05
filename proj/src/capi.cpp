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

#include "finalg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "finalg/error.hpp"
#include "finalg/limits.hpp"
#include "finalg/quotient.hpp"
#include "finalg/report.hpp"
#include "finalg/textio.hpp"

struct finalg_algebra {
  finalg::FiniteAlgebra impl;
};

struct finalg_lattice {
  std::string name;
  int size = 0;
  finalg::CongruenceLattice impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message ? message : "unknown error"; }

template <typename Fn>
finalg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return FINALG_OK;
  } catch (const finalg::parse_error& e) {
    set_error(e.what());
    return FINALG_PARSE_ERROR;
  } catch (const finalg::limit_error& e) {
    set_error(e.what());
    return FINALG_LIMIT_EXCEEDED;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FINALG_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FINALG_INTERNAL_ERROR;
  } catch (...) {
    set_error("unknown error");
    return FINALG_INTERNAL_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

finalg_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return FINALG_INVALID_ARGUMENT;
  }
  return FINALG_OK;
}

std::vector<std::string> to_strings(const char* const* items, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(items[i] ? items[i] : "");
  return out;
}

std::vector<finalg::Term> parse_terms(const finalg::FiniteAlgebra& a, const char* const* terms,
                                      size_t count) {
  std::vector<finalg::Term> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (terms[i] == nullptr) throw std::invalid_argument("term pointer is null");
    out.push_back(finalg::parse_term(terms[i], a.signature));
  }
  return out;
}

finalg_status run_search_c(const char* signature, int size, int mode_exhaustive, uint64_t seed,
                           uint64_t random_count, int up_to_iso, long long witness_limit,
                           const char* const* require_names, size_t require_count,
                           const char* const* forbid_names, size_t forbid_count, char** out,
                           bool json) {
  if (require(signature != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    finalg::SearchRequest req;
    req.generator.signature = finalg::parse_signature_spec(signature);
    req.generator.size = size;
    req.generator.exhaustive = mode_exhaustive != 0;
    req.generator.seed = seed;
    req.generator.count = random_count;
    req.generator.up_to_iso = up_to_iso != 0;
    req.witness_limit = witness_limit;
    req.require = to_strings(require_names, require_count);
    req.forbid = to_strings(forbid_names, forbid_count);
    finalg::SearchOutcome o = finalg::run_search(req);
    *out = copy_string(json ? finalg::search_to_json(o) : finalg::search_to_text(o));
  });
}

}  // namespace

extern "C" {

const char* finalg_version(void) { return "1.0.0"; }

const char* finalg_last_error(void) { return g_last_error.c_str(); }

void finalg_string_free(char* s) { std::free(s); }

void finalg_set_max_size(int cap) { finalg::set_size_cap_override(cap); }

finalg_status finalg_algebra_parse(const char* text, finalg_algebra** out) {
  if (require(text != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = new finalg_algebra{finalg::parse_algebra(text)}; });
}

finalg_status finalg_algebra_read_file(const char* path, finalg_algebra** out) {
  if (require(path != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw finalg::parse_error(std::string("cannot open '") + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new finalg_algebra{finalg::parse_algebra(buffer.str())};
  });
}

void finalg_algebra_free(finalg_algebra* a) { delete a; }

int finalg_algebra_size(const finalg_algebra* a) { return a ? a->impl.size : 0; }

const char* finalg_algebra_name(const finalg_algebra* a) {
  return a ? a->impl.name.c_str() : "";
}

finalg_status finalg_algebra_to_text(const finalg_algebra* a, char** out) {
  if (require(a != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::serialize_algebra(a->impl)); });
}

finalg_status finalg_lattice_compute(const finalg_algebra* a, finalg_lattice** out) {
  if (require(a != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new finalg_lattice{a->impl.name, a->impl.size, finalg::all_congruences(a->impl)};
  });
}

void finalg_lattice_free(finalg_lattice* l) { delete l; }

int finalg_lattice_size(const finalg_lattice* l) {
  return l ? static_cast<int>(l->impl.congruences.size()) : 0;
}

finalg_status finalg_lattice_congruence(const finalg_lattice* l, int index, char** out) {
  if (require(l != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  if (require(index >= 0 && index < static_cast<int>(l->impl.congruences.size()),
              "congruence index out of range") != FINALG_OK) {
    return FINALG_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = copy_string(l->impl.congruences[index].to_string()); });
}

int finalg_lattice_cover_count(const finalg_lattice* l) {
  return l ? static_cast<int>(l->impl.covers.size()) : 0;
}

finalg_status finalg_lattice_cover(const finalg_lattice* l, int index, int* lower, int* upper) {
  if (require(l != nullptr && lower != nullptr && upper != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  if (require(index >= 0 && index < static_cast<int>(l->impl.covers.size()),
              "cover index out of range") != FINALG_OK) {
    return FINALG_INVALID_ARGUMENT;
  }
  *lower = l->impl.covers[index].first;
  *upper = l->impl.covers[index].second;
  return FINALG_OK;
}

finalg_status finalg_lattice_dot(const finalg_lattice* l, char** out) {
  if (require(l != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::emit_dot(l->impl)); });
}

finalg_status finalg_lattice_json(const finalg_lattice* l, char** out) {
  if (require(l != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::lattice_to_json(l->name, l->size, l->impl)); });
}

finalg_status finalg_lattice_text(const finalg_lattice* l, char** out) {
  if (require(l != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::lattice_to_text(l->name, l->impl)); });
}

finalg_status finalg_analyze_json(const finalg_algebra* a, char** out) {
  if (require(a != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::analysis_to_json(finalg::analyze(a->impl))); });
}

finalg_status finalg_analyze_text(const finalg_algebra* a, char** out) {
  if (require(a != nullptr && out != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(finalg::analysis_to_text(finalg::analyze(a->impl))); });
}

finalg_status finalg_quotient(const finalg_algebra* a, const char* partition,
                              finalg_algebra** out) {
  if (require(a != nullptr && partition != nullptr && out != nullptr, "null argument") !=
      FINALG_OK) {
    return FINALG_INVALID_ARGUMENT;
  }
  return guarded([&] {
    finalg::Partition theta = finalg::parse_partition(partition, a->impl.size);
    *out = new finalg_algebra{finalg::quotient_algebra(a->impl, theta).algebra};
  });
}

finalg_status finalg_check_identity(const finalg_algebra* a, const char* lhs, const char* rhs,
                                    int* holds, char** counterexample) {
  if (require(a != nullptr && lhs != nullptr && rhs != nullptr && holds != nullptr,
              "null argument") != FINALG_OK) {
    return FINALG_INVALID_ARGUMENT;
  }
  return guarded([&] {
    finalg::Term l = finalg::parse_term(lhs, a->impl.signature);
    finalg::Term r = finalg::parse_term(rhs, a->impl.signature);
    auto failing = finalg::identity_counterexample(a->impl, l, r);
    *holds = failing ? 0 : 1;
    if (failing && counterexample != nullptr) {
      std::vector<int> vars = finalg::term_variables(l);
      for (int v : finalg::term_variables(r)) vars.push_back(v);
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      std::string text;
      for (int v : vars) {
        if (!text.empty()) text += ' ';
        text += finalg::Term::var(v).to_string() + "=" + std::to_string((*failing)[v]);
      }
      *counterexample = copy_string(text);
    }
  });
}

finalg_status finalg_check_diagonal(const finalg_algebra* a, const char* const* terms,
                                    size_t count, int* holds) {
  if (require(a != nullptr && terms != nullptr && holds != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    *holds = finalg::check_diagonal_separation(a->impl, parse_terms(a->impl, terms, count)) ? 1 : 0;
  });
}

finalg_status finalg_check_unit_separation(const finalg_algebra* a, int unit,
                                           const char* const* terms, size_t count, int* holds) {
  if (require(a != nullptr && terms != nullptr && holds != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    *holds =
        finalg::check_unit_separation(a->impl, unit, parse_terms(a->impl, terms, count)) ? 1 : 0;
  });
}

finalg_status finalg_check_closed_image(const finalg_algebra* a, const char* term, int* holds) {
  if (require(a != nullptr && term != nullptr && holds != nullptr, "null argument") != FINALG_OK)
    return FINALG_INVALID_ARGUMENT;
  return guarded([&] {
    finalg::Term v = finalg::parse_term(term, a->impl.signature);
    *holds = finalg::check_closed_image_term(a->impl, v) ? 1 : 0;
  });
}

finalg_status finalg_search_json(const char* signature, int size, int mode_exhaustive,
                                 uint64_t seed, uint64_t random_count, int up_to_iso,
                                 long long witness_limit, const char* const* require_names,
                                 size_t require_count, const char* const* forbid_names,
                                 size_t forbid_count, char** out) {
  return run_search_c(signature, size, mode_exhaustive, seed, random_count, up_to_iso,
                      witness_limit, require_names, require_count, forbid_names, forbid_count,
                      out, true);
}

finalg_status finalg_search_text(const char* signature, int size, int mode_exhaustive,
                                 uint64_t seed, uint64_t random_count, int up_to_iso,
                                 long long witness_limit, const char* const* require_names,
                                 size_t require_count, const char* const* forbid_names,
                                 size_t forbid_count, char** out) {
  return run_search_c(signature, size, mode_exhaustive, seed, random_count, up_to_iso,
                      witness_limit, require_names, require_count, forbid_names, forbid_count,
                      out, false);
}

}  // extern "C"
