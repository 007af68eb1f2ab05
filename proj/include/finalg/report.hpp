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

#include <functional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/congruence.hpp"
#include "finalg/properties.hpp"
#include "finalg/structures.hpp"

namespace finalg {

struct AnalysisReport {
  std::string name;
  int size = 0;
  CongruenceLattice lattice;
  std::vector<int> absorbing;
  ReesVerdict rees;
  bool rees_two_generated = false;
  bool rees_polynomials = false;
  QuasiReesVerdict quasi_rees;
  OneBlockVerdict one_block;
  bool obp_characterization = false;
  bool uniform = false;
  bool permutable2 = false;
  bool permutable3 = false;
  bool modular = false;
  bool semimodular = false;
};

/// Runs every decider. Routes that decide the same property must agree; a
/// disagreement throws std::logic_error rather than emitting a report.
AnalysisReport analyze(const FiniteAlgebra& a);

// JSON documents carry a schema version field "v": 1 and a stable key order;
// repeated runs produce byte-identical output.
std::string analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);
std::string lattice_to_json(const std::string& name, int size, const CongruenceLattice& lat);
std::string lattice_to_text(const std::string& name, const CongruenceLattice& lat);

/// Named predicates for search: rees, quasi-rees, obp, uniform, directoid,
/// idempotent. Throws std::invalid_argument on unknown names.
std::function<bool(const FiniteAlgebra&)> named_predicate(const std::string& name);

struct SearchRequest {
  GeneratorSpec generator;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  long long witness_limit = -1;  // < 0: keep all witnesses
};

struct SearchOutcome {
  SearchRequest request;
  std::string enumerator;  // "tables", "directoids" or "random"
  long long examined = 0;
  long long matched = 0;
  std::vector<FiniteAlgebra> witnesses;
};

SearchOutcome run_search(const SearchRequest& req);
std::string search_to_json(const SearchOutcome& o);
std::string search_to_text(const SearchOutcome& o);

}  // namespace finalg
