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

#include "finalg/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "finalg/quotient.hpp"
#include "finalg/textio.hpp"

namespace finalg {

using ordered_json = nlohmann::ordered_json;

AnalysisReport analyze(const FiniteAlgebra& a) {
  AnalysisReport r;
  r.name = a.name;
  r.size = a.size;
  r.lattice = all_congruences(a);
  r.absorbing = absorbing_elements(a);

  r.rees = is_rees_algebra(a);
  r.rees_two_generated = is_rees_algebra_via_two_generated(a);
  r.rees_polynomials = is_rees_algebra_via_polynomials(a);
  if (r.rees.holds != r.rees_two_generated || r.rees.holds != r.rees_polynomials)
    throw std::logic_error("Rees decision routes disagree on " + a.name);

  r.quasi_rees = is_quasi_rees(a, r.lattice);
  r.one_block = has_one_block_property(a, r.lattice);
  r.obp_characterization = obp_characterization_holds(a);
  if (r.one_block.holds != r.obp_characterization)
    throw std::logic_error("one-block-property routes disagree on " + a.name);

  r.uniform = is_congruence_uniform(r.lattice);
  r.permutable2 = is_n_permutable(r.lattice.congruences, 2);
  r.permutable3 = is_n_permutable(r.lattice.congruences, 3);
  r.modular = is_modular(r.lattice);
  r.semimodular = is_semimodular(r.lattice);
  return r;
}

namespace {

ordered_json lattice_fields(const std::string& name, int size, const CongruenceLattice& lat) {
  ordered_json j;
  j["v"] = 1;
  j["name"] = name;
  j["size"] = size;
  j["congruence_count"] = lat.congruences.size();
  ordered_json list = ordered_json::array();
  for (const Partition& p : lat.congruences) list.push_back(p.to_string());
  j["congruences"] = std::move(list);
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : lat.covers) covers.push_back(ordered_json::array({lo, hi}));
  j["covers"] = std::move(covers);
  ordered_json atom_list = ordered_json::array();
  for (int i : lat.atom_indices()) atom_list.push_back(lat.congruences[i].to_string());
  j["atoms"] = std::move(atom_list);
  return j;
}

}  // namespace

std::string lattice_to_json(const std::string& name, int size, const CongruenceLattice& lat) {
  return lattice_fields(name, size, lat).dump(2) + "\n";
}

std::string lattice_to_text(const std::string& name, const CongruenceLattice& lat) {
  std::ostringstream out;
  out << name << ": " << lat.congruences.size() << " congruences\n";
  for (const Partition& p : lat.congruences) out << p.to_string() << "\n";
  out << "covers:\n";
  for (const auto& [lo, hi] : lat.covers)
    out << lat.congruences[lo].to_string() << " < " << lat.congruences[hi].to_string() << "\n";
  return out.str();
}

std::string analysis_to_json(const AnalysisReport& r) {
  ordered_json j = lattice_fields(r.name, r.size, r.lattice);
  j["absorbing"] = r.absorbing;

  ordered_json rees;
  rees["holds"] = r.rees.holds;
  rees["definition"] = r.rees.holds;
  rees["two_generated"] = r.rees_two_generated;
  rees["polynomials"] = r.rees_polynomials;
  if (r.rees.failing_subuniverse) rees["failing_subuniverse"] = r.rees.failing_subuniverse->to_string();
  j["rees"] = std::move(rees);

  ordered_json quasi;
  quasi["holds"] = r.quasi_rees.holds;
  if (r.quasi_rees.holds) {
    ordered_json classes;
    for (const auto& [theta, c] : r.quasi_rees.witnesses)
      classes[theta.to_string()] = c.to_string();
    quasi["classes"] = std::move(classes);
  } else if (r.quasi_rees.failing_congruence) {
    quasi["failing_congruence"] = r.quasi_rees.failing_congruence->to_string();
  }
  j["quasi_rees"] = std::move(quasi);

  ordered_json obp;
  obp["holds"] = r.one_block.holds;
  obp["definition"] = r.one_block.holds;
  obp["characterization"] = r.obp_characterization;
  ordered_json atom_blocks;
  for (const auto& [atom, blocks] : r.one_block.atom_blocks) {
    ordered_json arr = ordered_json::array();
    for (const ElementSet& b : blocks) arr.push_back(b.to_string());
    atom_blocks[atom.to_string()] = std::move(arr);
  }
  obp["atom_blocks"] = std::move(atom_blocks);
  if (r.one_block.failing_atom) obp["failing_atom"] = r.one_block.failing_atom->to_string();
  j["one_block_property"] = std::move(obp);

  j["congruence_uniform"] = r.uniform;
  ordered_json perm;
  perm["2"] = r.permutable2;
  perm["3"] = r.permutable3;
  j["permutable"] = std::move(perm);
  j["modular"] = r.modular;
  j["semimodular"] = r.semimodular;
  return j.dump(2) + "\n";
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "algebra " << r.name << " (size " << r.size << ")\n";
  out << "congruences: " << r.lattice.congruences.size() << "\n";
  out << "atoms:";
  for (int i : r.lattice.atom_indices()) out << " [" << r.lattice.congruences[i].to_string() << "]";
  out << "\n";
  out << "absorbing:";
  for (int e : r.absorbing) out << " " << e;
  out << "\n";
  out << "rees: " << yesno(r.rees.holds);
  if (r.rees.failing_subuniverse)
    out << " (failing subuniverse " << r.rees.failing_subuniverse->to_string() << ")";
  out << "\n";
  out << "quasi-rees: " << yesno(r.quasi_rees.holds);
  if (r.quasi_rees.failing_congruence)
    out << " (failing congruence " << r.quasi_rees.failing_congruence->to_string() << ")";
  out << "\n";
  out << "one-block-property: " << yesno(r.one_block.holds) << "\n";
  out << "congruence uniform: " << yesno(r.uniform) << "\n";
  out << "2-permutable: " << yesno(r.permutable2) << "\n";
  out << "3-permutable: " << yesno(r.permutable3) << "\n";
  out << "modular: " << yesno(r.modular) << "\n";
  out << "semimodular: " << yesno(r.semimodular) << "\n";
  return out.str();
}

std::function<bool(const FiniteAlgebra&)> named_predicate(const std::string& name) {
  if (name == "rees") return [](const FiniteAlgebra& a) { return is_rees_algebra(a).holds; };
  if (name == "quasi-rees") return [](const FiniteAlgebra& a) { return is_quasi_rees(a).holds; };
  if (name == "obp") return [](const FiniteAlgebra& a) { return has_one_block_property(a).holds; };
  if (name == "uniform") return [](const FiniteAlgebra& a) { return is_congruence_uniform(a); };
  if (name == "directoid") return [](const FiniteAlgebra& a) { return is_directoid(a); };
  if (name == "idempotent") return [](const FiniteAlgebra& a) { return is_idempotent_algebra(a); };
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

SearchOutcome run_search(const SearchRequest& req) {
  std::vector<std::function<bool(const FiniteAlgebra&)>> require, forbid;
  for (const std::string& name : req.require) require.push_back(named_predicate(name));
  for (const std::string& name : req.forbid) forbid.push_back(named_predicate(name));

  SearchOutcome outcome;
  outcome.request = req;

  auto consider = [&](const FiniteAlgebra& a) {
    ++outcome.examined;
    for (const auto& p : require)
      if (!p(a)) return;
    for (const auto& p : forbid)
      if (p(a)) return;
    ++outcome.matched;
    if (req.witness_limit < 0 ||
        static_cast<long long>(outcome.witnesses.size()) < req.witness_limit) {
      outcome.witnesses.push_back(a);
    }
  };

  const GeneratorSpec& g = req.generator;
  bool single_binary = g.signature.count() == 1 && g.signature.arity(0) == 2;
  bool want_directoids =
      std::find(req.require.begin(), req.require.end(), "directoid") != req.require.end();

  if (!g.exhaustive) {
    outcome.enumerator = "random";
    for (const FiniteAlgebra& a : random_algebras(g)) consider(a);
  } else if (single_binary && want_directoids) {
    // the pruned enumerator keeps larger sizes feasible; examined counts
    // directoids, not raw tables
    outcome.enumerator = "directoids";
    for (FiniteAlgebra a : enumerate_directoids(g.size)) {
      a.signature.symbols[0].name = g.signature.symbols[0].name;
      consider(a);
    }
  } else {
    outcome.enumerator = "tables";
    enumerate_algebras(g.signature, g.size, g.up_to_iso, [&](const FiniteAlgebra& a) {
      consider(a);
      return false;  // witnesses are collected by consider
    });
  }
  return outcome;
}

namespace {

ordered_json search_fields(const SearchOutcome& o) {
  ordered_json j;
  j["v"] = 1;
  std::string sigtext;
  for (const OpSymbol& s : o.request.generator.signature.symbols) {
    if (!sigtext.empty()) sigtext += "; ";
    sigtext += "op " + s.name + " " + std::to_string(s.arity);
  }
  j["signature"] = sigtext;
  j["size"] = o.request.generator.size;
  j["mode"] = o.request.generator.exhaustive ? "exhaustive" : "random";
  if (!o.request.generator.exhaustive) {
    j["seed"] = o.request.generator.seed;
    j["count"] = o.request.generator.count;
  }
  j["up_to_iso"] = o.request.generator.up_to_iso;
  j["require"] = o.request.require;
  j["forbid"] = o.request.forbid;
  j["enumerator"] = o.enumerator;
  j["examined"] = o.examined;
  j["matched"] = o.matched;
  ordered_json witnesses = ordered_json::array();
  for (const FiniteAlgebra& a : o.witnesses) witnesses.push_back(serialize_algebra(a));
  j["witnesses"] = std::move(witnesses);
  return j;
}

}  // namespace

std::string search_to_json(const SearchOutcome& o) { return search_fields(o).dump(2) + "\n"; }

std::string search_to_text(const SearchOutcome& o) {
  std::ostringstream out;
  for (const FiniteAlgebra& a : o.witnesses) out << serialize_algebra(a) << "\n";
  out << "examined " << o.examined << ", matched " << o.matched << "\n";
  return out.str();
}

}  // namespace finalg
