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

#include "finalg/limits.hpp"

#include <cstdlib>
#include <string>

namespace finalg {

namespace {

Limits with_size_cap(int cap) {
  Limits l;
  if (cap > 0) {
    l.max_congruence_lattice_size = cap;
    l.max_subuniverse_enum_size = cap;
    l.max_polynomial_size = cap;
    l.max_directoid_enum_size = cap;
    l.max_table_enum_size = cap;
  }
  return l;
}

int env_size_cap() {
  const char* v = std::getenv("UA_MAX_SIZE");
  if (v == nullptr) return 0;
  try {
    return std::stoi(v);
  } catch (...) {
    return 0;
  }
}

Limits& storage() {
  static Limits instance = with_size_cap(env_size_cap());
  return instance;
}

}  // namespace

const Limits& limits() { return storage(); }

void set_size_cap_override(int cap) {
  storage() = cap > 0 ? with_size_cap(cap) : with_size_cap(env_size_cap());
}

}  // namespace finalg
