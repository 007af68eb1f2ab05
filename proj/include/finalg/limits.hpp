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

namespace finalg {

// Resource guards. Operations that would exceed a guard throw limit_error
// instead of running for an unbounded time.
struct Limits {
  long long max_identity_assignments = 10'000'000;  // n^k cap for identity checks
  long long max_table_cells = 10'000'000;           // cap for a single operation table
  long long max_enumeration_count = 20'000'000;     // cap for exhaustive table enumeration
  int max_congruence_lattice_size = 12;             // all_congruences
  int max_subuniverse_enum_size = 16;               // all_subuniverses
  int max_polynomial_size = 7;                      // unary_polynomials
  int max_directoid_enum_size = 4;                  // enumerate_directoids
  int max_table_enum_size = 3;                      // exhaustive groupoid/table enumeration
};

/// Process-wide limits. The size caps can be overridden by the UA_MAX_SIZE
/// environment variable (read once) or by set_size_cap_override.
const Limits& limits();

/// Sets every size cap to `cap`; cap <= 0 restores the defaults.
void set_size_cap_override(int cap);

}  // namespace finalg
