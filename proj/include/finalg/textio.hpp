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

#include <string>

#include "finalg/algebra.hpp"
#include "finalg/congruence.hpp"
#include "finalg/partition.hpp"

namespace finalg {

// Algebra file grammar (line-oriented; '#' starts a comment, blank lines are
// ignored; tokens are whitespace-separated):
//
//   algebra <name>
//   size <n>
//   op <name> <arity>
//   <n^arity integers, any line breaking, row-major, leftmost argument
//    varies slowest; a nullary op takes one integer>
//   ... further op blocks ...
//
// Parse errors carry line/column; table range and length problems are
// reported through validate().
FiniteAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteAlgebra& a);

/// Partition syntax: blocks separated by '|', elements by spaces or commas;
/// every element of {0..n-1} exactly once. E.g. "0|1 2 3".
Partition parse_partition(const std::string& text, int n);

/// Term syntax: name(arg,...) with variables x, y, z (indices 0, 1, 2) and
/// x0..x9. A bare name that is not a variable must be a nullary symbol;
/// "one()" is also accepted.
Term parse_term(const std::string& text, const Signature& sig);

/// Signature specification: "op <name> <arity>" groups separated by ';'.
Signature parse_signature_spec(const std::string& text);

/// DOT digraph of the Hasse diagram. Nodes carry canonical partition labels;
/// edges run from covered to covering congruence; node and edge order is
/// deterministic.
std::string emit_dot(const CongruenceLattice& lat);

}  // namespace finalg
