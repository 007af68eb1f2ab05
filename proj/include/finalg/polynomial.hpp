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

#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/partition.hpp"

namespace finalg {

/// Unary function on {0..n-1} as a value table.
using UnaryFunction = std::vector<int>;

/// The unary polynomial functions: least set containing the identity and all
/// constant functions, closed under x -> f(g1(x),...,gm(x)) for every symbol
/// f. Returned in lexicographic table order. Guarded by
/// limits().max_polynomial_size.
std::vector<UnaryFunction> unary_polynomials(const FiniteAlgebra& a);

/// {[x] -> [p(x)] : p unary polynomial of a}, as functions on the blocks of
/// theta. theta must be a congruence of a.
std::vector<UnaryFunction> quotient_unary_polynomials(const FiniteAlgebra& a,
                                                      const Partition& theta);

}  // namespace finalg
