// Copyright 2026 The whgraph Authors
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

#ifndef WHGRAPH_NAMED_AUTOMORPHISMS_HPP_
#define WHGRAPH_NAMED_AUTOMORPHISMS_HPP_

#include <optional>
#include <string>

#include "whgraph/params.hpp"
#include "whgraph/permutation.hpp"
#include "whgraph/simple_graph.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {

// X_i -> X_{i+1}.
Permutation rho(const WhParams& p);

// A_i -> A_{-i}, B_i -> C_{-i}, C_i -> B_{-i}.
Permutation tau(const WhParams& p);

// First clause of the sigma hypotheses that `p` violates, if any. Clauses are
// checked in the order: n even; a odd; b odd; d odd; c even; d = 2a + b;
// 2c = 3a + 3b.
std::optional<std::string> sigma_violation(const WhParams& p);

// The parity-split automorphism exchanging the A-, B- and C-blocks:
//   i even: A_i -> B_i,         B_i -> C_{i+c},     C_i -> A_i
//   i odd:  A_i -> C_{i-a+d},   B_i -> A_{i+a+b},   C_i -> B_{i-b+c-d}
// Throws WhError(kHypothesesNotMet) naming the failing clause.
Permutation sigma(const WhParams& p);

// Tuple (4m; 2, m-2, 0, m+2). Throws WhError(kMNotOddOrTooSmall) unless m is
// odd and m >= 3.
WhParams family3_params(int m);

// Automorphism of WH_{4m}(2, m-2, 0, m+2) sending A_0 to B_0, defined by
// i mod 4 with delta = m mod 4:
//   0:         A_i -> B_i,       B_i -> A_i,       C_i -> C_i
//   delta:     A_i -> C_i,       B_i -> B_i,       C_i -> A_i
//   2:         A_i -> C_{i+m},   B_i -> A_{i+m},   C_i -> B_{i+m}
//   4 - delta: A_i -> B_{i-m},   B_i -> C_{i-m},   C_i -> A_{i-m}
Permutation theta(int m);

// True iff pi maps every edge to an edge. Throws WhError(kLengthMismatch)
// when the degree differs from the graph order.
bool is_automorphism(const SimpleGraph& g, const Permutation& pi);
inline bool is_automorphism(const WhGraph& g, const Permutation& pi) {
  return is_automorphism(g.graph(), pi);
}

// X_i -> X_{qi}; an isomorphism WH_n(a,b,c,d) -> WH_n(qa,qb,qc,qd) and an
// automorphism whenever both tuples describe the same graph.
Permutation multiplier_map(int n, int q);

}  // namespace wh

#endif  // WHGRAPH_NAMED_AUTOMORPHISMS_HPP_
