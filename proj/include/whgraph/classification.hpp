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


#ifndef WHGRAPH_CLASSIFICATION_HPP_
#define WHGRAPH_CLASSIFICATION_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "whgraph/params.hpp"
#include "whgraph/permutation.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {

enum class Verdict { kSporadic8, kFamily2, kFamily3, kNotVT };

std::string_view verdict_name(Verdict v);

// One transformation (multiplier q, sign of a, role permutation of b, c, d)
// carrying the input tuple to a tuple that satisfies `clause` literally.
struct Witness {
  Verdict clause;
  int q;
  bool negate_a;
  std::array<int, 3> roles;
  WhParams normalized;
};

struct VtClassification {
  // Matched clauses in the fixed order Sporadic8, Family2, Family3; exactly
  // {NotVT} when nothing matched.
  std::vector<Verdict> verdicts;
  std::vector<Witness> witnesses;
  // m of the third family, when that clause matched.
  std::optional<int> m;

  bool vertex_transitive() const { return !witnesses.empty(); }
};

// Exhaustive search over units q, the sign of a and the six role
// permutations, keeping images with n even and d = 2a + b.
VtClassification classify(const WhParams& p);

// Literal clause tests on the tuple as given.
bool sporadic8_check(const WhParams& p);
bool family2_check(const WhParams& p);
std::optional<int> family3_check(const WhParams& p);

// Aut(g) is transitive on vertices.
bool vt_ground_truth(const WhParams& p);
bool vt_ground_truth(const WhGraph& g, const std::vector<Permutation>& aut);

}  // namespace wh

#endif  // WHGRAPH_CLASSIFICATION_HPP_
