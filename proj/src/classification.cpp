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


#include "whgraph/classification.hpp"

#include <cassert>

#include "whgraph/aut_engine.hpp"
#include "whgraph/perm_group.hpp"

namespace wh {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSporadic8: return "Sporadic8";
    case Verdict::kFamily2: return "Family2";
    case Verdict::kFamily3: return "Family3";
    case Verdict::kNotVT: return "NotVT";
  }
  return "?";
}

namespace {

bool odd(int x) { return x % 2 != 0; }

bool literal(const WhParams& p, int n, int a, int b, int c, int d) {
  return p.n() == n && p.a() == a && p.b() == b && p.c() == c && p.d() == d;
}

}  // namespace

bool sporadic8_check(const WhParams& p) {
  return literal(p, 8, 2, 1, 0, 5) || literal(p, 8, 2, 1, 4, 5);
}

bool family2_check(const WhParams& p) {
  const int n = p.n();
  if (odd(n)) return false;
  if (!odd(p.a()) || !odd(p.b()) || !odd(p.d()) || odd(p.c())) return false;
  return mod(p.d(), n) == mod(2 * p.a() + p.b(), n) &&
         mod(2 * p.c(), n) == mod(3 * p.a() + 3 * p.b(), n);
}

std::optional<int> family3_check(const WhParams& p) {
  if (p.n() % 4 != 0) return std::nullopt;
  const int m = p.n() / 4;
  if (m <= 1 || !odd(m)) return std::nullopt;
  if (!literal(p, 4 * m, 2, m - 2, 0, m + 2)) return std::nullopt;
  return m;
}

VtClassification classify(const WhParams& p) {
  VtClassification out;
  const int n = p.n();
  bool matched[3] = {false, false, false};
  if (!odd(n)) {
    for (int q : units_mod(n)) {
      for (bool negate : {false, true}) {
        for (const auto& roles : kRolePermutations) {
          const WhParams t = transform_params(p, q, negate, roles);
          if (mod(t.d(), n) != mod(2 * t.a() + t.b(), n)) continue;
          if (sporadic8_check(t)) {
            assert(are_isomorphic(build_graph(p), build_graph(t)));
            out.witnesses.push_back({Verdict::kSporadic8, q, negate, roles, t});
            matched[0] = true;
          }
          if (family2_check(t)) {
            out.witnesses.push_back({Verdict::kFamily2, q, negate, roles, t});
            matched[1] = true;
          }
          if (auto m = family3_check(t)) {
            out.witnesses.push_back({Verdict::kFamily3, q, negate, roles, t});
            matched[2] = true;
            out.m = *m;
          }
        }
      }
    }
  }
  if (matched[0]) out.verdicts.push_back(Verdict::kSporadic8);
  if (matched[1]) out.verdicts.push_back(Verdict::kFamily2);
  if (matched[2]) out.verdicts.push_back(Verdict::kFamily3);
  if (out.verdicts.empty()) out.verdicts.push_back(Verdict::kNotVT);
  return out;
}

bool vt_ground_truth(const WhParams& p) {
  const WhGraph g = build_graph(p);
  return vt_ground_truth(g, automorphism_generators(g));
}

bool vt_ground_truth(const WhGraph& g, const std::vector<Permutation>& aut) {
  return orbits(aut, g.graph(), Action::kVertices).count() == 1;
}

}  // namespace wh
