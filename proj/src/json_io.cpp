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


#include "whgraph/json_io.hpp"

#include <string>

namespace wh {

Json params_json(const WhParams& p) {
  return Json::array({p.n(), p.a(), p.b(), p.c(), p.d()});
}

WhParams params_from_json(const Json& j) {
  return WhParams::validate(j.at(0).get<int>(), j.at(1).get<int>(),
                            j.at(2).get<int>(), j.at(3).get<int>(),
                            j.at(4).get<int>());
}

Json transitivity_json(const TransitivityReport& r) {
  Json j;
  j["aut_order"] = r.aut_order;
  j["vertex_orbits"] = r.vertex_orbits;
  j["edge_orbits"] = r.edge_orbits;
  j["arc_orbits"] = r.arc_orbits;
  j["two_arc_orbits"] = r.two_arc_orbits;
  j["vertex_transitive"] = r.is_vertex_transitive;
  j["edge_transitive"] = r.is_edge_transitive;
  j["arc_transitive"] = r.is_arc_transitive;
  j["two_arc_transitive"] = r.is_two_arc_transitive;
  return j;
}

Json witness_json(const Witness& w) {
  Json j;
  j["clause"] = std::string(verdict_name(w.clause));
  j["q"] = w.q;
  j["sign"] = w.negate_a ? "-" : "+";
  j["roles"] = Json::array({w.roles[0], w.roles[1], w.roles[2]});
  j["tuple"] = params_json(w.normalized);
  return j;
}

Json classification_json(const VtClassification& c) {
  Json j;
  j["verdict"] = Json::array();
  for (Verdict v : c.verdicts) j["verdict"].push_back(std::string(verdict_name(v)));
  j["m"] = c.m ? Json(*c.m) : Json(nullptr);
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(witness_json(w));
  return j;
}

Json lr_json(const LrCheck& lr) {
  Json j;
  j["normalized"] = params_json(lr.normalized);
  j["no_alt_4cycles"] = lr.no_alt_4cycles;
  j["swap_automorphism_exists"] = lr.swap_automorphism_exists;
  j["q_witness"] = lr.q_witness ? Json(*lr.q_witness) : Json(nullptr);
  return j;
}

}  // namespace wh
