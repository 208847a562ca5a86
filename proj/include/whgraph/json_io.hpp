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


// JSON renderings with a fixed key order, shared by the census files and the
// command-line tool.

#ifndef WHGRAPH_JSON_IO_HPP_
#define WHGRAPH_JSON_IO_HPP_

#include "json.hpp"
#include "whgraph/classification.hpp"
#include "whgraph/params.hpp"
#include "whgraph/symmetry.hpp"

namespace wh {

using Json = nlohmann::ordered_json;

// [n, a, b, c, d]
Json params_json(const WhParams& p);
WhParams params_from_json(const Json& j);

Json transitivity_json(const TransitivityReport& r);
Json witness_json(const Witness& w);
// {"verdict": [...], "m": m|null, "witnesses": [...]}
Json classification_json(const VtClassification& c);
Json lr_json(const LrCheck& lr);

}  // namespace wh

#endif  // WHGRAPH_JSON_IO_HPP_
