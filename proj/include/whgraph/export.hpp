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

#ifndef WHGRAPH_EXPORT_HPP_
#define WHGRAPH_EXPORT_HPP_

#include <string>
#include <string_view>

#include "whgraph/simple_graph.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {

// graph6 / sparse6 strings (no header, no trailing newline) using the
// graph's own vertex numbering.
std::string to_graph6(const SimpleGraph& g);
std::string to_sparse6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);
SimpleGraph from_sparse6(std::string_view text);

// DOT with vertex names A0.., B0.., C0.. and a `kind` attribute per edge.
std::string to_dot(const WhGraph& g);

}  // namespace wh

#endif  // WHGRAPH_EXPORT_HPP_
