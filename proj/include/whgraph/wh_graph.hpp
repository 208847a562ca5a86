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

#ifndef WHGRAPH_WH_GRAPH_HPP_
#define WHGRAPH_WH_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "whgraph/params.hpp"
#include "whgraph/simple_graph.hpp"

namespace wh {

// The six <rho>-orbits on edges.
enum class EdgeKind : std::uint8_t { kAEdge, kLeft, kRight, kBEdge, kCEdge, kDEdge };

inline constexpr std::array<EdgeKind, 6> kAllEdgeKinds = {
    EdgeKind::kAEdge, EdgeKind::kLeft,  EdgeKind::kRight,
    EdgeKind::kBEdge, EdgeKind::kCEdge, EdgeKind::kDEdge};

std::string_view edge_kind_name(EdgeKind kind);

struct TypedEdge {
  int u;  // u < v
  int v;
  EdgeKind kind;
};

// A cycle as its vertex sequence; consecutive entries and the last/first pair
// are the edges.
using Cycle = std::vector<int>;

// Woolly Hat graph on 3n vertices, linearized as A-block, B-block, C-block.
// Immutable once built.
class WhGraph {
 public:
  const WhParams& params() const { return params_; }
  int n() const { return params_.n(); }
  int order() const { return graph_.order(); }
  const SimpleGraph& graph() const { return graph_; }
  std::span<const int> neighbors(int v) const { return graph_.neighbors(v); }
  bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

  // Kind of the edge {u, v}; the pair must be adjacent.
  EdgeKind kind(int u, int v) const;
  // All 6n edges with kinds, sorted by (u, v).
  std::vector<TypedEdge> typed_edges() const;
  // A fixed representative edge of each kind, indexed like kAllEdgeKinds:
  // A0A_a, A0B0, A0C0, B0C_b, B0C_c, B0C_d.
  std::array<Edge, 6> kind_representatives() const;

  VertexId vertex(int id) const { return VertexId::from_linear(id, n()); }
  int id(VertexId v) const { return v.linear(n()); }

 private:
  friend WhGraph build_graph(const WhParams& p);
  WhGraph(WhParams params, SimpleGraph graph)
      : params_(params), graph_(std::move(graph)) {}

  WhParams params_;
  SimpleGraph graph_;
};

WhGraph build_graph(const WhParams& p);

// Length of a shortest cycle (0 for a forest).
int girth(const SimpleGraph& g);
inline int girth(const WhGraph& g) { return girth(g.graph()); }

// The n cycles (B_i, C_{i+b}, B_{i+b-c}, C_{i+b-c+d}, B_{i-c+d}, C_{i+d}).
std::vector<Cycle> canonical_six_cycles(const WhGraph& g);

// All 6-cycles that contain the 2-path (u, v, w), each written starting
// u, v, w. Throws WhError(kNotATwoPath) if the triple is not a 2-path.
std::vector<Cycle> six_cycles_through_two_arc(const SimpleGraph& g,
                                              const std::array<int, 3>& path);
inline std::vector<Cycle> six_cycles_through_two_arc(
    const WhGraph& g, const std::array<int, 3>& path) {
  return six_cycles_through_two_arc(g.graph(), path);
}

// Number of cycles of the given length through the edge {u, v}.
std::int64_t count_cycles_through_edge(const SimpleGraph& g, int u, int v,
                                       int length);

// Quotient of a WH-graph by the orbits of <rho^k>. Vertex (X, i) for
// i in Z_k is linearized like a WH-graph on k indices.
struct QuotientGraph {
  int k = 0;
  SimpleGraph graph;
};

// Throws WhError(kKNotDivisor) unless k >= 1 divides n.
QuotientGraph quotient_by_rho_power(const WhGraph& g, int k);

// The reduced tuple (k; a, b, c, d mod k) when it is a valid WH tuple whose
// graph is exactly the quotient; nothing otherwise.
std::optional<WhParams> quotient_as_wh(const QuotientGraph& q,
                                       const WhParams& source);

}  // namespace wh

#endif  // WHGRAPH_WH_GRAPH_HPP_
