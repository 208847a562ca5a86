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


#ifndef WHGRAPH_SYMMETRY_HPP_
#define WHGRAPH_SYMMETRY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "whgraph/params.hpp"
#include "whgraph/permutation.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {

struct TransitivityReport {
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int arc_orbits = 0;
  int two_arc_orbits = 0;
  bool is_vertex_transitive = false;
  bool is_edge_transitive = false;
  bool is_arc_transitive = false;
  bool is_two_arc_transitive = false;
  std::uint64_t aut_order = 0;
};

// Orbit counts of Aut(g) on vertices, edges, arcs and 2-arcs.
TransitivityReport transitivity_report(const WhGraph& g);
// Same, from an already computed generating set of Aut(g).
TransitivityReport transitivity_report(const WhGraph& g,
                                       const std::vector<Permutation>& aut);

enum class EdgeColor : std::uint8_t { kRed, kBlue };

// Blue: left, right and c-edges. Red: a-, b- and d-edges.
constexpr EdgeColor color_of_kind(EdgeKind kind) {
  return kind == EdgeKind::kLeft || kind == EdgeKind::kRight ||
                 kind == EdgeKind::kCEdge
             ? EdgeColor::kBlue
             : EdgeColor::kRed;
}

// Red/blue coloring of the edges of one labeled graph. The coloring is
// syntactic (read off the edge kinds); whether it coincides with the two
// edge orbits of Aut is a property checked separately.
class EdgeColoring {
 public:
  EdgeColor color(int u, int v) const;
  bool is_red(int u, int v) const { return color(u, v) == EdgeColor::kRed; }
  const std::vector<Edge>& red_edges() const { return red_; }
  const std::vector<Edge>& blue_edges() const { return blue_; }

 private:
  friend EdgeColoring color_edges(const WhGraph& g);
  const SimpleGraph* graph_ = nullptr;
  std::vector<EdgeColor> arc_color_;  // indexed by CSR position
  std::vector<Edge> red_;
  std::vector<Edge> blue_;
};

// Reorders b, c, d and possibly negates a so that 2a = d - b. Scan order:
// role permutations lexicographically, then sign + before -. The result
// describes the same labeled graph as p.
WhParams normalize_for_coloring(const WhParams& p);

bool is_normalized(const WhParams& p);

// Requires 2a = d - b on g's parameters (NotNormalized otherwise).
EdgeColoring color_edges(const WhGraph& g);

// 6-cycles through the red 2-path (path[0], path[1], path[2]) having four red
// edges and two blue edges in antipodal positions.
std::vector<Cycle> basic_six_cycles_through(const WhGraph& g,
                                            const EdgeColoring& coloring,
                                            const std::array<int, 3>& path);

// 4-cycles whose edge colors alternate; each listed once, starting at its
// smallest vertex.
std::vector<Cycle> alternating_four_cycles(const WhGraph& g,
                                           const EdgeColoring& coloring);

struct LrCheck {
  WhParams normalized;
  bool no_alt_4cycles = false;
  bool swap_automorphism_exists = false;
  // Least unit q with qa = -a, qc = c and qb = d on the normalized tuple.
  std::optional<int> q_witness;
};

// Throws NotVertexTransitive when Aut(g) has more than one vertex orbit.
LrCheck lr_candidate_check(const WhGraph& g);
LrCheck lr_candidate_check(const WhGraph& g,
                           const std::vector<Permutation>& aut);

}  // namespace wh

#endif  // WHGRAPH_SYMMETRY_HPP_
