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


#include "whgraph/symmetry.hpp"

#include <algorithm>
#include <set>

#include "whgraph/aut_engine.hpp"
#include "whgraph/error.hpp"
#include "whgraph/perm_group.hpp"

namespace wh {

TransitivityReport transitivity_report(const WhGraph& g) {
  return transitivity_report(g, automorphism_generators(g));
}

TransitivityReport transitivity_report(const WhGraph& g,
                                       const std::vector<Permutation>& aut) {
  TransitivityReport r;
  const auto count = [&](Action action) {
    return static_cast<int>(orbits(aut, g.graph(), action).count());
  };
  r.vertex_orbits = count(Action::kVertices);
  r.edge_orbits = count(Action::kEdges);
  r.arc_orbits = count(Action::kArcs);
  r.two_arc_orbits = count(Action::kTwoArcs);
  r.is_vertex_transitive = r.vertex_orbits == 1;
  r.is_edge_transitive = r.edge_orbits == 1;
  r.is_arc_transitive = r.arc_orbits == 1;
  r.is_two_arc_transitive = r.two_arc_orbits == 1;
  r.aut_order = group_from_generators(g.order(), aut).order();
  return r;
}

EdgeColor EdgeColoring::color(int u, int v) const {
  const int slot = graph_->neighbor_slot(u, v);
  if (slot < 0) throw std::invalid_argument("EdgeColoring: not an edge");
  return arc_color_[graph_->offset(u) + slot];
}

bool is_normalized(const WhParams& p) {
  return mod(2 * p.a(), p.n()) == mod(p.d() - p.b(), p.n());
}

WhParams normalize_for_coloring(const WhParams& p) {
  for (const auto& roles : kRolePermutations) {
    for (bool negate : {false, true}) {
      const WhParams candidate = transform_params(p, 1, negate, roles);
      if (is_normalized(candidate)) return candidate;
    }
  }
  throw WhError(ErrorCode::kNoNormalization,
                p.to_string() + " has no role assignment with 2a = d - b");
}

EdgeColoring color_edges(const WhGraph& g) {
  if (!is_normalized(g.params())) {
    throw WhError(ErrorCode::kNotNormalized,
                  g.params().to_string() + " does not satisfy 2a = d - b");
  }
  EdgeColoring out;
  const SimpleGraph& graph = g.graph();
  out.graph_ = &graph;
  out.arc_color_.resize(2 * graph.edge_count());
  for (int u = 0; u < graph.order(); ++u) {
    const auto row = graph.neighbors(u);
    for (std::size_t s = 0; s < row.size(); ++s) {
      const int v = row[s];
      const EdgeColor color = color_of_kind(g.kind(u, v));
      out.arc_color_[graph.offset(u) + s] = color;
      if (u < v) {
        (color == EdgeColor::kRed ? out.red_ : out.blue_).emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<Cycle> basic_six_cycles_through(const WhGraph& g,
                                            const EdgeColoring& coloring,
                                            const std::array<int, 3>& path) {
  if (!g.adjacent(path[0], path[1]) || !g.adjacent(path[1], path[2]) ||
      path[0] == path[2]) {
    throw WhError(ErrorCode::kNotATwoPath, "not a 2-path");
  }
  if (!coloring.is_red(path[0], path[1]) || !coloring.is_red(path[1], path[2])) {
    throw WhError(ErrorCode::kPathNotRed, "2-path has a blue edge");
  }
  std::vector<Cycle> out;
  for (auto& cycle : six_cycles_through_two_arc(g, path)) {
    std::array<bool, 6> blue{};
    int blues = 0;
    for (int i = 0; i < 6; ++i) {
      blue[i] = !coloring.is_red(cycle[i], cycle[(i + 1) % 6]);
      blues += blue[i];
    }
    if (blues != 2) continue;
    bool antipodal = false;
    for (int i = 0; i < 3; ++i) antipodal |= blue[i] && blue[i + 3];
    if (antipodal) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Cycle> alternating_four_cycles(const WhGraph& g,
                                           const EdgeColoring& coloring) {
  std::vector<Cycle> out;
  const int order = g.order();
  for (int s = 0; s < order; ++s) {
    for (int x : g.neighbors(s)) {
      if (x < s) continue;
      for (int y : g.neighbors(x)) {
        if (y <= s) continue;
        for (int z : g.neighbors(y)) {
          if (z <= x || z == s || !g.adjacent(z, s)) continue;
          const auto c0 = coloring.color(s, x), c1 = coloring.color(x, y);
          const auto c2 = coloring.color(y, z), c3 = coloring.color(z, s);
          if (c0 != c1 && c0 == c2 && c1 == c3) out.push_back({s, x, y, z});
        }
      }
    }
  }
  return out;
}

namespace {

// Does the group generated by `gens` (permutations of 4 points) contain a
// transposition? The group has at most 24 elements, so close it explicitly.
bool has_transposition(const std::vector<std::array<int, 4>>& gens) {
  std::set<std::array<int, 4>> seen{{0, 1, 2, 3}};
  std::vector<std::array<int, 4>> frontier{{0, 1, 2, 3}};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::array<int, 4> y;
      for (int i = 0; i < 4; ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return std::any_of(seen.begin(), seen.end(), [](const auto& p) {
    int moved = 0;
    for (int i = 0; i < 4; ++i) moved += p[i] != i;
    return moved == 2;
  });
}

}  // namespace

LrCheck lr_candidate_check(const WhGraph& g) {
  return lr_candidate_check(g, automorphism_generators(g));
}

LrCheck lr_candidate_check(const WhGraph& g,
                           const std::vector<Permutation>& aut) {
  if (orbits(aut, g.graph(), Action::kVertices).count() != 1) {
    throw WhError(ErrorCode::kNotVertexTransitive,
                  g.params().to_string() + " is not vertex-transitive");
  }
  const WhParams norm = normalize_for_coloring(g.params());
  const WhGraph ng = build_graph(norm);
  LrCheck out{norm, false, false, std::nullopt};
  out.no_alt_4cycles = alternating_four_cycles(ng, color_edges(ng)).empty();

  const int v = 0;  // A_0
  const auto nbrs = g.neighbors(v);
  const PermGroup stab = stabilizer(group_from_generators(g.order(), aut), v);
  std::vector<std::array<int, 4>> induced;
  for (const auto& s : stab.generators()) {
    std::array<int, 4> local;
    for (int i = 0; i < 4; ++i) {
      const auto it = std::find(nbrs.begin(), nbrs.end(), s(nbrs[i]));
      local[i] = static_cast<int>(it - nbrs.begin());
    }
    induced.push_back(local);
  }
  out.swap_automorphism_exists = has_transposition(induced);

  const int n = norm.n();
  for (int q : units_mod(n)) {
    if (mod(q * norm.a(), n) == mod(-norm.a(), n) &&
        mod(q * norm.c(), n) == norm.c() && mod(q * norm.b(), n) == norm.d()) {
      out.q_witness = q;
      break;
    }
  }
  return out;
}

}  // namespace wh
