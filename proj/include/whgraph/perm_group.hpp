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

#ifndef WHGRAPH_PERM_GROUP_HPP_
#define WHGRAPH_PERM_GROUP_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "whgraph/permutation.hpp"
#include "whgraph/simple_graph.hpp"

namespace wh {

// Permutation group given by generators, with a stabilizer chain computed by
// deterministic Schreier-Sims. Base points are taken from `base_prefix`
// followed by the smallest moved points in ascending order.
class PermGroup {
 public:
  explicit PermGroup(int degree, std::vector<Permutation> generators = {},
                     std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const {
    return strong_;
  }
  // Lengths of the fundamental orbits along the chain.
  std::vector<int> fundamental_orbit_sizes() const;

  // Group order. Throws WhError(kOrderOverflow) past 2^64 - 1.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  // Strong generators fixing the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    // transversal[x] maps the base point to x; inverse kept alongside.
    std::vector<int> slot;  // index into reps, -1 outside the orbit
    std::vector<Permutation> reps;
    std::vector<Permutation> rep_inverses;
    std::vector<int> gens;  // indices into strong_
  };

  void schreier_sims();
  void rebuild_level(std::size_t i);
  // Sifts g through levels from `first` on; returns the residue and the level
  // where sifting stopped (levels_.size() if it passed all of them).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t first) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

PermGroup group_from_generators(int degree, std::vector<Permutation> gens);

// Point stabilizer, computed from a chain whose base starts at `point`.
// Throws WhError(kDomainMismatch) for a point outside the domain.
PermGroup stabilizer(const PermGroup& group, int point);

enum class Action { kVertices, kEdges, kArcs, kTwoArcs };

std::string_view action_name(Action action);

// The set a group acts on when it acts on a graph: vertices, unordered
// edges, arcs (ordered adjacent pairs) or 2-arcs (u, v, w) with u != w both
// adjacent to v. Images are computed from vertex images.
class ActionDomain {
 public:
  ActionDomain(const SimpleGraph& graph, Action action);

  Action action() const { return action_; }
  int size() const { return size_; }
  // Vertex tuple of element i (1, 2, 2 or 3 entries).
  std::vector<int> element(int i) const;
  int index_of_arc(int u, int v) const;
  int index_of_edge(int u, int v) const;
  int index_of_two_arc(int u, int v, int w) const;
  int image(int i, const Permutation& g) const;

 private:
  const SimpleGraph* graph_;
  Action action_;
  int size_ = 0;
  std::vector<int> arc_tail_;        // arc id -> u
  std::vector<int> edge_of_arc_;     // arc id -> edge id
  std::vector<int> arc_of_edge_;     // edge id -> arc with u < v
  std::vector<int> two_arc_offset_;  // vertex -> first 2-arc id with that middle
};

struct OrbitPartition {
  // Orbits as sorted element lists, ordered by smallest element.
  std::vector<std::vector<int>> orbits;
  std::size_t count() const { return orbits.size(); }
};

// Orbits of the group on one of the graph actions. Throws
// WhError(kDomainMismatch) when the group degree differs from the order.
OrbitPartition orbits(const PermGroup& group, const SimpleGraph& graph,
                      Action action);
OrbitPartition orbits(const std::vector<Permutation>& generators,
                      const SimpleGraph& graph, Action action);

}  // namespace wh

#endif  // WHGRAPH_PERM_GROUP_HPP_
