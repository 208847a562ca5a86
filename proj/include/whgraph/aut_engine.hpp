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

#ifndef WHGRAPH_AUT_ENGINE_HPP_
#define WHGRAPH_AUT_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whgraph/permutation.hpp"
#include "whgraph/simple_graph.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {

// A graph with a vertex coloring. Automorphisms and isomorphisms must
// preserve colors; the default coloring is uniform.
class ColoredGraph {
 public:
  explicit ColoredGraph(SimpleGraph graph, std::vector<int> colors = {});
  explicit ColoredGraph(const WhGraph& g) : ColoredGraph(g.graph()) {}

  const SimpleGraph& graph() const { return graph_; }
  std::span<const int> colors() const { return colors_; }
  int order() const { return graph_.order(); }

 private:
  SimpleGraph graph_;
  std::vector<int> colors_;
};

// Coarsest equitable refinement of the input coloring. Returned colors are
// cell ordinals 0..k-1 in the canonical cell order, so the result does not
// depend on how the vertices are numbered.
std::vector<int> refine(const ColoredGraph& g);

// True iff vertices of equal color have equal numbers of neighbors in every
// color class.
bool is_equitable(const SimpleGraph& g, std::span<const int> colors);

struct CanonicalForm {
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  // Color of each canonical position (sorted ascending).
  std::vector<int> colors;
  // Canonical edge set, (u, v) with u < v, sorted.
  std::vector<Edge> edges;
  // graph6 of the canonically relabeled graph.
  std::string graph6;
  // Lowercase hex SHA-256 over graph6 (and the color sequence when colors
  // are not uniform).
  std::string digest;

  friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
    return x.colors == y.colors && x.edges == y.edges;
  }
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
};

struct SymmetryResult {
  // Generating set of the full color-preserving automorphism group.
  std::vector<Permutation> generators;
  CanonicalForm canonical;
  SearchStats stats;
};

// Individualization-refinement search: one pass yields both a generating set
// of Aut and the canonical form.
SymmetryResult analyze_symmetry(const ColoredGraph& g);

std::vector<Permutation> automorphism_generators(const ColoredGraph& g);
inline std::vector<Permutation> automorphism_generators(const WhGraph& g) {
  return automorphism_generators(ColoredGraph(g));
}

CanonicalForm canonical_form(const ColoredGraph& g);
inline CanonicalForm canonical_form(const WhGraph& g) {
  return canonical_form(ColoredGraph(g));
}

bool are_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);
inline bool are_isomorphic(const WhGraph& g1, const WhGraph& g2) {
  return are_isomorphic(ColoredGraph(g1), ColoredGraph(g2));
}

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace wh

#endif  // WHGRAPH_AUT_ENGINE_HPP_
