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

#ifndef WHGRAPH_SIMPLE_GRAPH_HPP_
#define WHGRAPH_SIMPLE_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace wh {

using Edge = std::pair<int, int>;

// Undirected simple graph in compressed adjacency form. Neighbor lists are
// sorted; construction rejects loops, duplicate edges and asymmetric input.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(const std::vector<std::vector<int>>& adjacency);
  static SimpleGraph from_edges(int order, const std::vector<Edge>& edges);
  // Trusted constructor for callers that already hold sorted, symmetric
  // rows in compressed form. Checked only in debug builds.
  static SimpleGraph from_csr(std::vector<int> offsets,
                              std::vector<int> neighbors);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::span<const int> neighbors(int v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;
  // Position of v in the sorted neighbor list of u, or -1.
  int neighbor_slot(int u, int v) const;
  // Offset of u's neighbor list inside the flat array; slot ids of arcs are
  // offset(u) + neighbor_slot(u, v).
  int offset(int u) const { return offsets_[u]; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  bool is_connected() const;

  // Graph with vertex v renamed to relabel[v].
  SimpleGraph relabeled(std::span<const int> relabel) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<int> offsets_{0};
  std::vector<int> neighbors_;
};

}  // namespace wh

#endif  // WHGRAPH_SIMPLE_GRAPH_HPP_
