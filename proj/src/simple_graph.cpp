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

#include "whgraph/simple_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wh {

SimpleGraph::SimpleGraph(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  offsets_.assign(1, 0);
  offsets_.reserve(n + 1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> row = adjacency[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw std::invalid_argument("SimpleGraph: repeated neighbor");
    }
    for (int u : row) {
      if (u < 0 || u >= n || u == v) {
        throw std::invalid_argument("SimpleGraph: bad neighbor id");
      }
    }
    neighbors_.insert(neighbors_.end(), row.begin(), row.end());
    offsets_.push_back(static_cast<int>(neighbors_.size()));
  }
  for (int v = 0; v < n; ++v) {
    for (int u : neighbors(v)) {
      if (!adjacent(u, v)) {
        throw std::invalid_argument("SimpleGraph: asymmetric adjacency");
      }
    }
  }
}

SimpleGraph SimpleGraph::from_edges(int order, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adjacency(order);
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return SimpleGraph(adjacency);
}

SimpleGraph SimpleGraph::from_csr(std::vector<int> offsets,
                                  std::vector<int> neighbors) {
  SimpleGraph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
#ifndef NDEBUG
  for (int v = 0; v < g.order(); ++v) {
    const auto row = g.neighbors(v);
    assert(std::is_sorted(row.begin(), row.end()));
    for (int u : row) assert(u != v && g.adjacent(u, v));
  }
#endif
  return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int SimpleGraph::neighbor_slot(int u, int v) const {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return -1;
  return static_cast<int>(it - row.begin());
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_connected() const {
  const int n = order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> relabel) const {
  std::vector<std::vector<int>> adjacency(order());
  for (int v = 0; v < order(); ++v) {
    for (int u : neighbors(v)) adjacency[relabel[v]].push_back(relabel[u]);
  }
  return SimpleGraph(adjacency);
}

}  // namespace wh
