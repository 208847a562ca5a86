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

#include "whgraph/wh_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <string>

#include "whgraph/error.hpp"

namespace wh {

std::string_view edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kAEdge: return "a";
    case EdgeKind::kLeft: return "left";
    case EdgeKind::kRight: return "right";
    case EdgeKind::kBEdge: return "b";
    case EdgeKind::kCEdge: return "c";
    case EdgeKind::kDEdge: return "d";
  }
  return "?";
}

WhGraph build_graph(const WhParams& p) {
  const int n = p.n();
  std::vector<int> offsets(3 * n + 1);
  std::vector<int> nbrs(12 * n);
  for (int v = 0; v <= 3 * n; ++v) offsets[v] = 4 * v;
  for (int i = 0; i < n; ++i) {
    int* a = &nbrs[4 * vertex_a(i, n)];
    a[0] = vertex_a(i - p.a(), n);
    a[1] = vertex_a(i + p.a(), n);
    a[2] = vertex_b(i, n);
    a[3] = vertex_c(i, n);
    int* b = &nbrs[4 * vertex_b(i, n)];
    b[0] = vertex_a(i, n);
    b[1] = vertex_c(i + p.b(), n);
    b[2] = vertex_c(i + p.c(), n);
    b[3] = vertex_c(i + p.d(), n);
    int* c = &nbrs[4 * vertex_c(i, n)];
    c[0] = vertex_a(i, n);
    c[1] = vertex_b(i - p.b(), n);
    c[2] = vertex_b(i - p.c(), n);
    c[3] = vertex_b(i - p.d(), n);
  }
  for (int v = 0; v < 3 * n; ++v) {
    std::sort(nbrs.begin() + 4 * v, nbrs.begin() + 4 * v + 4);
  }
  return WhGraph(p, SimpleGraph::from_csr(std::move(offsets), std::move(nbrs)));
}

EdgeKind WhGraph::kind(int u, int v) const {
  assert(adjacent(u, v));
  if (u > v) std::swap(u, v);
  const int n = this->n();
  const VertexId x = VertexId::from_linear(u, n);
  const VertexId y = VertexId::from_linear(v, n);
  if (y.cls == VertexClass::kA) return EdgeKind::kAEdge;
  if (x.cls == VertexClass::kA) {
    return y.cls == VertexClass::kB ? EdgeKind::kLeft : EdgeKind::kRight;
  }
  // B_i C_{i+x}
  const int offset = static_cast<int>(mod(y.index - x.index, n));
  if (offset == params_.b()) return EdgeKind::kBEdge;
  if (offset == params_.c()) return EdgeKind::kCEdge;
  return EdgeKind::kDEdge;
}

std::vector<TypedEdge> WhGraph::typed_edges() const {
  std::vector<TypedEdge> out;
  out.reserve(graph_.edge_count());
  for (const auto& [u, v] : graph_.edges()) out.push_back({u, v, kind(u, v)});
  return out;
}

std::array<Edge, 6> WhGraph::kind_representatives() const {
  const int n = this->n();
  const auto& p = params_;
  return {{{vertex_a(0, n), vertex_a(p.a(), n)},
           {vertex_a(0, n), vertex_b(0, n)},
           {vertex_a(0, n), vertex_c(0, n)},
           {vertex_b(0, n), vertex_c(p.b(), n)},
           {vertex_b(0, n), vertex_c(p.c(), n)},
           {vertex_b(0, n), vertex_c(p.d(), n)}}};
}

int girth(const SimpleGraph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      // No shorter cycle through root can be found past this depth.
      if (2 * dist[v] + 1 >= best) break;
      for (int u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

std::vector<Cycle> canonical_six_cycles(const WhGraph& g) {
  const auto& p = g.params();
  const int n = p.n();
  std::vector<Cycle> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back({vertex_b(i, n), vertex_c(i + p.b(), n),
                   vertex_b(i + p.b() - p.c(), n),
                   vertex_c(i + p.b() - p.c() + p.d(), n),
                   vertex_b(i - p.c() + p.d(), n), vertex_c(i + p.d(), n)});
  }
  return out;
}

namespace {

// Extends `path` by simple paths until it has `length` vertices and the last
// one is adjacent to path.front(); each completion is a cycle.
template <typename Visit>
void extend_to_cycles(const SimpleGraph& g, std::vector<int>& path,
                      std::size_t length, Visit&& visit) {
  const int last = path.back();
  if (path.size() == length) {
    if (g.adjacent(last, path.front())) visit(path);
    return;
  }
  for (int u : g.neighbors(last)) {
    if (std::find(path.begin(), path.end(), u) != path.end()) continue;
    path.push_back(u);
    extend_to_cycles(g, path, length, visit);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> six_cycles_through_two_arc(const SimpleGraph& g,
                                              const std::array<int, 3>& path) {
  const auto [u, v, w] = path;
  const int n = g.order();
  const auto in_range = [n](int x) { return x >= 0 && x < n; };
  if (!in_range(u) || !in_range(v) || !in_range(w) || u == w ||
      !g.adjacent(u, v) || !g.adjacent(v, w)) {
    throw WhError(ErrorCode::kNotATwoPath,
                  "(" + std::to_string(u) + "," + std::to_string(v) + "," +
                      std::to_string(w) + ") is not a 2-path");
  }
  std::vector<Cycle> out;
  std::vector<int> walk{u, v, w};
  extend_to_cycles(g, walk, 6, [&](const std::vector<int>& c) {
    out.push_back(c);
  });
  return out;
}

std::int64_t count_cycles_through_edge(const SimpleGraph& g, int u, int v,
                                       int length) {
  std::int64_t count = 0;
  std::vector<int> walk{u, v};
  walk.reserve(length);
  extend_to_cycles(g, walk, static_cast<std::size_t>(length),
                   [&](const std::vector<int>&) { ++count; });
  return count;
}

QuotientGraph quotient_by_rho_power(const WhGraph& g, int k) {
  const int n = g.n();
  if (k < 1 || n % k != 0) {
    throw WhError(ErrorCode::kKNotDivisor,
                  std::to_string(k) + " does not divide n = " +
                      std::to_string(n));
  }
  const auto orbit_of = [n, k](int v) {
    return (v / n) * k + (v % n) % k;
  };
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.graph().edges()) {
    int x = orbit_of(u);
    int y = orbit_of(v);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {k, SimpleGraph::from_edges(3 * k, edges)};
}

std::optional<WhParams> quotient_as_wh(const QuotientGraph& q,
                                       const WhParams& source) {
  const int k = q.k;
  if (!is_valid_tuple(k, source.a(), source.b(), source.c(), source.d())) {
    return std::nullopt;
  }
  const WhParams reduced =
      WhParams::validate(k, source.a(), source.b(), source.c(), source.d());
  if (build_graph(reduced).graph() != q.graph) return std::nullopt;
  return reduced;
}

}  // namespace wh
