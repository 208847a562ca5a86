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

#include "whgraph/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "whgraph/error.hpp"

namespace wh {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<int> base_prefix)
    : degree_(degree),
      generators_(std::move(generators)),
      base_(std::move(base_prefix)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw WhError(ErrorCode::kLengthMismatch,
                    "generator of degree " + std::to_string(g.degree()) +
                        " in a group of degree " + std::to_string(degree_));
    }
  }
  schreier_sims();
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.point = base_[i];
  level.gens.clear();
  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes_prefix = true;
    for (std::size_t j = 0; j < i && fixes_prefix; ++j) {
      fixes_prefix = strong_[s](base_[j]) == base_[j];
    }
    if (fixes_prefix) level.gens.push_back(static_cast<int>(s));
  }
  level.orbit.assign(1, level.point);
  level.slot.assign(degree_, -1);
  level.reps.assign(1, Permutation::identity(degree_));
  level.rep_inverses.assign(1, Permutation::identity(degree_));
  level.slot[level.point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int x = level.orbit[head];
    for (int s : level.gens) {
      const int y = strong_[s](x);
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<int>(level.reps.size());
      level.reps.push_back(level.reps[level.slot[x]] * strong_[s]);
      level.rep_inverses.push_back(level.reps.back().inverse());
      level.orbit.push_back(y);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g,
                                                     std::size_t first) const {
  for (std::size_t i = first; i < levels_.size(); ++i) {
    const int x = g(levels_[i].point);
    const int slot = levels_[i].slot[x];
    if (slot < 0) return {std::move(g), i};
    g = g * levels_[i].rep_inverses[slot];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  for (const auto& g : generators_) {
    if (!g.is_identity() &&
        std::find(strong_.begin(), strong_.end(), g) == strong_.end()) {
      strong_.push_back(g);
    }
  }
  for (const auto& s : strong_) {
    const bool moves_base = std::any_of(base_.begin(), base_.end(),
                                        [&](int b) { return s(b) != b; });
    if (!moves_base) base_.push_back(s.first_moved_point());
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) rebuild_level(i);

  // Schreier generators already sifted successfully, per level; reset when a
  // level is rebuilt.
  std::vector<std::unordered_set<std::int64_t>> done(levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; !restarted && oi < level.orbit.size(); ++oi) {
      const int beta = level.orbit[oi];
      for (int s : level.gens) {
        const std::int64_t key = std::int64_t{beta} << 32 | s;
        if (done[i].contains(key)) continue;
        const int image = strong_[s](beta);
        Permutation h = level.reps[level.slot[beta]] * strong_[s] *
                        level.rep_inverses[level.slot[image]];
        if (h.is_identity()) {
          done[i].insert(key);
          continue;
        }
        auto [residue, j] = strip(std::move(h), i + 1);
        if (j == levels_.size() && residue.is_identity()) {
          done[i].insert(key);
          continue;
        }
        if (j == levels_.size()) {
          base_.push_back(residue.first_moved_point());
          levels_.emplace_back();
          done.emplace_back();
        }
        strong_.push_back(std::move(residue));
        for (std::size_t l = i + 1; l <= j; ++l) {
          rebuild_level(l);
          done[l].clear();
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<int> PermGroup::fundamental_orbit_sizes() const {
  std::vector<int> out;
  for (const auto& level : levels_) {
    out.push_back(static_cast<int>(level.orbit.size()));
  }
  return out;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    const std::uint64_t len = level.orbit.size();
    if (__builtin_mul_overflow(result, len, &result)) {
      throw WhError(ErrorCode::kOrderOverflow,
                    "group order does not fit in 64 bits");
    }
  }
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermGroup::stabilizer_generators(
    std::size_t level) const {
  std::vector<Permutation> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && j < base_.size() && fixes; ++j) {
      fixes = s(base_[j]) == base_[j];
    }
    if (fixes) out.push_back(s);
  }
  return out;
}

PermGroup group_from_generators(int degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

PermGroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree()) {
    throw WhError(ErrorCode::kDomainMismatch,
                  "point " + std::to_string(point) + " outside degree " +
                      std::to_string(group.degree()));
  }
  const PermGroup rebased(group.degree(), group.generators(), {point});
  return PermGroup(group.degree(), rebased.stabilizer_generators(1));
}

std::string_view action_name(Action action) {
  switch (action) {
    case Action::kVertices: return "vertices";
    case Action::kEdges: return "edges";
    case Action::kArcs: return "arcs";
    case Action::kTwoArcs: return "two_arcs";
  }
  return "?";
}

ActionDomain::ActionDomain(const SimpleGraph& graph, Action action)
    : graph_(&graph), action_(action) {
  const int n = graph.order();
  const int arcs = static_cast<int>(2 * graph.edge_count());
  arc_tail_.resize(arcs);
  edge_of_arc_.assign(arcs, -1);
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < graph.degree(u); ++k) arc_tail_[graph.offset(u) + k] = u;
  }
  for (int u = 0; u < n; ++u) {
    const auto row = graph.neighbors(u);
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      const int v = row[k];
      if (u < v) {
        const int e = static_cast<int>(arc_of_edge_.size());
        arc_of_edge_.push_back(graph.offset(u) + k);
        edge_of_arc_[graph.offset(u) + k] = e;
        edge_of_arc_[graph.offset(v) + graph.neighbor_slot(v, u)] = e;
      }
    }
  }
  two_arc_offset_.resize(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    const int d = graph.degree(v);
    two_arc_offset_[v + 1] = two_arc_offset_[v] + d * (d - 1);
  }
  switch (action) {
    case Action::kVertices: size_ = n; break;
    case Action::kEdges: size_ = static_cast<int>(arc_of_edge_.size()); break;
    case Action::kArcs: size_ = arcs; break;
    case Action::kTwoArcs: size_ = two_arc_offset_[n]; break;
  }
}

int ActionDomain::index_of_arc(int u, int v) const {
  const int slot = graph_->neighbor_slot(u, v);
  return slot < 0 ? -1 : graph_->offset(u) + slot;
}

int ActionDomain::index_of_edge(int u, int v) const {
  const int arc = index_of_arc(u, v);
  return arc < 0 ? -1 : edge_of_arc_[arc];
}

int ActionDomain::index_of_two_arc(int u, int v, int w) const {
  const int su = graph_->neighbor_slot(v, u);
  int sw = graph_->neighbor_slot(v, w);
  if (su < 0 || sw < 0 || su == sw) return -1;
  if (sw > su) --sw;
  return two_arc_offset_[v] + su * (graph_->degree(v) - 1) + sw;
}

std::vector<int> ActionDomain::element(int i) const {
  switch (action_) {
    case Action::kVertices: return {i};
    case Action::kEdges: {
      const int arc = arc_of_edge_[i];
      const int u = arc_tail_[arc];
      return {u, graph_->neighbors(u)[arc - graph_->offset(u)]};
    }
    case Action::kArcs: {
      const int u = arc_tail_[i];
      return {u, graph_->neighbors(u)[i - graph_->offset(u)]};
    }
    case Action::kTwoArcs: {
      const auto it = std::upper_bound(two_arc_offset_.begin(),
                                       two_arc_offset_.end(), i);
      const int v = static_cast<int>(it - two_arc_offset_.begin()) - 1;
      const int local = i - two_arc_offset_[v];
      const int d = graph_->degree(v);
      const int su = local / (d - 1);
      int sw = local % (d - 1);
      if (sw >= su) ++sw;
      const auto row = graph_->neighbors(v);
      return {row[su], v, row[sw]};
    }
  }
  return {};
}

int ActionDomain::image(int i, const Permutation& g) const {
  switch (action_) {
    case Action::kVertices: return g(i);
    case Action::kEdges: {
      const auto e = element(i);
      return index_of_edge(g(e[0]), g(e[1]));
    }
    case Action::kArcs: {
      const auto e = element(i);
      return index_of_arc(g(e[0]), g(e[1]));
    }
    case Action::kTwoArcs: {
      const auto e = element(i);
      return index_of_two_arc(g(e[0]), g(e[1]), g(e[2]));
    }
  }
  return -1;
}

OrbitPartition orbits(const std::vector<Permutation>& generators,
                      const SimpleGraph& graph, Action action) {
  for (const auto& g : generators) {
    if (g.degree() != graph.order()) {
      throw WhError(ErrorCode::kDomainMismatch,
                    "group of degree " + std::to_string(g.degree()) +
                        " acting on a graph of order " +
                        std::to_string(graph.order()));
    }
  }
  const ActionDomain domain(graph, action);
  std::vector<int> parent(domain.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : generators) {
    for (int i = 0; i < domain.size(); ++i) {
      const int j = domain.image(i, g);
      if (j < 0) {
        throw WhError(ErrorCode::kDomainMismatch,
                      "generator is not an automorphism of the graph");
      }
      const int ri = find(i);
      const int rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  OrbitPartition out;
  std::vector<int> orbit_of_root(domain.size(), -1);
  for (int i = 0; i < domain.size(); ++i) {
    const int r = find(i);
    if (orbit_of_root[r] < 0) {
      orbit_of_root[r] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbits[orbit_of_root[r]].push_back(i);
  }
  return out;
}

OrbitPartition orbits(const PermGroup& group, const SimpleGraph& graph,
                      Action action) {
  if (group.degree() != graph.order()) {
    throw WhError(ErrorCode::kDomainMismatch,
                  "group of degree " + std::to_string(group.degree()) +
                      " acting on a graph of order " +
                      std::to_string(graph.order()));
  }
  return orbits(group.generators(), graph, action);
}

}  // namespace wh
