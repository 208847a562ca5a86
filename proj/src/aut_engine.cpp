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

#include "whgraph/aut_engine.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "whgraph/export.hpp"
#include "whgraph/named_automorphisms.hpp"

namespace wh {

ColoredGraph::ColoredGraph(SimpleGraph graph, std::vector<int> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (colors_.empty()) colors_.assign(graph_.order(), 0);
  if (static_cast<int>(colors_.size()) != graph_.order()) {
    throw std::invalid_argument("ColoredGraph: one color per vertex");
  }
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running state
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered partition of the vertex set; cell ids are the start positions of
// cells, which makes every derived quantity independent of vertex names.
struct Partition {
  std::vector<int> elems;     // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell;      // vertex -> cell start
  std::vector<int> cell_end;  // cell start -> end position
  int cells = 0;

  int size(int start) const { return cell_end[start] - start; }
  bool discrete() const { return cells == static_cast<int>(elems.size()); }
};

Partition initial_partition(std::span<const int> colors) {
  const int n = static_cast<int>(colors.size());
  Partition p;
  p.elems.resize(n);
  std::iota(p.elems.begin(), p.elems.end(), 0);
  std::sort(p.elems.begin(), p.elems.end(), [&](int x, int y) {
    return colors[x] != colors[y] ? colors[x] < colors[y] : x < y;
  });
  p.pos.resize(n);
  p.cell.resize(n);
  p.cell_end.assign(n, 0);
  int start = 0;
  for (int i = 0; i < n; ++i) {
    const int v = p.elems[i];
    p.pos[v] = i;
    if (i > 0 && colors[v] != colors[p.elems[i - 1]]) {
      p.cell_end[start] = i;
      start = i;
      ++p.cells;
    }
    p.cell[v] = start;
  }
  if (n > 0) {
    p.cell_end[start] = n;
    ++p.cells;
  }
  return p;
}

class Refiner {
 public:
  explicit Refiner(const SimpleGraph& g)
      : g_(g), count_(g.order(), 0), in_queue_(g.order(), 0),
        marked_(g.order(), 0) {}

  void refine(Partition& p, std::vector<int> queue) {
    for (int s : queue) in_queue_[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int w_cell = queue[head];
      in_queue_[w_cell] = 0;
      touched_.clear();
      for (int i = w_cell; i < p.cell_end[w_cell]; ++i) {
        for (int u : g_.neighbors(p.elems[i])) {
          if (count_[u]++ == 0) touched_.push_back(u);
        }
      }
      touched_cells_.clear();
      for (int u : touched_) {
        const int c = p.cell[u];
        if (!marked_[c]) {
          marked_[c] = 1;
          touched_cells_.push_back(c);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      for (int x : touched_cells_) {
        marked_[x] = 0;
        split(p, x, queue);
      }
      for (int u : touched_) count_[u] = 0;
    }
  }

 private:
  void split(Partition& p, int x, std::vector<int>& queue) {
    const int end = p.cell_end[x];
    if (end - x == 1) return;
    int lo = count_[p.elems[x]], hi = lo;
    for (int i = x + 1; i < end; ++i) {
      lo = std::min(lo, count_[p.elems[i]]);
      hi = std::max(hi, count_[p.elems[i]]);
    }
    if (lo == hi) return;
    std::sort(p.elems.begin() + x, p.elems.begin() + end, [&](int a, int b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    fragments_.clear();
    for (int i = x; i < end; ++i) {
      const int v = p.elems[i];
      p.pos[v] = i;
      if (i == x || count_[v] != count_[p.elems[i - 1]]) fragments_.push_back(i);
      p.cell[v] = fragments_.back();
    }
    fragments_.push_back(end);
    int largest = 0;
    for (std::size_t f = 0; f + 1 < fragments_.size(); ++f) {
      p.cell_end[fragments_[f]] = fragments_[f + 1];
      if (fragments_[f + 1] - fragments_[f] >
          fragments_[largest + 1] - fragments_[largest]) {
        largest = static_cast<int>(f);
      }
    }
    p.cells += static_cast<int>(fragments_.size()) - 2;
    const bool queued = in_queue_[x];
    for (std::size_t f = 0; f + 1 < fragments_.size(); ++f) {
      const int start = fragments_[f];
      if (queued ? start == x : static_cast<int>(f) == largest) continue;
      in_queue_[start] = 1;
      queue.push_back(start);
    }
  }

  const SimpleGraph& g_;
  std::vector<int> count_;
  std::vector<char> in_queue_;
  std::vector<char> marked_;
  std::vector<int> touched_;
  std::vector<int> touched_cells_;
  std::vector<int> fragments_;
};

std::vector<int> all_cells(const Partition& p) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(p.elems.size()); s = p.cell_end[s]) {
    out.push_back(s);
  }
  return out;
}

// Cell sizes in order plus, per cell, the sorted neighbor cells of one
// member (all members agree on an equitable partition).
std::uint64_t node_invariant(const SimpleGraph& g, const Partition& p) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  std::vector<int> row;
  for (int s = 0; s < static_cast<int>(p.elems.size()); s = p.cell_end[s]) {
    h = mix(h, static_cast<std::uint64_t>(s));
    h = mix(h, static_cast<std::uint64_t>(p.size(s)));
    row.clear();
    for (int u : g.neighbors(p.elems[s])) row.push_back(p.cell[u]);
    std::sort(row.begin(), row.end());
    for (int c : row) h = mix(h, static_cast<std::uint64_t>(c));
  }
  return h;
}

struct Leaf {
  std::vector<int> elems;
  std::vector<int> path;
  std::vector<std::uint64_t> invariants;
  std::vector<std::uint64_t> certificate;
};

class Search {
 public:
  explicit Search(const ColoredGraph& g)
      : g_(g), graph_(g.graph()), n_(g.order()), refiner_(graph_) {}

  SymmetryResult run() {
    Partition root = initial_partition(g_.colors());
    refiner_.refine(root, all_cells(root));
    invariants_.push_back(node_invariant(graph_, root));
    ++stats_.nodes;
    visit(root, 0);
    return finish();
  }

 private:
  // Returns the depth to back-jump to, or -1.
  int visit(const Partition& p, int depth) {
    if (p.discrete()) return leaf(p);

    int target = -1;
    for (int s = 0; s < n_; s = p.cell_end[s]) {
      if (p.size(s) > 1 && (target < 0 || p.size(s) < p.size(target))) {
        target = s;
      }
    }
    std::vector<int> children(p.elems.begin() + target,
                              p.elems.begin() + p.cell_end[target]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::vector<int> uf;
    std::size_t uf_gens = static_cast<std::size_t>(-1);
    for (int v : children) {
      if (!explored.empty()) {
        if (uf_gens != generators_.size()) {
          uf = stabilizer_orbits();
          uf_gens = generators_.size();
        }
        const int root = find(uf, v);
        const bool covered = std::any_of(
            explored.begin(), explored.end(),
            [&](int u) { return find(uf, u) == root; });
        if (covered) continue;
      }
      explored.push_back(v);

      Partition child = p;
      individualize(child, v);
      path_.push_back(v);
      invariants_.push_back(node_invariant(graph_, child));
      ++stats_.nodes;
      int jump = -1;
      if (!prunable()) jump = visit(child, depth + 1);
      path_.pop_back();
      invariants_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  void individualize(Partition& p, int v) {
    const int x = p.cell[v];
    const int end = p.cell_end[x];
    const int at = p.pos[v];
    std::swap(p.elems[x], p.elems[at]);
    p.pos[p.elems[at]] = at;
    p.pos[v] = x;
    p.cell_end[x] = x + 1;
    p.cell_end[x + 1] = end;
    for (int i = x + 1; i < end; ++i) p.cell[p.elems[i]] = x + 1;
    ++p.cells;
    refiner_.refine(p, {x});
  }

  // A node can be skipped when it cannot lead to a leaf equivalent to the
  // first leaf and its invariants already exceed those of the best leaf.
  bool prunable() const {
    if (!have_leaf_) return false;
    if (prefix_equal(first_.invariants)) return false;
    return compare_prefix(best_.invariants) > 0;
  }

  bool prefix_equal(const std::vector<std::uint64_t>& ref) const {
    if (invariants_.size() > ref.size()) return false;
    return std::equal(invariants_.begin(), invariants_.end(), ref.begin());
  }

  // Compares the current invariant sequence with the same-length prefix of
  // `ref`; a longer current sequence with an equal prefix compares greater.
  int compare_prefix(const std::vector<std::uint64_t>& ref) const {
    const std::size_t len = std::min(invariants_.size(), ref.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (invariants_[i] != ref[i]) return invariants_[i] < ref[i] ? -1 : 1;
    }
    return invariants_.size() > ref.size() ? 1 : 0;
  }

  std::vector<std::uint64_t> certificate(const Partition& p) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(graph_.edge_count());
    for (int u = 0; u < n_; ++u) {
      for (int v : graph_.neighbors(u)) {
        if (u >= v) continue;
        std::uint64_t x = p.pos[u], y = p.pos[v];
        if (x > y) std::swap(x, y);
        cert.push_back(x << 32 | y);
      }
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  int leaf(const Partition& p) {
    ++stats_.leaves;
    Leaf current{p.elems, path_, invariants_, certificate(p)};
    if (!have_leaf_) {
      first_ = current;
      best_ = std::move(current);
      have_leaf_ = true;
      return -1;
    }
    if (current.invariants == first_.invariants &&
        current.certificate == first_.certificate) {
      return record_automorphism(first_, current);
    }
    if (current.invariants == best_.invariants &&
        current.certificate == best_.certificate) {
      return record_automorphism(best_, current);
    }
    if (std::tie(current.invariants, current.certificate) <
        std::tie(best_.invariants, best_.certificate)) {
      best_ = std::move(current);
    }
    return -1;
  }

  // Stores the automorphism mapping leaf `from` onto leaf `to` and returns
  // the depth of their common ancestor when the map carries one path onto
  // the other, so the rest of the current subtree is an image of explored
  // territory.
  int record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) images[from.elems[i]] = to.elems[i];
    Permutation gamma(std::move(images));
    if (!is_automorphism(graph_, gamma) || !preserves_colors(gamma)) {
      throw std::logic_error("equal certificates without an automorphism");
    }
    if (std::find(generators_.begin(), generators_.end(), gamma) ==
        generators_.end()) {
      generators_.push_back(gamma);
    }
    std::size_t split = 0;
    while (split < from.path.size() && split < to.path.size() &&
           from.path[split] == to.path[split]) {
      ++split;
    }
    for (std::size_t i = 0; i <= split && i < from.path.size() &&
                            i < to.path.size();
         ++i) {
      if (gamma(from.path[i]) != to.path[i]) return -1;
    }
    return static_cast<int>(split);
  }

  bool preserves_colors(const Permutation& gamma) const {
    const auto colors = g_.colors();
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != colors[gamma(v)]) return false;
    }
    return true;
  }

  // Union-find over vertices for the generators that fix the current path
  // pointwise.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(),
                                     [&](int v) { return gamma(v) == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(uf, v), b = find(uf, gamma(v));
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    return uf;
  }

  static int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }

  SymmetryResult finish() {
    SymmetryResult result;
    result.generators = generators_;
    result.stats = stats_;
    CanonicalForm& cf = result.canonical;
    cf.labeling.assign(n_, 0);
    const auto colors = g_.colors();
    cf.colors.resize(n_);
    for (int i = 0; i < n_; ++i) {
      cf.labeling[best_.elems[i]] = i;
      cf.colors[i] = colors[best_.elems[i]];
    }
    for (std::uint64_t key : best_.certificate) {
      cf.edges.emplace_back(static_cast<int>(key >> 32),
                            static_cast<int>(key & 0xffffffffULL));
    }
    cf.graph6 = to_graph6(SimpleGraph::from_edges(n_, cf.edges));
    std::string payload = cf.graph6;
    const bool uniform = std::all_of(cf.colors.begin(), cf.colors.end(),
                                     [&](int c) { return c == cf.colors.front(); });
    if (!uniform) {
      for (int c : cf.colors) payload += "," + std::to_string(c);
    }
    cf.digest = sha256_hex(payload);
    return result;
  }

  const ColoredGraph& g_;
  const SimpleGraph& graph_;
  int n_;
  Refiner refiner_;
  std::vector<int> path_;
  std::vector<std::uint64_t> invariants_;
  std::vector<Permutation> generators_;
  bool have_leaf_ = false;
  Leaf first_;
  Leaf best_;
  SearchStats stats_;
};

}  // namespace

std::vector<int> refine(const ColoredGraph& g) {
  Partition p = initial_partition(g.colors());
  Refiner refiner(g.graph());
  refiner.refine(p, all_cells(p));
  std::vector<int> colors(g.order());
  int ordinal = 0;
  for (int s = 0; s < g.order(); s = p.cell_end[s], ++ordinal) {
    for (int i = s; i < p.cell_end[s]; ++i) colors[p.elems[i]] = ordinal;
  }
  return colors;
}

bool is_equitable(const SimpleGraph& g, std::span<const int> colors) {
  const int k = colors.empty()
                    ? 0
                    : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<int>> profile_of_color(k);
  std::vector<int> profile(k);
  for (int v = 0; v < g.order(); ++v) {
    std::fill(profile.begin(), profile.end(), 0);
    for (int u : g.neighbors(v)) ++profile[colors[u]];
    auto& ref = profile_of_color[colors[v]];
    if (ref.empty()) {
      ref = profile;
    } else if (ref != profile) {
      return false;
    }
  }
  return true;
}

SymmetryResult analyze_symmetry(const ColoredGraph& g) {
  if (g.order() == 0) return {};
  return Search(g).run();
}

std::vector<Permutation> automorphism_generators(const ColoredGraph& g) {
  return analyze_symmetry(g).generators;
}

CanonicalForm canonical_form(const ColoredGraph& g) {
  return analyze_symmetry(g).canonical;
}

bool are_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.order() != g2.order() ||
      g1.graph().edge_count() != g2.graph().edge_count()) {
    return false;
  }
  return canonical_form(g1) == canonical_form(g2);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  static constexpr char kHex[] = "0123456789abcdef";
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 15]);
  }
  return hex;
}

}  // namespace wh
