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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.
//
//   whgraph_acceptance            run criteria 1-9
//   whgraph_acceptance 3 5        run the listed criteria only

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "support/oracles.hpp"
#include "whgraph/aut_engine.hpp"
#include "whgraph/census.hpp"
#include "whgraph/classification.hpp"
#include "whgraph/named_automorphisms.hpp"
#include "whgraph/perm_group.hpp"
#include "whgraph/symmetry.hpp"

#ifndef WHGRAPH_CLI
#error "WHGRAPH_CLI must name the command-line binary"
#endif

namespace {

using namespace wh;
namespace fs = std::filesystem;

struct Outcome {
  bool pass;
  std::string detail;
};

// All valid tuples with n in [lo, hi], each (a, b, c, d) labeled tuple.
void sweep(int lo, int hi, const std::function<void(const WhParams&)>& f) {
  for (int n = lo; n <= hi; ++n) {
    for_each_params(n, Reduction::kNone, [&](const WhParams& p) {
      f(p);
      return true;
    });
  }
}

std::string first_few(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) out += " " + v[i];
  return out;
}

Outcome criterion1() {
  std::vector<std::string> failures;
  long rt = 0, sg = 0;
  sweep(3, 12, [&](const WhParams& p) {
    const WhGraph g = build_graph(p);
    if (!is_automorphism(g, rho(p)) || !is_automorphism(g, tau(p))) {
      failures.push_back(p.to_string());
    }
    ++rt;
  });
  for (int n = 4; n <= 24; n += 2) {
    for_each_params(n, Reduction::kNone, [&](const WhParams& p) {
      if (sigma_violation(p)) return true;
      if (!is_automorphism(build_graph(p), sigma(p))) {
        failures.push_back("sigma " + p.to_string());
      }
      ++sg;
      return true;
    });
  }
  for (int m : {3, 5, 7, 9}) {
    if (!is_automorphism(build_graph(family3_params(m)), theta(m))) {
      failures.push_back("theta m=" + std::to_string(m));
    }
  }
  return {failures.empty() && sg > 0,
          std::to_string(rt) + " tuples for rho/tau, " + std::to_string(sg) +
              " sigma tuples, theta m=3,5,7,9; failures:" +
              std::to_string(failures.size()) + first_few(failures)};
}

Outcome criterion2() {
  std::vector<std::string> bad;
  long total = 0, vt = 0;
  sweep(3, 16, [&](const WhParams& p) {
    const WhGraph g = build_graph(p);
    const bool truth =
        orbits(automorphism_generators(g), g.graph(), Action::kVertices).count() == 1;
    const bool predicted = classify(p).verdicts.front() != Verdict::kNotVT;
    if (truth != predicted) bad.push_back(p.to_string());
    vt += truth;
    ++total;
  });
  return {bad.empty(), std::to_string(total) + " tuples (n <= 16), " +
                           std::to_string(vt) + " vertex-transitive, " +
                           std::to_string(bad.size()) + " discrepancies" +
                           first_few(bad)};
}

Outcome criterion3() {
  using Clock = std::chrono::steady_clock;
  // the cheap filter never rejects an edge-transitive graph: every rejection
  // must come with two edges lying on different numbers of 4- or 6-cycles,
  // counted by brute force
  std::size_t checked = 0, rejected = 0, unjustified = 0, full_hits = 0;
  for (int n = 3; n <= 12; ++n) {
    for (const auto& p : enumerate_params(n, Reduction::kEt)) {
      const WhGraph g = build_graph(p);
      const auto m = oracle::wh_matrix(p.n(), p.a(), p.b(), p.c(), p.d());
      std::map<std::pair<int, int>, std::array<long, 2>> per_edge;
      for (int k = 0; k < 2; ++k) {
        for (const auto& cyc : oracle::cycles_of_length(m, 4 + 2 * k)) {
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            ++per_edge[{std::min(u, v), std::max(u, v)}][k];
          }
        }
      }
      std::set<std::array<long, 2>> profiles;
      for (int u = 0; u < m.order; ++u)
        for (int v = u + 1; v < m.order; ++v)
          if (m(u, v)) profiles.insert(per_edge[{u, v}]);
      const bool pass = passes_cycle_filter(g);
      rejected += !pass;
      unjustified += !pass && profiles.size() == 1;
      full_hits += is_edge_transitive(g);
      ++checked;
    }
  }
  auto t0 = Clock::now();
  const auto r40 = search_edge_transitive(40);
  const double s40 = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  const auto r71 = search_edge_transitive(71);
  const double s71 = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool pass = r40.hits.empty() && r71.hits.empty() && s40 <= 600 &&
                    s71 <= 7200 && unjustified == 0 && full_hits == 0;
  std::ostringstream os;
  os << "n<=40: " << r40.hits.size() << " hits of " << r40.examined << " tuples in "
     << s40 << " s; n<=71: " << r71.hits.size() << " hits of " << r71.examined
     << " tuples (" << r71.filter_survivors << " passed the cycle filter) in " << s71
     << " s; filter soundness n<=12: " << rejected << " of " << checked
     << " rejected, " << unjustified << " without a brute-force witness, "
     << full_hits << " edge-transitive";
  return {pass, os.str()};
}

Outcome criterion4() {
  std::vector<std::string> bad;
  long total = 0;
  sweep(3, 12, [&](const WhParams& p) {
    const WhGraph g = build_graph(p);
    if (orbits(automorphism_generators(g), g.graph(), Action::kTwoArcs).count() <= 1) {
      bad.push_back(p.to_string());
    }
    ++total;
  });
  return {bad.empty(), std::to_string(total) + " tuples (n <= 12), " +
                           std::to_string(bad.size()) +
                           " with a single 2-arc orbit" + first_few(bad)};
}

// Visits every vertex-transitive valid tuple with n <= 16 together with its
// Aut generators.
void vt_sweep(const std::function<void(const WhParams&, const WhGraph&,
                                       const std::vector<Permutation>&)>& f) {
  for (int n = 4; n <= 16; n += 2) {
    for_each_params(n, Reduction::kNone, [&](const WhParams& p) {
      const WhGraph g = build_graph(p);
      const auto gens = automorphism_generators(g);
      if (orbits(gens, g.graph(), Action::kVertices).count() == 1) f(p, g, gens);
      return true;
    });
  }
}

Outcome criterion5() {
  std::vector<std::string> bad;
  long total = 0;
  vt_sweep([&](const WhParams& p, const WhGraph& g,
               const std::vector<Permutation>& gens) {
    ++total;
    const auto edge_orbits = orbits(gens, g.graph(), Action::kEdges);
    const WhGraph ng = build_graph(normalize_for_coloring(p));
    const auto col = color_edges(ng);
    const ActionDomain edges(g.graph(), Action::kEdges);
    std::set<Edge> red(col.red_edges().begin(), col.red_edges().end());
    std::set<Edge> blue(col.blue_edges().begin(), col.blue_edges().end());
    bool ok = edge_orbits.count() == 2;
    for (std::size_t k = 0; ok && k < 2; ++k) {
      std::set<Edge> orbit;
      for (int e : edge_orbits.orbits[k]) {
        const auto uv = edges.element(e);
        orbit.insert({uv[0], uv[1]});
      }
      ok = orbit == red || orbit == blue;
    }
    if (!ok) bad.push_back(p.to_string());
  });
  return {bad.empty() && total > 0,
          std::to_string(total) +
              " vertex-transitive tuples (n <= 16); edge orbits differing from "
              "red/blue: " +
              std::to_string(bad.size()) + first_few(bad)};
}

Outcome criterion6() {
  std::vector<std::string> bad;
  long paths = 0;
  std::set<WhParams> done;
  vt_sweep([&](const WhParams& p, const WhGraph&, const std::vector<Permutation>&) {
    const WhParams np = normalize_for_coloring(p);
    if (!done.insert(np).second) return;
    const WhGraph g = build_graph(np);
    const auto col = color_edges(g);
    const std::size_t expected = mod(4 * np.a(), np.n()) == 0 ? 4 : 2;
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> red;
      for (int u : g.neighbors(v))
        if (col.is_red(u, v)) red.push_back(u);
      ++paths;
      if (red.size() != 2 ||
          basic_six_cycles_through(g, col, {red[0], v, red[1]}).size() != expected) {
        bad.push_back(np.to_string());
        return;
      }
    }
  });
  return {bad.empty() && paths > 0,
          std::to_string(done.size()) + " normalized tuples, " +
              std::to_string(paths) + " red 2-paths; mismatches: " +
              std::to_string(bad.size()) + first_few(bad)};
}

WhParams P(int n, int a, int b, int c, int d) {
  return WhParams::validate(n, a, b, c, d);
}

std::string digest_of(const WhParams& p) {
  return canonical_form(build_graph(p)).digest;
}

bool has_family2(const VtClassification& c) {
  for (auto v : c.verdicts)
    if (v == Verdict::kFamily2) return true;
  return false;
}

Outcome criterion7() {
  std::vector<std::string> notes;
  bool pass = true;

  // (a) the two sporadic graphs differ
  const bool sporadic_distinct =
      !are_isomorphic(build_graph(P(8, 2, 1, 0, 5)), build_graph(P(8, 2, 1, 4, 5)));
  pass &= sporadic_distinct;
  notes.push_back(std::string("sporadic pair ") +
                  (sporadic_distinct ? "non-isomorphic" : "ISOMORPHIC"));

  // (b) family-(2) members of order 24, up to isomorphism
  std::set<std::string> order24;
  for_each_params(8, Reduction::kNone, [&](const WhParams& p) {
    if (has_family2(classify(p))) order24.insert(digest_of(p));
    return true;
  });
  const std::set<std::string> listed = {digest_of(P(8, 1, 3, 2, 5)),
                                        digest_of(P(8, 1, 7, 0, 1)),
                                        digest_of(P(8, 1, 7, 4, 1))};
  const bool list_ok = order24 == listed && listed.size() == 3 &&
                       !listed.count(digest_of(P(8, 2, 1, 0, 5))) &&
                       !listed.count(digest_of(P(8, 2, 1, 4, 5)));
  pass &= list_ok;
  notes.push_back("order-24 family-(2) classes: " + std::to_string(order24.size()) +
                  (list_ok ? " (as listed)" : " (MISMATCH)"));

  // (c) families (2) and (3) never meet, n <= 24; only n = 12, 20 have
  // third-family members there
  long compared = 0;
  bool disjoint = true;
  for (int m : {3, 5}) {
    const int n = 4 * m;
    const std::string f3 = digest_of(family3_params(m));
    for (int a = 1; a < n; a += 2)
      for (int b = 1; b < n; b += 2)
        for (int c = 0; c < n; c += 2) {
          const int d = (2 * a + b) % n;
          if (!is_valid_tuple(n, a, b, c, d)) continue;
          const WhParams p = P(n, a, b, c, d);
          if (!family2_check(p)) continue;
          ++compared;
          if (digest_of(p) == f3) disjoint = false;
        }
  }
  pass &= disjoint && compared > 0;
  notes.push_back(std::to_string(compared) + " family-(2) tuples vs family (3): " +
                  (disjoint ? "disjoint" : "OVERLAP"));

  // (d) alternating 4-cycles exactly on family (2) with a in {+-b, +-d}
  long vt = 0, with_alt = 0;
  std::vector<std::string> bad;
  vt_sweep([&](const WhParams& p, const WhGraph&, const std::vector<Permutation>&) {
    ++vt;
    const WhGraph ng = build_graph(normalize_for_coloring(p));
    const bool alt = !alternating_four_cycles(ng, color_edges(ng)).empty();
    bool predicted = false;
    for (const auto& w : classify(p).witnesses) {
      if (w.clause != Verdict::kFamily2) continue;
      const int n = w.normalized.n(), a = w.normalized.a();
      for (int x : {w.normalized.b(), w.normalized.d()}) {
        predicted |= mod(a - x, n) == 0 || mod(a + x, n) == 0;
      }
    }
    with_alt += alt;
    if (alt != predicted) bad.push_back(p.to_string());
  });
  pass &= bad.empty();
  notes.push_back(std::to_string(with_alt) + " of " + std::to_string(vt) +
                  " vertex-transitive tuples have alternating 4-cycles; mismatches: " +
                  std::to_string(bad.size()) + first_few(bad));

  std::string detail;
  for (const auto& s : notes) detail += (detail.empty() ? "" : "; ") + s;
  return {pass, detail};
}

Outcome criterion8() {
  long pairs = 0, agree = 0;
  // exhaustive over iso-class representatives, n <= 6
  std::vector<std::pair<WhParams, CanonicalForm>> reps;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& p : enumerate_params(n, Reduction::kIso)) {
      reps.emplace_back(p, canonical_form(build_graph(p)));
    }
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      const auto& [p, cp] = reps[i];
      const auto& [q, cq] = reps[j];
      const bool brute = oracle::isomorphic(
          oracle::wh_matrix(p.n(), p.a(), p.b(), p.c(), p.d()),
          oracle::wh_matrix(q.n(), q.a(), q.b(), q.c(), q.d()));
      ++pairs;
      agree += (cp == cq) == brute;
    }
  }
  const long exhaustive = pairs;
  // randomized relabelings, n <= 10: half of the pairs relabel one graph,
  // half relabel a second random tuple of the same n
  std::mt19937 rng(20240601);
  long iso_pairs = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto all = enumerate_params(n, Reduction::kNone);
    const WhParams p = all[rng() % all.size()];
    const WhParams q = t % 2 == 0 ? p : all[rng() % all.size()];
    const WhGraph gp = build_graph(p);
    std::vector<int> perm(gp.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph hq = build_graph(q).graph().relabeled(perm);
    const bool canon = canonical_form(ColoredGraph(gp.graph())) ==
                       canonical_form(ColoredGraph(hq));
    const bool brute =
        oracle::isomorphic(oracle::to_matrix(gp.graph()), oracle::to_matrix(hq));
    iso_pairs += brute;
    ++pairs;
    agree += canon == brute;
  }
  return {agree == pairs,
          std::to_string(exhaustive) + " representative pairs (n <= 6) + 50 random "
          "relabeled pairs (" + std::to_string(iso_pairs) + " isomorphic); agreement " +
              std::to_string(agree) + "/" + std::to_string(pairs)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion9() {
  const fs::path dir =
      fs::temp_directory_path() / ("whgraph_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto run = [&](int workers, const std::string& name) {
    const std::string cmd = std::string("\"") + WHGRAPH_CLI +
                            "\" census-vt --n-max 12 --workers " +
                            std::to_string(workers) + " --output \"" +
                            (dir / name).string() + "\" > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int rc1 = run(1, "w1.jsonl");
  const int rc4 = run(4, "w4.jsonl");
  bool same = true;
  std::size_t bytes = 0;
  for (const char* suffix : {"", ".g6", ".collisions.jsonl"}) {
    const std::string a = slurp(dir / ("w1.jsonl" + std::string(suffix)));
    const std::string b = slurp(dir / ("w4.jsonl" + std::string(suffix)));
    same &= a == b;
    bytes += a.size();
  }
  const bool nonempty = bytes > 0;
  fs::remove_all(dir);
  return {rc1 == 0 && rc4 == 0 && same && nonempty,
          "census-vt --n-max 12 with 1 and 4 workers: exit " + std::to_string(rc1) +
              "/" + std::to_string(rc4) + ", " + std::to_string(bytes) + " bytes, " +
              (same ? "byte-identical" : "DIFFERENT")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria = {
      {1, {"named automorphisms rho, tau, sigma, theta", criterion1}},
      {2, {"vertex-transitivity classification matches Aut, n <= 16", criterion2}},
      {3, {"no edge-transitive WH-graphs, n <= 40 and n <= 71", criterion3}},
      {4, {"more than one 2-arc orbit, n <= 12", criterion4}},
      {5, {"two edge orbits equal to the red/blue coloring, n <= 16", criterion5}},
      {6, {"basic 6-cycle counts through red 2-paths, n <= 16", criterion6}},
      {7, {"isomorphism facts and alternating 4-cycles", criterion7}},
      {8, {"canonical form agrees with brute-force isomorphism", criterion8}},
      {9, {"census output independent of worker count", criterion9}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& [k, v] : criteria) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    const auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::printf("[FAIL] criterion %d: unknown\n", k);
      ++failed;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", k,
                it->second.first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
