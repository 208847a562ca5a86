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


// whgraph: command-line front end. Machine-readable output goes to stdout,
// human-readable summaries to stderr.
//
// Exit codes: 0 success, 1 usage or validation error, 2 internal discrepancy.

#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whgraph/aut_engine.hpp"
#include "whgraph/census.hpp"
#include "whgraph/classification.hpp"
#include "whgraph/error.hpp"
#include "whgraph/export.hpp"
#include "whgraph/json_io.hpp"
#include "whgraph/symmetry.hpp"

namespace {

using wh::Json;

constexpr int kUsage = 1;
constexpr int kDiscrepancy = 2;
constexpr int kShortRunLimit = 40;

wh::WhParams tuple_at(const std::vector<long long>& v, std::size_t at) {
  return wh::WhParams::validate(v[at], v[at + 1], v[at + 2], v[at + 3], v[at + 4]);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_build(const wh::WhParams& p, const std::string& format) {
  const wh::WhGraph g = wh::build_graph(p);
  if (format == "graph6") {
    std::cout << wh::to_graph6(g.graph()) << '\n';
  } else if (format == "sparse6") {
    std::cout << wh::to_sparse6(g.graph()) << '\n';
  } else if (format == "dot") {
    std::cout << wh::to_dot(g);
  } else {
    Json j;
    j["params"] = wh::params_json(p);
    j["order"] = g.order();
    j["vertices"] = Json::array();
    for (int v = 0; v < g.order(); ++v) j["vertices"].push_back(g.vertex(v).label());
    j["edges"] = Json::array();
    for (const auto& e : g.typed_edges()) {
      j["edges"].push_back({e.u, e.v, std::string(wh::edge_kind_name(e.kind))});
    }
    emit(j);
  }
  std::cerr << p.to_string() << ": " << g.order() << " vertices, "
            << g.graph().edge_count() << " edges\n";
  return 0;
}

int run_analyze(const wh::WhParams& p) {
  const wh::WhGraph g = wh::build_graph(p);
  const auto sym = wh::analyze_symmetry(wh::ColoredGraph(g));
  const auto report = wh::transitivity_report(g, sym.generators);
  Json j;
  j["params"] = wh::params_json(p);
  j["girth"] = wh::girth(g);
  j["digest"] = sym.canonical.digest;
  j["graph6"] = sym.canonical.graph6;
  const Json fields = wh::transitivity_json(report);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  emit(j);
  std::cerr << p.to_string() << ": |Aut| = " << report.aut_order
            << ", orbits on vertices/edges/arcs/2-arcs = " << report.vertex_orbits
            << "/" << report.edge_orbits << "/" << report.arc_orbits << "/"
            << report.two_arc_orbits << "\n";
  return 0;
}

int run_classify(const wh::WhParams& p) {
  const auto c = wh::classify(p);
  Json j;
  j["params"] = wh::params_json(p);
  const Json fields = wh::classification_json(c);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  emit(j);
  std::cerr << p.to_string() << ":";
  for (auto v : c.verdicts) std::cerr << ' ' << wh::verdict_name(v);
  if (c.m) std::cerr << " (m = " << *c.m << ")";
  std::cerr << "\n";
  return 0;
}

int run_lr_check(const wh::WhParams& p) {
  const wh::WhGraph g = wh::build_graph(p);
  Json j;
  j["params"] = wh::params_json(p);
  try {
    const auto lr = wh::lr_candidate_check(g);
    j["applicable"] = true;
    const Json fields = wh::lr_json(lr);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    std::cerr << p.to_string() << ": alternating 4-cycles "
              << (lr.no_alt_4cycles ? "absent" : "present")
              << ", swap automorphism "
              << (lr.swap_automorphism_exists ? "exists" : "absent") << "\n";
  } catch (const wh::WhError& e) {
    if (e.code() != wh::ErrorCode::kNotVertexTransitive) throw;
    j["applicable"] = false;
    std::cerr << p.to_string() << ": not vertex-transitive, check not applicable\n";
  }
  emit(j);
  return 0;
}

// A parameter-level isomorphism: role permutation, sign of a and unit q
// taking p1 literally to p2. Scan order prefers the identity roles and sign.
struct ParamMap {
  int q;
  bool negate_a;
  std::array<int, 3> roles;
};

std::optional<ParamMap> param_witness(const wh::WhParams& p1,
                                         const wh::WhParams& p2) {
  if (p1.n() != p2.n()) return std::nullopt;
  for (const auto& roles : wh::kRolePermutations) {
    for (bool negate : {false, true}) {
      for (int q : wh::units_mod(p1.n())) {
        const auto t = wh::transform_params(p1, q, negate, roles);
        if (t == p2) return ParamMap{q, negate, roles};
      }
    }
  }
  return std::nullopt;
}

int run_iso(const wh::WhParams& p1, const wh::WhParams& p2) {
  const auto c1 = wh::canonical_form(wh::build_graph(p1));
  const auto c2 = wh::canonical_form(wh::build_graph(p2));
  const bool iso = p1.n() == p2.n() && c1 == c2;
  Json j;
  j["first"] = wh::params_json(p1);
  j["second"] = wh::params_json(p2);
  j["isomorphic"] = iso;
  j["digest_first"] = c1.digest;
  j["digest_second"] = c2.digest;
  const auto w = iso ? param_witness(p1, p2) : std::nullopt;
  if (w) {
    Json wj;
    wj["q"] = w->q;
    wj["sign"] = w->negate_a ? "-" : "+";
    wj["roles"] = Json::array({w->roles[0], w->roles[1], w->roles[2]});
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  emit(j);
  std::cerr << p1.to_string() << " and " << p2.to_string() << ": "
            << (iso ? "isomorphic" : "not isomorphic");
  if (w) std::cerr << " (q = " << w->q << " witness)";
  std::cerr << "\n";
  return 0;
}

int run_search_et(int n_max, bool long_run, int workers,
                  const std::string& checkpoint) {
  if (n_max > kShortRunLimit && !long_run) {
    std::cerr << "error: --n-max above " << kShortRunLimit
              << " needs --long-run\n";
    return kUsage;
  }
  wh::EtSearchOptions options;
  options.workers = workers;
  options.checkpoint = checkpoint;
  int last_n = 0;
  options.progress = [&](int n, std::int64_t examined) {
    if (n != last_n && n % 10 == 0) {
      std::cerr << "  n = " << n << ", " << examined << " tuples examined\n";
    }
    last_n = n;
  };
  const auto start = std::chrono::steady_clock::now();
  const auto result = wh::search_edge_transitive(n_max, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json j;
  j["n_max"] = n_max;
  j["examined"] = result.examined;
  j["filter_survivors"] = result.filter_survivors;
  j["hits"] = Json::array();
  for (const auto& p : result.hits) j["hits"].push_back(wh::params_json(p));
  emit(j);
  if (result.hits.empty()) {
    std::cerr << "no edge-transitive WH-graphs found (n <= " << n_max << ", "
              << result.examined << " tuples, " << seconds << " s)\n";
    return 0;
  }
  std::cerr << "DISCREPANCY: " << result.hits.size()
            << " edge-transitive tuples found\n";
  return kDiscrepancy;
}

int run_census(int n_max, int workers, const std::string& output,
               const std::string& checkpoint) {
  wh::CensusOptions options;
  options.workers = workers;
  options.output = output;
  options.checkpoint = checkpoint;
  const auto start = std::chrono::steady_clock::now();
  const auto s = wh::vt_census(n_max, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json j;
  j["n_max"] = n_max;
  j["records"] = s.records;
  j["vertex_transitive"] = s.vertex_transitive;
  j["distinct_digests"] = s.distinct_digests;
  j["discrepancies"] = Json::array();
  for (const auto& p : s.discrepancies) j["discrepancies"].push_back(wh::params_json(p));
  j["family2_collisions"] = s.family2_collisions.size();
  emit(j);
  std::cerr << s.records << " records, " << s.vertex_transitive
            << " vertex-transitive, " << s.discrepancies.size()
            << " discrepancies (" << seconds << " s)\n";
  return s.discrepancies.empty() ? 0 : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Woolly Hat graph toolkit"};
  app.require_subcommand(1);

  std::vector<long long> tuple;
  std::string format = "graph6";
  auto* build = app.add_subcommand("build", "emit the graph WH_n(a,b,c,d)");
  build->add_option("tuple", tuple, "n a b c d")->expected(5)->required();
  build->add_option("--format", format)
      ->check(CLI::IsMember({"graph6", "sparse6", "dot", "json"}));

  auto* analyze = app.add_subcommand("analyze", "automorphism orbit report");
  analyze->add_option("tuple", tuple, "n a b c d")->expected(5)->required();

  auto* classify = app.add_subcommand("classify", "vertex-transitivity verdict");
  classify->add_option("tuple", tuple, "n a b c d")->expected(5)->required();

  auto* lr = app.add_subcommand("lr-check", "LR-structure candidate check");
  lr->add_option("tuple", tuple, "n a b c d")->expected(5)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test of two tuples");
  iso->add_option("tuples", tuple, "n a b c d n' a' b' c' d'")
      ->expected(10)
      ->required();

  int n_max = 0;
  int workers = 1;
  bool long_run = false;
  std::string checkpoint;
  std::string output;
  auto* search = app.add_subcommand("search-et", "edge-transitivity search");
  search->add_option("--n-max", n_max)->required()->check(CLI::Range(3, 1000));
  search->add_flag("--long-run", long_run, "allow n-max above 40");
  search->add_option("--workers", workers)->check(CLI::Range(1, 256));
  search->add_option("--checkpoint", checkpoint);

  auto* census = app.add_subcommand("census-vt", "vertex-transitivity census");
  census->add_option("--n-max", n_max)->required()->check(CLI::Range(3, 1000));
  census->add_option("--workers", workers)->check(CLI::Range(1, 256));
  census->add_option("--output", output)->required();
  census->add_option("--checkpoint", checkpoint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return run_build(tuple_at(tuple, 0), format);
    if (*analyze) return run_analyze(tuple_at(tuple, 0));
    if (*classify) return run_classify(tuple_at(tuple, 0));
    if (*lr) return run_lr_check(tuple_at(tuple, 0));
    if (*iso) return run_iso(tuple_at(tuple, 0), tuple_at(tuple, 5));
    if (*search) return run_search_et(n_max, long_run, workers, checkpoint);
    if (*census) return run_census(n_max, workers, output, checkpoint);
  } catch (const wh::WhError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
