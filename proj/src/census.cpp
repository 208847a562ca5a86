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


#include "whgraph/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "whgraph/aut_engine.hpp"
#include "whgraph/error.hpp"
#include "whgraph/json_io.hpp"
#include "whgraph/perm_group.hpp"

namespace wh {

namespace {

constexpr std::size_t kChunk = 1000;

std::array<int, 3> sorted_multiple(const WhParams& p, int q) {
  const int n = p.n();
  std::array<int, 3> t = {static_cast<int>(mod(std::int64_t{q} * p.b(), n)),
                          static_cast<int>(mod(std::int64_t{q} * p.c(), n)),
                          static_cast<int>(mod(std::int64_t{q} * p.d(), n))};
  std::sort(t.begin(), t.end());
  return t;
}

// Units q with qa = a or qa = -a: the only multipliers that can keep a
// fixed (after a possible sign change).
std::vector<int> stabilizing_units(int n, int a) {
  std::vector<int> out;
  for (int q : units_mod(n)) {
    const auto qa = mod(std::int64_t{q} * a, n);
    if (qa == a || qa == mod(-a, n)) out.push_back(q);
  }
  return out;
}

bool is_rep_given(const WhParams& p, const std::vector<int>& units) {
  const std::array<int, 3> self = p.bcd();
  for (int q : units) {
    if (sorted_multiple(p, q) < self) return false;
  }
  return true;
}

template <typename R, typename F>
std::vector<R> parallel_map(const std::vector<WhParams>& items, int workers,
                            F&& f) {
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(f(items[i]));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::optional<Json> load_checkpoint(const std::string& path,
                                    std::string_view command) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw WhError(ErrorCode::kParse, "checkpoint " + path + ": " + e.what());
  }
  if (j.value("command", "") != command) {
    throw WhError(ErrorCode::kParse,
                  "checkpoint " + path + " belongs to another command");
  }
  return j;
}

void save_checkpoint(const std::string& path, const Json& j) {
  if (path.empty()) return;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw WhError(ErrorCode::kIo, "cannot write " + tmp);
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

// Tuples of one n not yet covered by the checkpoint's completed marker.
std::vector<WhParams> pending(int n, Reduction level, const Json& completed) {
  std::vector<WhParams> items = enumerate_params(n, level);
  const std::string key = std::to_string(n);
  if (completed.contains(key)) {
    const WhParams last = params_from_json(completed[key]);
    std::erase_if(items, [&](const WhParams& p) { return p <= last; });
  }
  return items;
}

}  // namespace

std::string_view reduction_name(Reduction r) {
  switch (r) {
    case Reduction::kNone: return "none";
    case Reduction::kIso: return "iso";
    case Reduction::kEt: return "et";
  }
  return "?";
}

bool is_iso_representative(const WhParams& p) {
  const int n = p.n();
  if (!(p.b() < p.c() && p.c() < p.d())) return false;
  for (int q : units_mod(n)) {
    for (int sign : {1, -1}) {
      if (mod(std::int64_t{q} * sign * p.a(), n) < p.a()) return false;
    }
  }
  return is_rep_given(p, stabilizing_units(n, p.a()));
}

void for_each_params(int n, Reduction level,
                     const std::function<bool(const WhParams&)>& visit) {
  if (n < 3) return;
  if (level == Reduction::kNone) {
    for (int a = 1; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (!is_valid_tuple(n, a, b, c, d)) continue;
            if (!visit(WhParams::validate(n, a, b, c, d))) return;
          }
    return;
  }
  for (int a = 1; a < n; ++a) {
    if (n % a != 0 || (2 * a) % n == 0) continue;
    const std::vector<int> units = stabilizing_units(n, a);
    const int b_start = level == Reduction::kEt ? 1 : 0;
    for (int b = b_start; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (!is_valid_tuple(n, a, b, c, d)) continue;
          const WhParams p = WhParams::validate(n, a, b, c, d);
          if (!is_rep_given(p, units)) continue;
          if (!visit(p)) return;
        }
  }
}

std::vector<WhParams> enumerate_params(int n, Reduction level) {
  std::vector<WhParams> out;
  for_each_params(n, level, [&](const WhParams& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

bool passes_cycle_filter(const WhGraph& g) {
  const auto reps = g.kind_representatives();
  for (int length : {4, 6}) {
    const auto first =
        count_cycles_through_edge(g.graph(), reps[0].first, reps[0].second, length);
    for (std::size_t k = 1; k < reps.size(); ++k) {
      if (count_cycles_through_edge(g.graph(), reps[k].first, reps[k].second,
                                    length) != first) {
        return false;
      }
    }
  }
  return true;
}

bool is_edge_transitive(const WhGraph& g) {
  return orbits(automorphism_generators(g), g.graph(), Action::kEdges).count() == 1;
}

EtSearchResult search_edge_transitive(int n_max, const EtSearchOptions& options) {
  EtSearchResult result;
  Json completed = Json::object();
  if (auto cp = load_checkpoint(options.checkpoint, "search-et")) {
    completed = (*cp)["completed"];
    result.examined = (*cp)["examined"].get<std::int64_t>();
    result.filter_survivors = (*cp)["filter_survivors"].get<std::int64_t>();
    for (const auto& h : (*cp)["hits"]) result.hits.push_back(params_from_json(h));
  }
  struct Outcome {
    bool survivor;
    bool hit;
  };
  for (int n = 3; n <= n_max; ++n) {
    const std::vector<WhParams> items = pending(n, Reduction::kEt, completed);
    for (std::size_t start = 0; start < items.size(); start += kChunk) {
      const std::vector<WhParams> chunk(
          items.begin() + start,
          items.begin() + std::min(items.size(), start + kChunk));
      const auto outcomes = parallel_map<Outcome>(
          chunk, std::max(1, options.workers), [](const WhParams& p) {
            const WhGraph g = build_graph(p);
            if (!passes_cycle_filter(g)) return Outcome{false, false};
            return Outcome{true, is_edge_transitive(g)};
          });
      for (std::size_t i = 0; i < chunk.size(); ++i) {
        result.filter_survivors += outcomes[i].survivor;
        if (outcomes[i].hit) result.hits.push_back(chunk[i]);
      }
      result.examined += static_cast<std::int64_t>(chunk.size());
      completed[std::to_string(n)] = params_json(chunk.back());
      if (!options.checkpoint.empty()) {
        Json cp;
        cp["command"] = "search-et";
        cp["n_max"] = n_max;
        cp["completed"] = completed;
        cp["examined"] = result.examined;
        cp["filter_survivors"] = result.filter_survivors;
        cp["hits"] = Json::array();
        for (const auto& h : result.hits) cp["hits"].push_back(params_json(h));
        save_checkpoint(options.checkpoint, cp);
      }
      if (options.progress) options.progress(n, result.examined);
    }
  }
  return result;
}

CensusRecord census_record(const WhParams& p) {
  const WhGraph g = build_graph(p);
  SymmetryResult sym = analyze_symmetry(ColoredGraph(g));
  CensusRecord r{p, {}, {}, {}, {}, false, std::nullopt};
  r.digest = sym.canonical.digest;
  r.graph6 = sym.canonical.graph6;
  r.report = transitivity_report(g, sym.generators);
  r.classification = classify(p);
  r.vt_ground_truth = r.report.is_vertex_transitive;
  if (r.vt_ground_truth) r.lr = lr_candidate_check(g, sym.generators);
  return r;
}

std::string census_record_json(const CensusRecord& r) {
  Json j;
  j["n"] = r.params.n();
  j["a"] = r.params.a();
  j["b"] = r.params.b();
  j["c"] = r.params.c();
  j["d"] = r.params.d();
  j["digest"] = r.digest;
  const Json report = transitivity_json(r.report);
  for (const auto& [key, value] : report.items()) j[key] = value;
  const Json verdict = classification_json(r.classification);
  for (const auto& [key, value] : verdict.items()) j[key] = value;
  j["vt_ground_truth"] = r.vt_ground_truth;
  j["lr"] = r.lr ? lr_json(*r.lr) : Json(nullptr);
  return j.dump();
}

CensusSummary vt_census(int n_max, const CensusOptions& options) {
  if (options.output.empty()) {
    throw WhError(ErrorCode::kIo, "census needs an output path");
  }
  Json completed = Json::object();
  std::int64_t records = 0;
  if (auto cp = load_checkpoint(options.checkpoint, "census-vt")) {
    completed = (*cp)["completed"];
    records = (*cp)["records"].get<std::int64_t>();
    // Drop anything written after the last checkpoint.
    std::ifstream in(options.output);
    std::vector<std::string> kept;
    std::string line;
    while (static_cast<std::int64_t>(kept.size()) < records &&
           std::getline(in, line)) {
      kept.push_back(line);
    }
    in.close();
    std::ofstream out(options.output, std::ios::trunc);
    for (const auto& l : kept) out << l << '\n';
  } else {
    std::ofstream out(options.output, std::ios::trunc);
    if (!out) throw WhError(ErrorCode::kIo, "cannot write " + options.output);
  }

  std::unordered_map<std::string, std::string> graph6_of;
  std::ofstream out(options.output, std::ios::app);
  if (!out) throw WhError(ErrorCode::kIo, "cannot write " + options.output);
  for (int n = 3; n <= n_max; ++n) {
    const std::vector<WhParams> items = pending(n, Reduction::kIso, completed);
    for (std::size_t start = 0; start < items.size(); start += kChunk) {
      const std::vector<WhParams> chunk(
          items.begin() + start,
          items.begin() + std::min(items.size(), start + kChunk));
      const auto recs = parallel_map<CensusRecord>(
          chunk, std::max(1, options.workers), census_record);
      for (const auto& r : recs) {
        out << census_record_json(r) << '\n';
        graph6_of.emplace(r.digest, r.graph6);
      }
      out.flush();
      records += static_cast<std::int64_t>(recs.size());
      completed[std::to_string(n)] = params_json(chunk.back());
      if (!options.checkpoint.empty()) {
        Json cp;
        cp["command"] = "census-vt";
        cp["n_max"] = n_max;
        cp["output"] = options.output;
        cp["completed"] = completed;
        cp["records"] = records;
        save_checkpoint(options.checkpoint, cp);
      }
      if (options.progress) options.progress(n, records);
    }
  }
  out.close();

  // Summaries are rebuilt from the file so that resumed runs see every line.
  CensusSummary summary;
  std::ifstream in(options.output);
  std::ofstream g6(options.output + ".g6", std::ios::trunc);
  std::vector<std::string> digest_order;
  std::map<std::string, std::vector<WhParams>> family2;
  std::unordered_map<std::string, bool> seen;
  std::string line;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line);
    const WhParams p = WhParams::validate(j["n"], j["a"], j["b"], j["c"], j["d"]);
    ++summary.records;
    const bool truth = j["vt_ground_truth"].get<bool>();
    summary.vertex_transitive += truth;
    const bool classified = j["verdict"].at(0).get<std::string>() != "NotVT";
    if (classified != truth) summary.discrepancies.push_back(p);
    const std::string digest = j["digest"];
    if (!seen[digest]) {
      seen[digest] = true;
      digest_order.push_back(digest);
      auto it = graph6_of.find(digest);
      const std::string graph6 = it != graph6_of.end()
                                     ? it->second
                                     : canonical_form(build_graph(p)).graph6;
      g6 << digest << ' ' << graph6 << '\n';
    }
    for (const auto& v : j["verdict"]) {
      if (v == "Family2") family2[digest].push_back(p);
    }
  }
  summary.distinct_digests = static_cast<std::int64_t>(digest_order.size());
  std::ofstream coll(options.output + ".collisions.jsonl", std::ios::trunc);
  for (const auto& digest : digest_order) {
    auto it = family2.find(digest);
    if (it == family2.end() || it->second.size() < 2) continue;
    summary.family2_collisions.emplace_back(digest, it->second);
    Json j;
    j["digest"] = digest;
    j["members"] = Json::array();
    for (const auto& p : it->second) j["members"].push_back(params_json(p));
    coll << j.dump() << '\n';
  }
  return summary;
}

}  // namespace wh
