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


#ifndef WHGRAPH_CENSUS_HPP_
#define WHGRAPH_CENSUS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whgraph/classification.hpp"
#include "whgraph/params.hpp"
#include "whgraph/symmetry.hpp"

namespace wh {

enum class Reduction { kNone, kIso, kEt };

std::string_view reduction_name(Reduction r);

// Valid tuples for one n in lexicographic order.
//   kNone: every valid tuple (a, b, c, d) with residues in [0, n).
//   kIso:  the lexicographically least member of each class under units q,
//          the sign of a and role permutations of b, c, d; such a member has
//          a | n and b < c < d.
//   kEt:   kIso without tuples having 0 among b, c, d.
std::vector<WhParams> enumerate_params(int n, Reduction level);

// Invokes `visit` for each tuple of enumerate_params(n, level), without
// materializing the list. Stops early when `visit` returns false.
void for_each_params(int n, Reduction level,
                     const std::function<bool(const WhParams&)>& visit);

// True when the lexicographically least image of p under the reduction
// group is p itself.
bool is_iso_representative(const WhParams& p);

// Cycle counts through the six edge-kind representatives must agree for
// an edge-transitive graph. Returns false when they disagree.
bool passes_cycle_filter(const WhGraph& g);

// Full check: Aut(g) has one orbit on edges.
bool is_edge_transitive(const WhGraph& g);

struct EtSearchOptions {
  int workers = 1;
  // Checkpoint path; empty disables checkpointing and resuming.
  std::string checkpoint;
  // Progress report, called from the coordinating thread after every chunk.
  std::function<void(int n, std::int64_t examined)> progress;
};

struct EtSearchResult {
  std::vector<WhParams> hits;
  std::int64_t examined = 0;
  std::int64_t filter_survivors = 0;
};

// All edge-transitive tuples with 3 <= n <= n_max (iso representatives
// with nonzero offsets).
EtSearchResult search_edge_transitive(int n_max,
                                      const EtSearchOptions& options = {});

struct CensusRecord {
  WhParams params;
  std::string digest;
  std::string graph6;
  TransitivityReport report;
  VtClassification classification;
  bool vt_ground_truth = false;
  std::optional<LrCheck> lr;
};

// Computes everything a census line carries for one tuple.
CensusRecord census_record(const WhParams& p);

// One JSON object per line, fixed key order, no timing information.
std::string census_record_json(const CensusRecord& r);

struct CensusOptions {
  int workers = 1;
  std::string output;      // JSONL; sidecars are output + ".g6" and
                           // output + ".collisions.jsonl"
  std::string checkpoint;  // empty disables
  std::function<void(int n, std::int64_t done)> progress;
};

struct CensusSummary {
  std::int64_t records = 0;
  std::int64_t vertex_transitive = 0;
  std::int64_t distinct_digests = 0;
  std::vector<WhParams> discrepancies;
  // Family-(2) members sharing a canonical digest, grouped by digest.
  std::vector<std::pair<std::string, std::vector<WhParams>>> family2_collisions;
};

// Runs the census over iso representatives for 3 <= n <= n_max. Records are
// written in lexicographic tuple order regardless of the worker count.
CensusSummary vt_census(int n_max, const CensusOptions& options);

}  // namespace wh

#endif  // WHGRAPH_CENSUS_HPP_
