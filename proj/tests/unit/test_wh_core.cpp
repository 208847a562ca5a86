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


#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "whgraph/error.hpp"
#include "whgraph/params.hpp"
#include "whgraph/wh_graph.hpp"

namespace wh {
namespace {

int brute_girth(const oracle::Matrix& m) {
  for (int len = 3; len <= m.order; ++len) {
    if (!oracle::cycles_of_length(m, len).empty()) return len;
  }
  return 0;
}

ErrorCode code_of(int n, int a, int b, int c, int d) {
  try {
    WhParams::validate(n, a, b, c, d);
  } catch (const WhError& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ErrorCode::kParse;
}

TEST_CASE("validate accepts and rejects per construction clauses") {
  const auto p = WhParams::validate(4, 1, 0, 1, 3);
  CHECK(p.to_string() == "WH_4(1,0,1,3)");
  CHECK(code_of(2, 1, 0, 1, 1) == ErrorCode::kNTooSmall);
  CHECK(code_of(4, 2, 0, 1, 3) == ErrorCode::kDegenerateA);
  // b, c, d distinct but everything even
  CHECK(code_of(6, 2, 0, 2, 4) == ErrorCode::kDisconnected);
  CHECK(code_of(6, 2, 0, 4, 2) == ErrorCode::kDisconnected);
  // repeated offsets win over the common factor
  CHECK(code_of(6, 2, 0, 2, 2) == ErrorCode::kRepeatedBCD);
  CHECK(code_of(6, 2, 4, 0, 10) == ErrorCode::kRepeatedBCD);
  CHECK(code_of(6, 1, 2, 2, 4) == ErrorCode::kRepeatedBCD);
  // degenerate a wins over repeats
  CHECK(code_of(6, 3, 2, 2, 4) == ErrorCode::kDegenerateA);
  // residues are reduced
  CHECK(WhParams::validate(4, -1, 4, 5, 7) == WhParams::validate(4, 3, 0, 1, 3));
}

TEST_CASE("valid tuple counts match a direct filter") {
  for (int n = 3; n <= 9; ++n) {
    int count = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) count += is_valid_tuple(n, a, b, c, d);
    CHECK(count == oracle::count_valid_tuples(n));
  }
}

TEST_CASE("multiplier images and parameter symmetries") {
  const auto p = WhParams::validate(4, 1, 3, 0, 1);
  CHECK(multiplier_image(p, 3) == WhParams::validate(4, 3, 1, 0, 3));
  CHECK(multiplier_image(p, 1) == p);
  CHECK_THROWS_AS(multiplier_image(p, 2), WhError);

  const auto q = WhParams::validate(10, 3, 1, 4, 7);
  for (int q1 : units_mod(10)) {
    for (int q2 : units_mod(10)) {
      CHECK(multiplier_image(multiplier_image(q, q1), q2) ==
            multiplier_image(q, q1 * q2));
    }
  }

  const auto r = WhParams::validate(4, 1, 0, 1, 3);
  const auto syms = param_symmetries(r);
  CHECK(syms.size() <= 12);
  CHECK(std::find(syms.begin(), syms.end(), WhParams::validate(4, 3, 0, 1, 3)) !=
        syms.end());
  CHECK(std::find(syms.begin(), syms.end(), WhParams::validate(4, 1, 3, 1, 0)) !=
        syms.end());
}

TEST_CASE("parameter symmetries give the identical labeled graph") {
  for (int n = 3; n <= 8; ++n) {
    for (int a = 1; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (!is_valid_tuple(n, a, b, c, d)) continue;
            const auto p = WhParams::validate(n, a, b, c, d);
            const auto edges = build_graph(p).graph().edges();
            for (const auto& s : param_symmetries(p)) {
              REQUIRE(build_graph(s).graph().edges() == edges);
            }
          }
  }
}

TEST_CASE("build_graph neighborhoods") {
  const auto g = build_graph(WhParams::validate(4, 1, 0, 1, 3));
  CHECK(g.order() == 12);
  CHECK(g.graph().edge_count() == 24);
  const int b0 = vertex_b(0, 4);
  std::set<int> nb(g.neighbors(b0).begin(), g.neighbors(b0).end());
  CHECK(nb == std::set<int>{vertex_a(0, 4), vertex_c(0, 4), vertex_c(1, 4),
                            vertex_c(3, 4)});

  const auto h = build_graph(WhParams::validate(12, 2, 1, 0, 5));
  std::set<int> na(h.neighbors(0).begin(), h.neighbors(0).end());
  CHECK(na == std::set<int>{vertex_a(2, 12), vertex_a(10, 12), vertex_b(0, 12),
                            vertex_c(0, 12)});
  CHECK(h.vertex(vertex_c(5, 12)).label() == "C5");
}

TEST_CASE("every valid graph matches the matrix construction, n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    for (int a = 1; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            if (!is_valid_tuple(n, a, b, c, d)) continue;
            const auto g = build_graph(WhParams::validate(n, a, b, c, d));
            const auto m = oracle::wh_matrix(n, a, b, c, d);
            REQUIRE(oracle::to_matrix(g.graph()).adj == m.adj);
            REQUIRE(oracle::connected(m));
            for (int v = 0; v < g.order(); ++v) REQUIRE(g.graph().degree(v) == 4);
            // triangles: A_iB_iC_i when an offset is 0, A-cycles when 3a = 0
            const bool triangle = b == 0 || c == 0 || d == 0 || (3 * a) % n == 0;
            REQUIRE((girth(g) == 3) == triangle);
            if (n <= 6) REQUIRE(girth(g) == brute_girth(m));
          }
  }
}

TEST_CASE("edge kinds partition the edges into six rho-classes of size n") {
  const auto g = build_graph(WhParams::validate(8, 1, 3, 2, 5));
  int counts[6] = {};
  for (const auto& e : g.typed_edges()) ++counts[static_cast<int>(e.kind)];
  for (int k : counts) CHECK(k == 8);
  CHECK(g.kind(vertex_a(0, 8), vertex_a(7, 8)) == EdgeKind::kAEdge);
  CHECK(g.kind(vertex_c(5, 8), vertex_b(0, 8)) == EdgeKind::kDEdge);
  CHECK(edge_kind_name(EdgeKind::kLeft) == "left");
}

TEST_CASE("girth of WH_8(1,3,2,5) matches brute-force cycle scan") {
  const auto m = oracle::wh_matrix(8, 1, 3, 2, 5);
  const int expected = brute_girth(m);
  CHECK(expected > 3);
  CHECK(girth(build_graph(WhParams::validate(8, 1, 3, 2, 5))) == expected);
}

TEST_CASE("canonical six-cycles") {
  const auto g = build_graph(WhParams::validate(4, 1, 0, 1, 3));
  const auto cycles = canonical_six_cycles(g);
  REQUIRE(cycles.size() == 4);
  const int n = 4;
  CHECK(cycles[0] == Cycle{vertex_b(0, n), vertex_c(0, n), vertex_b(3, n),
                           vertex_c(2, n), vertex_b(2, n), vertex_c(3, n)});
  const auto h = build_graph(WhParams::validate(12, 2, 1, 0, 5));
  CHECK(canonical_six_cycles(h)[0] ==
        Cycle{vertex_b(0, 12), vertex_c(1, 12), vertex_b(1, 12),
              vertex_c(6, 12), vertex_b(5, 12), vertex_c(5, 12)});

  for (int n = 3; n <= 12; ++n) {
    for (int a = 1; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            if (!is_valid_tuple(n, a, b, c, d)) continue;
            const auto w = build_graph(WhParams::validate(n, a, b, c, d));
            const auto cs = canonical_six_cycles(w);
            REQUIRE(cs.size() == static_cast<std::size_t>(n));
            for (const auto& cyc : cs) {
              REQUIRE(std::set<int>(cyc.begin(), cyc.end()).size() == 6);
              for (int i = 0; i < 3; ++i) {
                REQUIRE(w.adjacent(cyc[i], cyc[i + 1]));
                REQUIRE(w.adjacent(cyc[i + 3], cyc[(i + 4) % 6]));
                REQUIRE(w.kind(cyc[i], cyc[i + 1]) ==
                        w.kind(cyc[i + 3], cyc[(i + 4) % 6]));
              }
            }
          }
  }
}

TEST_CASE("six-cycles through a 2-arc agree with exhaustive enumeration") {
  auto check = [](int n, int a, int b, int c, int d, std::array<int, 3> arc) {
    const auto g = build_graph(WhParams::validate(n, a, b, c, d));
    const auto found = six_cycles_through_two_arc(g, arc);
    const auto all = oracle::cycles_of_length(oracle::wh_matrix(n, a, b, c, d), 6);
    std::size_t expected = 0;
    for (const auto& cyc : all) {
      for (int i = 0; i < 6; ++i) {
        const int x = cyc[i], y = cyc[(i + 1) % 6], z = cyc[(i + 2) % 6];
        if (y == arc[1] && ((x == arc[0] && z == arc[2]) ||
                            (x == arc[2] && z == arc[0]))) {
          ++expected;
        }
      }
    }
    CHECK(found.size() == expected);
    return found;
  };
  const auto b0 = vertex_b(0, 8), a0 = vertex_a(0, 8), c0 = vertex_c(0, 8);
  const auto found = check(8, 1, 3, 2, 5, {b0, a0, c0});
  // shape (C_x, B_0, A_0, C_0, B_{-y}, A_{-y}) with x + y = 0 and x, y in {b,c,d}
  int shape = 0;
  for (int x : {3, 2, 5})
    for (int y : {3, 2, 5})
      if ((x + y) % 8 == 0) ++shape;
  CHECK(found.size() == static_cast<std::size_t>(shape));
  CHECK(shape == 2);

  const auto w = check(4, 1, 0, 1, 3, {vertex_b(0, 4), vertex_c(0, 4), vertex_b(3, 4)});
  const auto canon = canonical_six_cycles(build_graph(WhParams::validate(4, 1, 0, 1, 3)))[0];
  bool contains = false;
  for (const auto& cyc : w) {
    contains |= std::set<int>(cyc.begin(), cyc.end()) ==
                std::set<int>(canon.begin(), canon.end());
  }
  CHECK(contains);
  check(6, 1, 1, 2, 3, {vertex_a(1, 6), vertex_a(0, 6), vertex_b(0, 6)});
  check(5, 1, 0, 1, 2, {vertex_c(2, 5), vertex_b(1, 5), vertex_c(1, 5)});

  CHECK_THROWS_AS(six_cycles_through_two_arc(
                      build_graph(WhParams::validate(8, 1, 3, 2, 5)),
                      {vertex_b(0, 8), vertex_b(1, 8), a0}),
                  WhError);
}

TEST_CASE("quotients by rho powers") {
  const auto p = WhParams::validate(4, 1, 0, 1, 3);
  const auto g = build_graph(p);
  const auto full = quotient_by_rho_power(g, 4);
  CHECK(full.graph == g.graph());
  CHECK(quotient_as_wh(full, p) == p);

  // Direct orbit contraction: class * k + index mod k.
  for (int k : {1, 2}) {
    const auto q = quotient_by_rho_power(g, k);
    std::set<Edge> expected;
    for (const auto& [u, v] : g.graph().edges()) {
      const int x = (u / 4) * k + (u % 4) % k, y = (v / 4) * k + (v % 4) % k;
      if (x != y) expected.insert({std::min(x, y), std::max(x, y)});
    }
    const auto got = q.graph.edges();
    CHECK(std::set<Edge>(got.begin(), got.end()) == expected);
    CHECK(q.graph.order() == 3 * k);
  }
  const auto q2 = quotient_by_rho_power(g, 2);
  const auto nb = q2.graph.neighbors(2);  // B'_0
  CHECK(std::set<int>(nb.begin(), nb.end()) == std::set<int>{0, 4, 5});
  CHECK(quotient_by_rho_power(g, 1).graph.edge_count() == 3);
  CHECK_THROWS_AS(quotient_by_rho_power(g, 3), WhError);
}

}  // namespace
}  // namespace wh
