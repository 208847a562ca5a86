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

#include "whgraph/params.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <set>

#include "whgraph/error.hpp"

namespace wh {

std::vector<int> units_mod(int n) {
  std::vector<int> out;
  for (int q = 1; q < n; ++q) {
    if (std::gcd(q, n) == 1) out.push_back(q);
  }
  if (n == 1) out.push_back(0);
  return out;
}

namespace {

// Returns the first violated clause, or nothing.
std::optional<std::pair<ErrorCode, std::string>> check_tuple(
    std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
    std::int64_t d) {
  if (n < 3) {
    return {{ErrorCode::kNTooSmall,
             "n = " + std::to_string(n) + " but the construction needs n >= 3"}};
  }
  a = mod(a, n);
  b = mod(b, n);
  c = mod(c, n);
  d = mod(d, n);
  if (mod(2 * a, n) == 0) {
    return {{ErrorCode::kDegenerateA,
             "2a = 0 in Z_" + std::to_string(n) + " (a = " + std::to_string(a) +
                 "); the construction needs 2a != 0"}};
  }
  if (b == c || b == d || c == d) {
    return {{ErrorCode::kRepeatedBCD,
             "b, c, d = " + std::to_string(b) + ", " + std::to_string(c) +
                 ", " + std::to_string(d) +
                 " are not pairwise distinct in Z_" + std::to_string(n)}};
  }
  const std::int64_t g = std::gcd(std::gcd(std::gcd(n, a), std::gcd(b, c)), d);
  if (g != 1) {
    return {{ErrorCode::kDisconnected,
             "n, a, b, c, d share the divisor " + std::to_string(g) +
                 "; the construction needs no common prime divisor"}};
  }
  return std::nullopt;
}

}  // namespace

WhParams WhParams::validate(std::int64_t n, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t d) {
  if (auto failure = check_tuple(n, a, b, c, d)) {
    throw WhError(failure->first, failure->second);
  }
  return WhParams(static_cast<int>(n), static_cast<int>(mod(a, n)),
                  static_cast<int>(mod(b, n)), static_cast<int>(mod(c, n)),
                  static_cast<int>(mod(d, n)));
}

bool is_valid_tuple(std::int64_t n, std::int64_t a, std::int64_t b,
                    std::int64_t c, std::int64_t d) {
  return !check_tuple(n, a, b, c, d).has_value();
}

std::string WhParams::to_string() const {
  return "WH_" + std::to_string(n_) + "(" + std::to_string(a_) + "," +
         std::to_string(b_) + "," + std::to_string(c_) + "," +
         std::to_string(d_) + ")";
}

WhParams multiplier_image(const WhParams& p, std::int64_t q) {
  const std::int64_t n = p.n();
  if (std::gcd(mod(q, n), n) != 1) {
    throw WhError(ErrorCode::kQNotCoprime,
                  "q = " + std::to_string(q) + " is not coprime to n = " +
                      std::to_string(n));
  }
  return WhParams::validate(n, q * p.a(), q * p.b(), q * p.c(), q * p.d());
}

WhParams transform_params(const WhParams& p, int q, bool negate_a,
                          const std::array<int, 3>& roles) {
  const std::int64_t n = p.n();
  const std::array<int, 3> src = p.bcd();
  const std::int64_t a = negate_a ? -std::int64_t{p.a()} : p.a();
  return WhParams::validate(n, q * a, std::int64_t{q} * src[roles[0]],
                            std::int64_t{q} * src[roles[1]],
                            std::int64_t{q} * src[roles[2]]);
}

std::vector<WhParams> param_symmetries(const WhParams& p) {
  std::set<WhParams> out;
  for (const auto& roles : kRolePermutations) {
    for (bool negate : {false, true}) {
      out.insert(transform_params(p, 1, negate, roles));
    }
  }
  return {out.begin(), out.end()};
}

char vertex_class_letter(VertexClass cls) {
  switch (cls) {
    case VertexClass::kA: return 'A';
    case VertexClass::kB: return 'B';
    case VertexClass::kC: return 'C';
  }
  return '?';
}

std::string VertexId::label() const {
  return std::string(1, vertex_class_letter(cls)) + std::to_string(index);
}

}  // namespace wh
