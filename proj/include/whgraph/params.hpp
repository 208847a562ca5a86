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

#ifndef WHGRAPH_PARAMS_HPP_
#define WHGRAPH_PARAMS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wh {

// Residue of x modulo n in [0, n).
constexpr std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Units of Z_n in ascending order.
std::vector<int> units_mod(int n);

// The parameter tuple (n; a, b, c, d) of a Woolly Hat graph. Instances only
// exist in validated form: residues reduced to [0, n), 2a != 0, b, c, d
// pairwise distinct and gcd(n, a, b, c, d) = 1.
class WhParams {
 public:
  // Reduces the residues modulo n and checks the construction constraints in
  // the fixed order NTooSmall, DegenerateA, RepeatedBCD, Disconnected.
  // Throws WhError naming the first violated clause.
  static WhParams validate(std::int64_t n, std::int64_t a, std::int64_t b,
                           std::int64_t c, std::int64_t d);

  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int d() const { return d_; }
  // (b, c, d) in role order.
  std::array<int, 3> bcd() const { return {b_, c_, d_}; }

  // "WH_n(a,b,c,d)".
  std::string to_string() const;

  friend auto operator<=>(const WhParams&, const WhParams&) = default;
  friend bool operator==(const WhParams&, const WhParams&) = default;

 private:
  WhParams(int n, int a, int b, int c, int d)
      : n_(n), a_(a), b_(b), c_(c), d_(d) {}

  int n_;
  int a_;
  int b_;
  int c_;
  int d_;
};

// Non-throwing validity test with the same rules as WhParams::validate.
bool is_valid_tuple(std::int64_t n, std::int64_t a, std::int64_t b,
                    std::int64_t c, std::int64_t d);

// Tuple of the graph obtained by relabeling X_i -> X_{qi}. Requires
// gcd(q, n) = 1, otherwise throws WhError(kQNotCoprime).
WhParams multiplier_image(const WhParams& p, std::int64_t q);

// All tuples describing the identical labeled graph: a -> +-a combined with
// the six role permutations of (b, c, d). Sorted and deduplicated.
std::vector<WhParams> param_symmetries(const WhParams& p);

// Role permutations of (b, c, d) in lexicographic order. Entry k of a
// permutation names which input role is placed in output role k.
inline constexpr std::array<std::array<int, 3>, 6> kRolePermutations = {{
    {0, 1, 2},
    {0, 2, 1},
    {1, 0, 2},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
}};

// Applies an optional sign flip of a, a multiplier q (assumed coprime to n)
// and a role permutation. This is the full group of parameter-level
// transformations that preserve the isomorphism type.
WhParams transform_params(const WhParams& p, int q, bool negate_a,
                          const std::array<int, 3>& roles);

enum class VertexClass : std::uint8_t { kA = 0, kB = 1, kC = 2 };

char vertex_class_letter(VertexClass cls);

// Structured vertex name. The linear id is rank(class) * n + index.
struct VertexId {
  VertexClass cls;
  int index;

  int linear(int n) const { return static_cast<int>(cls) * n + index; }
  static VertexId from_linear(int id, int n) {
    return {static_cast<VertexClass>(id / n), id % n};
  }
  // "A0", "B3", ...
  std::string label() const;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

inline int vertex_a(int i, int n) { return static_cast<int>(mod(i, n)); }
inline int vertex_b(int i, int n) { return n + static_cast<int>(mod(i, n)); }
inline int vertex_c(int i, int n) {
  return 2 * n + static_cast<int>(mod(i, n));
}

}  // namespace wh

#endif  // WHGRAPH_PARAMS_HPP_
