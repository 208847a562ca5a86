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

#include "whgraph/named_automorphisms.hpp"

#include <numeric>

#include "whgraph/error.hpp"

namespace wh {
namespace {

bool odd(int x) { return x % 2 != 0; }

}  // namespace

Permutation rho(const WhParams& p) {
  const int n = p.n();
  std::vector<int> images(3 * n);
  for (int i = 0; i < n; ++i) {
    images[vertex_a(i, n)] = vertex_a(i + 1, n);
    images[vertex_b(i, n)] = vertex_b(i + 1, n);
    images[vertex_c(i, n)] = vertex_c(i + 1, n);
  }
  return Permutation(std::move(images));
}

Permutation tau(const WhParams& p) {
  const int n = p.n();
  std::vector<int> images(3 * n);
  for (int i = 0; i < n; ++i) {
    images[vertex_a(i, n)] = vertex_a(-i, n);
    images[vertex_b(i, n)] = vertex_c(-i, n);
    images[vertex_c(i, n)] = vertex_b(-i, n);
  }
  return Permutation(std::move(images));
}

std::optional<std::string> sigma_violation(const WhParams& p) {
  const int n = p.n();
  const int a = p.a(), b = p.b(), c = p.c(), d = p.d();
  if (odd(n)) return "n even";
  // Parity of residues is well defined once n is even.
  if (!odd(a)) return "a odd";
  if (!odd(b)) return "b odd";
  if (!odd(d)) return "d odd";
  if (odd(c)) return "c even";
  if (mod(d, n) != mod(2 * a + b, n)) return "d = 2a + b";
  if (mod(2 * c, n) != mod(3 * a + 3 * b, n)) return "2c = 3a + 3b";
  return std::nullopt;
}

Permutation sigma(const WhParams& p) {
  if (auto clause = sigma_violation(p)) {
    throw WhError(ErrorCode::kHypothesesNotMet,
                  p.to_string() + " fails the sigma hypothesis '" + *clause +
                      "'");
  }
  const int n = p.n();
  const int a = p.a(), b = p.b(), c = p.c(), d = p.d();
  std::vector<int> images(3 * n);
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      images[vertex_a(i, n)] = vertex_b(i, n);
      images[vertex_b(i, n)] = vertex_c(i + c, n);
      images[vertex_c(i, n)] = vertex_a(i, n);
    } else {
      images[vertex_a(i, n)] = vertex_c(i - a + d, n);
      images[vertex_b(i, n)] = vertex_a(i + a + b, n);
      images[vertex_c(i, n)] = vertex_b(i - b + c - d, n);
    }
  }
  return Permutation(std::move(images));
}

WhParams family3_params(int m) {
  if (m < 3 || !odd(m)) {
    throw WhError(ErrorCode::kMNotOddOrTooSmall,
                  "m = " + std::to_string(m) + " must be odd and at least 3");
  }
  return WhParams::validate(4 * m, 2, m - 2, 0, m + 2);
}

Permutation theta(int m) {
  const WhParams p = family3_params(m);
  const int n = p.n();
  const int delta = m % 4;
  std::vector<int> images(3 * n);
  for (int i = 0; i < n; ++i) {
    const int r = i % 4;
    if (r == 0) {
      images[vertex_a(i, n)] = vertex_b(i, n);
      images[vertex_b(i, n)] = vertex_a(i, n);
      images[vertex_c(i, n)] = vertex_c(i, n);
    } else if (r == delta) {
      images[vertex_a(i, n)] = vertex_c(i, n);
      images[vertex_b(i, n)] = vertex_b(i, n);
      images[vertex_c(i, n)] = vertex_a(i, n);
    } else if (r == 2) {
      images[vertex_a(i, n)] = vertex_c(i + m, n);
      images[vertex_b(i, n)] = vertex_a(i + m, n);
      images[vertex_c(i, n)] = vertex_b(i + m, n);
    } else {
      images[vertex_a(i, n)] = vertex_b(i - m, n);
      images[vertex_b(i, n)] = vertex_c(i - m, n);
      images[vertex_c(i, n)] = vertex_a(i - m, n);
    }
  }
  return Permutation(std::move(images));
}

bool is_automorphism(const SimpleGraph& g, const Permutation& pi) {
  if (pi.degree() != g.order()) {
    throw WhError(ErrorCode::kLengthMismatch,
                  "permutation of degree " + std::to_string(pi.degree()) +
                      " on a graph of order " + std::to_string(g.order()));
  }
  for (int u = 0; u < g.order(); ++u) {
    const int pu = pi(u);
    if (g.degree(pu) != g.degree(u)) return false;
    for (int v : g.neighbors(u)) {
      if (u < v && !g.adjacent(pu, pi(v))) return false;
    }
  }
  return true;
}

Permutation multiplier_map(int n, int q) {
  if (std::gcd(mod(q, n), std::int64_t{n}) != 1) {
    throw WhError(ErrorCode::kQNotCoprime,
                  "q = " + std::to_string(q) + " is not coprime to n = " +
                      std::to_string(n));
  }
  std::vector<int> images(3 * n);
  for (int i = 0; i < n; ++i) {
    const auto qi = mod(std::int64_t{q} * i, n);
    images[vertex_a(i, n)] = vertex_a(static_cast<int>(qi), n);
    images[vertex_b(i, n)] = vertex_b(static_cast<int>(qi), n);
    images[vertex_c(i, n)] = vertex_c(static_cast<int>(qi), n);
  }
  return Permutation(std::move(images));
}

}  // namespace wh
