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

#include "whgraph/permutation.hpp"

#include <stdexcept>
#include <utility>

namespace wh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) {
      throw std::invalid_argument("Permutation: image array is not a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Permutation result = identity(degree());
  while (e != 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const { return first_moved_point() < 0; }

int Permutation::first_moved_point() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (x != i) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("Permutation: degree mismatch in product");
  }
  std::vector<int> images(p.images_.size());
  for (int i = 0; i < p.degree(); ++i) images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace wh
