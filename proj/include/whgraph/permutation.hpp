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

#ifndef WHGRAPH_PERMUTATION_HPP_
#define WHGRAPH_PERMUTATION_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace wh {

// Bijection of {0, ..., degree - 1}, stored as its image array.
//
// Products follow the right-action convention used for graph automorphisms:
// (p * q)(x) = q(p(x)), i.e. p is applied first.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;
  // Smallest moved point, or -1 for the identity.
  int first_moved_point() const;
  // Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

}  // namespace wh

#endif  // WHGRAPH_PERMUTATION_HPP_
