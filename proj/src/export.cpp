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

#include "whgraph/export.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "whgraph/error.hpp"

namespace wh {
namespace {

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

// Packs bits six at a time, most significant first.
class BitWriter {
 public:
  void put(bool bit) {
    acc_ = static_cast<std::uint8_t>((acc_ << 1) | (bit ? 1 : 0));
    if (++count_ == 6) flush_full();
  }
  void put_bits(std::uint32_t value, int width) {
    for (int i = width - 1; i >= 0; --i) put((value >> i) & 1u);
  }
  int pending() const { return count_; }
  std::string finish(bool pad_with_ones) {
    while (count_ != 0) put(pad_with_ones);
    return std::move(out_);
  }

 private:
  void flush_full() {
    out_.push_back(static_cast<char>(acc_ + 63));
    acc_ = 0;
    count_ = 0;
  }
  std::string out_;
  std::uint8_t acc_ = 0;
  int count_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::string_view data) : data_(data) {}
  bool done() const { return pos_ >= data_.size() * 6; }
  std::size_t remaining() const { return data_.size() * 6 - pos_; }
  bool get() {
    const std::size_t byte = pos_ / 6;
    const int bit = 5 - static_cast<int>(pos_ % 6);
    ++pos_;
    const int value = static_cast<unsigned char>(data_[byte]) - 63;
    if (value < 0 || value > 63) {
      throw WhError(ErrorCode::kParse, "byte outside the printable range");
    }
    return (value >> bit) & 1;
  }
  std::uint32_t get_bits(int width) {
    std::uint32_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (get() ? 1u : 0u);
    return v;
  }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

int read_size(std::string_view& text) {
  const auto take = [&text]() {
    if (text.empty()) throw WhError(ErrorCode::kParse, "truncated size");
    const int v = static_cast<unsigned char>(text.front()) - 63;
    text.remove_prefix(1);
    return v;
  };
  int first = take();
  if (first < 63) return first;
  int width = 3;
  if (!text.empty() && text.front() == 126) {
    text.remove_prefix(1);
    width = 6;
  }
  int n = 0;
  for (int i = 0; i < width; ++i) n = (n << 6) | take();
  return n;
}

int bits_for(int n) {
  int k = 1;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  append_size(out, g.order());
  BitWriter bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits.put(g.adjacent(i, j));
  }
  out += bits.finish(false);
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  const int n = read_size(text);
  BitReader bits(text);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.done()) throw WhError(ErrorCode::kParse, "truncated graph6");
      if (bits.get()) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

std::string to_sparse6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out(1, ':');
  append_size(out, n);
  const int k = bits_for(n);
  std::vector<Edge> edges;  // (larger, smaller)
  for (const auto& [u, v] : g.edges()) edges.emplace_back(v, u);
  std::sort(edges.begin(), edges.end());
  BitWriter bits;
  int current = 0;
  for (const auto& [v, u] : edges) {
    if (v == current) {
      bits.put(false);
      bits.put_bits(u, k);
    } else if (v == current + 1) {
      current = v;
      bits.put(true);
      bits.put_bits(u, k);
    } else {
      current = v;
      bits.put(true);
      bits.put_bits(v, k);
      bits.put(false);
      bits.put_bits(u, k);
    }
  }
  const int padding = (6 - bits.pending()) % 6;
  // Padding with ones would otherwise decode as an extra edge to n - 1.
  if (k < 6 && n == (1 << k) && padding >= k && current < n - 1) {
    bits.put(false);
  }
  out += bits.finish(true);
  return out;
}

SimpleGraph from_sparse6(std::string_view text) {
  if (text.starts_with(">>sparse6<<")) text.remove_prefix(11);
  if (text.empty() || text.front() != ':') {
    throw WhError(ErrorCode::kParse, "sparse6 must start with ':'");
  }
  text.remove_prefix(1);
  const int n = read_size(text);
  const int k = bits_for(n);
  BitReader bits(text);
  std::vector<Edge> edges;
  int current = 0;
  while (bits.remaining() >= static_cast<std::size_t>(k + 1)) {
    const bool b = bits.get();
    const int x = static_cast<int>(bits.get_bits(k));
    if (b) ++current;
    if (current >= n) break;
    if (x > current) {
      current = x;
    } else {
      edges.emplace_back(x, current);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

std::string to_dot(const WhGraph& g) {
  const auto& p = g.params();
  std::ostringstream out;
  out << "graph \"" << p.to_string() << "\" {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << g.vertex(v).label() << ";\n";
  }
  for (const auto& e : g.typed_edges()) {
    out << "  " << g.vertex(e.u).label() << " -- " << g.vertex(e.v).label()
        << " [kind=\"" << edge_kind_name(e.kind) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wh
