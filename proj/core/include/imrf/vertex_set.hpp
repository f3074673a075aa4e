// Copyright 2026 The imrf Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "imrf/error.hpp"

namespace imrf {

/// Largest vertex label accepted by graph operations.
inline constexpr int kMaxGraphVertices = 24;

/// Largest n for which whole atom lattices (2^n - 1 atoms) are enumerated.
inline constexpr int kMaxAtomVertices = 16;

/// A subset of {1..24}. Vertex i lives at bit i-1.
class VertexSet {
 public:
  using mask_type = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(mask_type rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    mask_type rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static constexpr VertexSet from_mask(mask_type m) {
    VertexSet s;
    s.bits_ = m;
    return s;
  }
  /// {1..n}
  static constexpr VertexSet all(int n) {
    return from_mask(n <= 0 ? 0u : (n >= 32 ? ~0u : ((mask_type{1} << n) - 1)));
  }
  /// {lo..hi}; empty when lo > hi.
  static constexpr VertexSet range(int lo, int hi) {
    if (lo > hi) return {};
    return from_mask(all(hi).bits_ & ~all(lo - 1).bits_);
  }
  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr mask_type mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxGraphVertices && ((bits_ >> (v - 1)) & 1u);
  }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; 0 when empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest member; 0 when empty.
  constexpr int max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  void insert(int v) {
    check_label(v);
    bits_ |= mask_type{1} << (v - 1);
  }
  void erase(int v) {
    check_label(v);
    bits_ &= ~(mask_type{1} << (v - 1));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<int> members() const { return {begin(), end()}; }

  /// "1,2,5"; empty set renders as "".
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_mask(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return from_mask(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders by mask value, which is also the atom index order.
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  static void check_label(int v) {
    if (v < 1 || v > kMaxGraphVertices) {
      throw InvalidArgument("vertex label " + std::to_string(v) + " outside 1.." +
                            std::to_string(kMaxGraphVertices));
    }
  }

  mask_type bits_ = 0;
};

/// Parses "1,2,5" (whitespace tolerated, empty string is the empty set).
VertexSet parse_vertex_set(const std::string& text);

}  // namespace imrf
