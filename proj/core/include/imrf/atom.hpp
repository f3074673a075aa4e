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

#include <cstdint>
#include <string>
#include <vector>

#include "imrf/vertex_set.hpp"

namespace imrf {

/// An atom of the field generated by the set variables of n random
/// variables, identified by U_A, the set of complemented indices. The
/// all-complemented (empty) atom is not representable.
class Atom {
 public:
  Atom() = default;
  Atom(int n, VertexSet complemented);

  /// Atom with non-complemented set W (U_A = V - W).
  static Atom with_support(int n, VertexSet support);
  /// Atom whose index (the integer value of U_A) is `index`.
  static Atom from_index(int n, std::uint32_t index) { return Atom(n, VertexSet::from_mask(index)); }

  int n() const { return n_; }
  VertexSet complemented() const { return complemented_; }
  /// W_A = V - U_A.
  VertexSet support() const { return VertexSet::all(n_) - complemented_; }
  int weight() const { return n_ - complemented_.size(); }
  std::uint32_t index() const { return complemented_.mask(); }

  /// Text form "1 2' 3": every index, apostrophe marks a complement.
  std::string to_string() const;
  /// Bar-notation form used in human-readable tables, e.g. "1 2̄ 3".
  std::string to_bar_string() const;

  auto operator<=>(const Atom&) const = default;

 private:
  int n_ = 0;
  VertexSet complemented_;
};

/// Parses "1 2' 3". The largest listed index fixes n and every index in
/// 1..n must appear exactly once.
Atom parse_atom(const std::string& text);

/// Number of atoms 2^n - 1.
std::uint32_t atom_count(int n);

/// Throws CapacityExceeded when n is too large to enumerate all atoms.
void check_atom_capacity(int n);

/// A set of atoms over a common n, as a bitset over atom indices.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(int n);
  AtomSet(int n, const std::vector<Atom>& atoms);

  /// Every atom of F_V.
  static AtomSet full(int n);

  int n() const { return n_; }
  bool contains(const Atom& a) const;
  bool contains_index(std::uint32_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void insert(const Atom& a);
  void insert_index(std::uint32_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void erase(const Atom& a);
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Atoms in increasing index order.
  std::vector<Atom> atoms() const;

  bool subset_of(const AtomSet& other) const;
  AtomSet& operator|=(const AtomSet& other);
  AtomSet operator|(const AtomSet& other) const;
  AtomSet operator-(const AtomSet& other) const;
  AtomSet operator&(const AtomSet& other) const;
  /// Complement inside the full atom lattice.
  AtomSet complement() const;
  bool operator==(const AtomSet&) const = default;

 private:
  void check_same_n(const AtomSet& other) const;
  void check_atom(const Atom& a) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace imrf
