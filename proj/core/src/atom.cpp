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

#include "imrf/atom.hpp"

#include <bit>
#include <sstream>

namespace imrf {

Atom::Atom(int n, VertexSet complemented) : n_(n), complemented_(complemented) {
  if (n < 1 || n > kMaxGraphVertices) {
    throw CapacityExceeded("atom over n=" + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxGraphVertices));
  }
  if (!complemented.subset_of(VertexSet::all(n))) throw InvalidArgument("complemented set not inside 1..n");
  if (complemented == VertexSet::all(n)) throw InvalidArgument("the all-complemented atom is empty");
}

Atom Atom::with_support(int n, VertexSet support) { return Atom(n, VertexSet::all(n) - support); }

std::string Atom::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(i);
    if (complemented_.contains(i)) out += '\'';
  }
  return out;
}

std::string Atom::to_bar_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ' ';
    for (char c : std::to_string(i)) {
      out += c;
      if (complemented_.contains(i)) out += "̄";  // combining macron
    }
  }
  return out;
}

Atom parse_atom(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  VertexSet seen;
  VertexSet complemented;
  while (in >> token) {
    bool bar = false;
    if (!token.empty() && token.back() == '\'') {
      bar = true;
      token.pop_back();
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad atom token '" + token + "' in \"" + text + "\"");
    }
    if (used != token.size()) throw InvalidArgument("bad atom token '" + token + "' in \"" + text + "\"");
    if (seen.contains(v)) throw InvalidArgument("index " + std::to_string(v) + " repeated in atom");
    seen.insert(v);
    if (bar) complemented.insert(v);
  }
  const int n = seen.max();
  if (n == 0) throw InvalidArgument("empty atom text");
  if (seen != VertexSet::all(n)) throw InvalidArgument("atom \"" + text + "\" must list every index 1..n");
  return Atom(n, complemented);
}

std::uint32_t atom_count(int n) { return (std::uint32_t{1} << n) - 1; }

void check_atom_capacity(int n) {
  if (n < 1 || n > kMaxAtomVertices) {
    throw CapacityExceeded("atom lattice over n=" + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxAtomVertices));
  }
}

AtomSet::AtomSet(int n) : n_(n) {
  check_atom_capacity(n);
  words_.assign((atom_count(n) + 63) / 64, 0);
}

AtomSet::AtomSet(int n, const std::vector<Atom>& atoms) : AtomSet(n) {
  for (const Atom& a : atoms) insert(a);
}

AtomSet AtomSet::full(int n) {
  AtomSet s(n);
  for (std::uint32_t i = 0; i < atom_count(n); ++i) s.insert_index(i);
  return s;
}

void AtomSet::check_atom(const Atom& a) const {
  if (a.n() != n_) throw InvalidArgument("atom over n=" + std::to_string(a.n()) + " in set over n=" + std::to_string(n_));
}

void AtomSet::check_same_n(const AtomSet& other) const {
  if (other.n_ != n_) throw InvalidArgument("atom sets over different n");
}

bool AtomSet::contains(const Atom& a) const {
  check_atom(a);
  return contains_index(a.index());
}

void AtomSet::insert(const Atom& a) {
  check_atom(a);
  insert_index(a.index());
}

void AtomSet::erase(const Atom& a) {
  check_atom(a);
  words_[a.index() >> 6] &= ~(std::uint64_t{1} << (a.index() & 63));
}

std::size_t AtomSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Atom> AtomSet::atoms() const {
  std::vector<Atom> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(Atom::from_index(n_, static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)))));
    }
  }
  return out;
}

bool AtomSet::subset_of(const AtomSet& other) const {
  check_same_n(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

AtomSet& AtomSet::operator|=(const AtomSet& other) {
  check_same_n(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

AtomSet AtomSet::operator|(const AtomSet& other) const {
  AtomSet out = *this;
  out |= other;
  return out;
}

AtomSet AtomSet::operator-(const AtomSet& other) const {
  check_same_n(other);
  AtomSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

AtomSet AtomSet::operator&(const AtomSet& other) const {
  check_same_n(other);
  AtomSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

AtomSet AtomSet::complement() const { return full(n_) - *this; }

}  // namespace imrf
