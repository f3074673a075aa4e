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
#include <vector>

#include "imrf/atom.hpp"

namespace imrf {

/// H(X_B) for every nonempty B of {1..n}, indexed by the mask of B.
/// Slot 0 holds H of the empty set, always 0.
class EntropyVector {
 public:
  EntropyVector() = default;
  EntropyVector(int n, double base);
  EntropyVector(int n, double base, std::vector<double> values);

  int n() const { return n_; }
  double base() const { return base_; }
  double operator[](VertexSet b) const { return h_[b.mask()]; }
  double& operator[](VertexSet b) { return h_[b.mask()]; }
  const std::vector<double>& values() const { return h_; }

 private:
  int n_ = 0;
  double base_ = 2.0;
  std::vector<double> h_;
};

/// mu* on every atom of F_V, indexed by atom index (the mask of U_A).
class IMeasureVector {
 public:
  IMeasureVector() = default;
  IMeasureVector(int n, double base);
  IMeasureVector(int n, double base, std::vector<double> values);

  int n() const { return n_; }
  double base() const { return base_; }
  double operator[](const Atom& a) const;
  double& operator[](const Atom& a);
  double at_index(std::uint32_t index) const { return values_[index]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int n_ = 0;
  double base_ = 2.0;
  std::vector<double> values_;
};

}  // namespace imrf
