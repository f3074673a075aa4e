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

#include "imrf/vertex_set.hpp"

namespace imrf {

using Configuration = std::vector<std::uint32_t>;

/// Joint pmf of n discrete variables, stored sparsely over its support.
struct Outcome {
  Configuration x;
  double p = 0.0;
};

class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Distribution() = default;
  /// Validates alphabet bounds, nonnegativity and normalization. Repeated
  /// configurations are merged; zero-probability outcomes are dropped.
  Distribution(std::vector<std::uint32_t> alphabet_sizes, std::vector<Outcome> outcomes);

  int n() const { return static_cast<int>(alphabets_.size()); }
  const std::vector<std::uint32_t>& alphabet_sizes() const { return alphabets_; }
  /// Support, sorted lexicographically by configuration.
  const std::vector<Outcome>& support() const { return support_; }
  bool strictly_positive() const;

  /// Marginal on `keep`, relabelled onto 1..|keep| in increasing order.
  Distribution marginal(VertexSet keep) const;

 private:
  std::vector<std::uint32_t> alphabets_;
  std::vector<Outcome> support_;
};

/// Product of independent variables with the given marginals.
Distribution independent_product(const std::vector<std::vector<double>>& marginals);

}  // namespace imrf
