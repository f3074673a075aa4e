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

#include "imrf/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "imrf/error.hpp"

namespace imrf {

Distribution::Distribution(std::vector<std::uint32_t> alphabet_sizes, std::vector<Outcome> outcomes)
    : alphabets_(std::move(alphabet_sizes)) {
  if (alphabets_.empty() || alphabets_.size() > static_cast<std::size_t>(kMaxGraphVertices)) {
    throw CapacityExceeded("distribution over " + std::to_string(alphabets_.size()) + " variables");
  }
  for (auto a : alphabets_)
    if (a == 0) throw InvalidArgument("alphabet sizes must be positive");

  std::map<Configuration, double> merged;
  double total = 0.0;
  for (auto& o : outcomes) {
    if (o.x.size() != alphabets_.size()) throw InvalidArgument("configuration length differs from n");
    for (std::size_t i = 0; i < o.x.size(); ++i) {
      if (o.x[i] >= alphabets_[i]) {
        throw InvalidArgument("symbol " + std::to_string(o.x[i]) + " outside alphabet of variable " +
                              std::to_string(i + 1));
      }
    }
    if (!(o.p >= 0.0) || !std::isfinite(o.p)) throw InvalidArgument("probabilities must be finite and nonnegative");
    total += o.p;
    if (o.p > 0.0) merged[std::move(o.x)] += o.p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  support_.reserve(merged.size());
  for (auto& [x, p] : merged) support_.push_back({x, p});
}

bool Distribution::strictly_positive() const {
  double cells = 1.0;
  for (auto a : alphabets_) cells *= a;
  return static_cast<double>(support_.size()) == cells;
}

Distribution Distribution::marginal(VertexSet keep) const {
  if (keep.empty() || !keep.subset_of(VertexSet::all(n()))) throw InvalidArgument("marginal set not inside 1..n");
  const auto members = keep.members();
  std::vector<std::uint32_t> alphabets;
  for (int v : members) alphabets.push_back(alphabets_[static_cast<std::size_t>(v - 1)]);
  std::map<Configuration, double> merged;
  for (const auto& o : support_) {
    Configuration y;
    y.reserve(members.size());
    for (int v : members) y.push_back(o.x[static_cast<std::size_t>(v - 1)]);
    merged[y] += o.p;
  }
  std::vector<Outcome> outcomes;
  for (auto& [x, p] : merged) outcomes.push_back({x, p});
  // Re-normalize away accumulated rounding before validation.
  double total = 0.0;
  for (const auto& o : outcomes) total += o.p;
  for (auto& o : outcomes) o.p /= total;
  return Distribution(std::move(alphabets), std::move(outcomes));
}

Distribution independent_product(const std::vector<std::vector<double>>& marginals) {
  std::vector<std::uint32_t> alphabets;
  for (const auto& m : marginals) alphabets.push_back(static_cast<std::uint32_t>(m.size()));
  std::vector<Outcome> outcomes{{Configuration{}, 1.0}};
  for (const auto& m : marginals) {
    std::vector<Outcome> next;
    for (const auto& o : outcomes) {
      for (std::size_t s = 0; s < m.size(); ++s) {
        Outcome e = o;
        e.x.push_back(static_cast<std::uint32_t>(s));
        e.p *= m[s];
        next.push_back(std::move(e));
      }
    }
    outcomes = std::move(next);
  }
  return Distribution(std::move(alphabets), std::move(outcomes));
}

}  // namespace imrf
