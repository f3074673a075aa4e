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

#include "imrf/distribution.hpp"
#include "imrf/graph.hpp"

namespace imrf {

/// A finite field of order q with elements 0..q-1. Prime q uses modular
/// arithmetic. Prime powers use precomputed tables and are available only
/// when the library is built with IMRF_ENABLE_PRIME_POWER_FIELDS.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 257;

  explicit FieldSpec(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  bool is_prime() const { return add_.empty(); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  static bool prime_powers_enabled();

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

/// Z, T independent fair bits; X_{v1} = Z, X_{v2} = T, X_{v3} = Z xor T,
/// X_hub = (Z, T) encoded as 2Z + T, every other variable constant.
/// g must be on 1..n and v1, v2, v3 distinct neighbours of the hub.
Distribution star_xor_witness(const Graph& g, int hub, int v1, int v2, int v3);

/// Ring witness over F: Z, T uniform on F, X_1 = Z, X_2 = T and
/// X_{k} = Z + alphas[k-3] T for k = 3..n. Needs n >= 3 and n-2 distinct
/// nonzero alphas. Any two variables are independent and determine the rest.
Distribution ring_field_witness(int n, const FieldSpec& field, const std::vector<std::uint32_t>& alphas);

/// X_i = Z on `support`, constant elsewhere. mu* is H(Z) on the atom with
/// W_A = support and zero on every other atom.
Distribution atom_concentrator(int n, VertexSet support, const std::vector<double>& z_pmf = {0.5, 0.5});

}  // namespace imrf
