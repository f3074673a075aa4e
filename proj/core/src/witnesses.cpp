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

#include "imrf/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace imrf {

namespace {

bool is_prime_order(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

#ifdef IMRF_ENABLE_PRIME_POWER_FIELDS
// Polynomials over GF(p) of degree < k are stored as base-p digit vectors.
struct PolyField {
  std::uint32_t p;
  int k;

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(k));
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  }
  // Product of a and b reduced modulo the monic polynomial x^k + tail.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b, const std::vector<std::uint32_t>& tail) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    for (int deg = 2 * k - 2; deg >= k; --deg) {
      const std::uint32_t c = prod[static_cast<std::size_t>(deg)];
      if (c == 0) continue;
      prod[static_cast<std::size_t>(deg)] = 0;
      for (int i = 0; i < k; ++i) {
        auto& slot = prod[static_cast<std::size_t>(deg - k + i)];
        slot = (slot + (p - c) * tail[static_cast<std::size_t>(i)]) % p;
      }
    }
    prod.resize(static_cast<std::size_t>(k));
    return pack(prod);
  }
};
#endif

}  // namespace

bool FieldSpec::prime_powers_enabled() {
#ifdef IMRF_ENABLE_PRIME_POWER_FIELDS
  return true;
#else
  return false;
#endif
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q < 2 || q > kMaxOrder) throw InvalidArgument("field order must lie in 2.." + std::to_string(kMaxOrder));
  if (is_prime_order(q)) return;

  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
#ifdef IMRF_ENABLE_PRIME_POWER_FIELDS
  const PolyField f{p, k};
  // Search monic x^k + tail for one whose multiplication table has no zero
  // divisors, i.e. an irreducible modulus.
  for (std::uint32_t t = 0; t < q; ++t) {
    const auto tail = f.digits(t);
    if (tail[0] == 0) continue;
    std::vector<std::uint32_t> mul(static_cast<std::size_t>(q) * q);
    bool field = true;
    for (std::uint32_t a = 0; a < q && field; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::uint32_t c = f.mul(a, b, tail);
        if (a != 0 && b != 0 && c == 0) {
          field = false;
          break;
        }
        mul[a * q + b] = c;
      }
    }
    if (!field) continue;
    add_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        auto da = f.digits(a);
        const auto db = f.digits(b);
        for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % p;
        add_[a * q + b] = f.pack(da);
      }
    }
    mul_ = std::move(mul);
    return;
  }
  throw InvalidArgument("no irreducible modulus found for order " + std::to_string(q));
#else
  throw InvalidArgument("field order " + std::to_string(q) +
                        " is a prime power; rebuild with IMRF_ENABLE_PRIME_POWER_FIELDS=ON");
#endif
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (a >= q_ || b >= q_) throw InvalidArgument("field element out of range");
  return add_.empty() ? (a + b) % q_ : add_[a * q_ + b];
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a >= q_ || b >= q_) throw InvalidArgument("field element out of range");
  return mul_.empty() ? static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_) : mul_[a * q_ + b];
}

Distribution star_xor_witness(const Graph& g, int hub, int v1, int v2, int v3) {
  const int n = g.order();
  if (g.vertices() != VertexSet::all(n)) throw InvalidArgument("star witness needs a graph on 1..n");
  if (!g.vertices().contains(hub)) throw InvalidArgument("hub is not a vertex");
  if (g.degree(hub) < 3) throw InvalidArgument("hub " + std::to_string(hub) + " has degree below 3");
  const VertexSet leaves{v1, v2, v3};
  if (leaves.size() != 3) throw InvalidArgument("leaves must be distinct");
  if (!leaves.subset_of(g.neighbors(hub))) throw InvalidArgument("leaves must be neighbours of the hub");

  std::vector<std::uint32_t> alphabets(static_cast<std::size_t>(n), 1);
  alphabets[static_cast<std::size_t>(hub - 1)] = 4;
  for (int v : leaves) alphabets[static_cast<std::size_t>(v - 1)] = 2;

  std::vector<Outcome> outcomes;
  for (std::uint32_t z = 0; z < 2; ++z) {
    for (std::uint32_t t = 0; t < 2; ++t) {
      Configuration x(static_cast<std::size_t>(n), 0);
      x[static_cast<std::size_t>(hub - 1)] = 2 * z + t;
      x[static_cast<std::size_t>(v1 - 1)] = z;
      x[static_cast<std::size_t>(v2 - 1)] = t;
      x[static_cast<std::size_t>(v3 - 1)] = z ^ t;
      outcomes.push_back({x, 0.25});
    }
  }
  return Distribution(std::move(alphabets), std::move(outcomes));
}

Distribution ring_field_witness(int n, const FieldSpec& field, const std::vector<std::uint32_t>& alphas) {
  const std::uint32_t q = field.order();
  if (n < 3) throw InvalidArgument("ring witness needs n >= 3");
  if (n > kMaxGraphVertices) throw CapacityExceeded("ring witness over n=" + std::to_string(n));
  if (static_cast<std::uint32_t>(n - 1) > q) throw InvalidArgument("field needs at least n-1 elements");
  if (alphas.size() != static_cast<std::size_t>(n - 2)) throw InvalidArgument("need exactly n-2 alphas");
  std::set<std::uint32_t> seen;
  for (auto a : alphas) {
    if (a == 0 || a >= q) throw InvalidArgument("alphas must be nonzero field elements");
    if (!seen.insert(a).second) throw InvalidArgument("alphas must be distinct");
  }

  std::vector<Outcome> outcomes;
  const double p = 1.0 / (static_cast<double>(q) * q);
  for (std::uint32_t z = 0; z < q; ++z) {
    for (std::uint32_t t = 0; t < q; ++t) {
      Configuration x(static_cast<std::size_t>(n));
      x[0] = z;
      x[1] = t;
      for (int k = 3; k <= n; ++k) x[static_cast<std::size_t>(k - 1)] = field.add(z, field.mul(alphas[static_cast<std::size_t>(k - 3)], t));
      outcomes.push_back({x, p});
    }
  }
  return Distribution(std::vector<std::uint32_t>(static_cast<std::size_t>(n), q), std::move(outcomes));
}

Distribution atom_concentrator(int n, VertexSet support, const std::vector<double>& z_pmf) {
  if (n < 1 || n > kMaxGraphVertices) throw CapacityExceeded("concentrator over n=" + std::to_string(n));
  if (support.empty() || !support.subset_of(VertexSet::all(n))) throw InvalidArgument("support must be a nonempty subset of 1..n");
  if (z_pmf.empty()) throw InvalidArgument("Z needs a nonempty pmf");

  const auto symbols = static_cast<std::uint32_t>(z_pmf.size());
  std::vector<std::uint32_t> alphabets(static_cast<std::size_t>(n), 1);
  for (int v : support) alphabets[static_cast<std::size_t>(v - 1)] = symbols;
  std::vector<Outcome> outcomes;
  for (std::uint32_t z = 0; z < symbols; ++z) {
    Configuration x(static_cast<std::size_t>(n), 0);
    for (int v : support) x[static_cast<std::size_t>(v - 1)] = z;
    outcomes.push_back({x, z_pmf[z]});
  }
  return Distribution(std::move(alphabets), std::move(outcomes));
}

}  // namespace imrf
