/*
 * Copyright 2026 The cycodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cycodes/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cycodes {

// ---------------------------------------------------------------------------
// integer utilities
// ---------------------------------------------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % n);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n) {
  uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t order_mod(uint64_t a, uint64_t n) {
  a %= n;
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("order_mod: arguments not coprime");
  // Euler's totient of n, then strip prime factors while the power stays 1.
  uint64_t phi = 1, nn = n;
  for (uint64_t d = 2; d * d <= nn; ++d) {
    if (nn % d == 0) {
      uint64_t q = 1;
      while (nn % d == 0) nn /= d, q *= d;
      phi *= q - q / d;
    }
  }
  if (nn > 1) phi *= nn - 1;
  uint64_t o = phi;
  for (uint64_t r : prime_factors(phi)) {
    while (o % r == 0 && powmod_u64(a, o / r, n) == 1) o /= r;
  }
  return o;
}

// ---------------------------------------------------------------------------
// dense polynomials over GF(p), used only to pick the canonical modulus
// ---------------------------------------------------------------------------

namespace {

using PolyP = std::vector<uint8_t>;  // coefficients low-first, no implicit top

int deg(const PolyP& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

PolyP trim(PolyP a) {
  a.resize(static_cast<size_t>(deg(a) + 1));
  return a;
}

// a mod f, f monic
PolyP pmod(PolyP a, const PolyP& f, uint64_t p) {
  int df = deg(f);
  for (int i = deg(a); i >= df; --i) {
    uint64_t t = a[static_cast<size_t>(i)] % p;
    if (!t) continue;
    for (int j = 0; j <= df; ++j) {
      uint64_t v = a[static_cast<size_t>(i - df + j)] + (p - t) * f[static_cast<size_t>(j)];
      a[static_cast<size_t>(i - df + j)] = static_cast<uint8_t>(v % p);
    }
  }
  return trim(a);
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& f, uint64_t p) {
  if (deg(a) < 0 || deg(b) < 0) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<uint8_t>((c[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
  }
  return pmod(std::move(c), f, p);
}

PolyP ppowmod(PolyP base, uint64_t e, const PolyP& f, uint64_t p) {
  PolyP r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PolyP pgcd(PolyP a, PolyP b, uint64_t p) {
  auto inv_scalar = [p](uint64_t s) {
    return powmod_u64(s, p - 2, p);
  };
  while (deg(b) >= 0) {
    // a = a mod b, after making b monic
    int db = deg(b);
    uint64_t lead_inv = inv_scalar(b[static_cast<size_t>(db)]);
    for (auto& c : b) c = static_cast<uint8_t>((c * lead_inv) % p);
    a = pmod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PolyP& f, uint64_t p, uint64_t m) {
  // x^(p^m) == x (mod f), and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m.
  PolyP x{0, 1};
  uint64_t pm = 1;
  for (uint64_t i = 0; i < m; ++i) pm *= p;
  PolyP xq = ppowmod(x, pm, f, p);
  if (trim(xq) != trim(x)) return false;
  for (uint64_t r : prime_factors(m)) {
    uint64_t e = 1;
    for (uint64_t i = 0; i < m / r; ++i) e *= p;
    PolyP t = ppowmod(x, e, f, p);
    // t - x
    PolyP d = t;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = static_cast<uint8_t>((d[1] + p - 1) % p);
    PolyP g = pgcd(f, trim(std::move(d)), p);
    if (deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldElem FieldCtx::x() const {
  FieldElem e;
  if (m >= 2) e.c[1] = 1;
  return e;
}

FieldElem FieldCtx::from_value(uint64_t v) const {
  if (v >= order) throw std::invalid_argument("from_value: value out of range");
  FieldElem e;
  for (uint64_t i = 0; i < m; ++i) {
    e.c[i] = static_cast<uint8_t>(v % p);
    v /= p;
  }
  return e;
}

uint64_t FieldCtx::value(const FieldElem& a) const {
  uint64_t v = 0;
  for (uint64_t i = m; i-- > 0;) v = v * p + a.c[i];
  return v;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r;
  for (uint64_t i = 0; i < m; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + b.c[i]) % p);
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  FieldElem r;
  for (uint64_t i = 0; i < m; ++i) r.c[i] = static_cast<uint8_t>((p - a.c[i]) % p);
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r;
  for (uint64_t i = 0; i < m; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + p - b.c[i]) % p);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  uint32_t buf[2 * kMaxFieldDeg] = {0};
  for (uint64_t i = 0; i < m; ++i) {
    if (!a.c[i]) continue;
    for (uint64_t j = 0; j < m; ++j) buf[i + j] += uint32_t(a.c[i]) * b.c[j];
  }
  // Reduce by x^m = -(low part of modulus).  Intermediate sums stay far
  // below 2^32: m * (p-1)^2 per convolution entry plus (p-1)^2 per step.
  for (uint64_t i = 2 * m - 2 + (m == 1); i >= m; --i) {
    uint32_t t = buf[i] % p;
    buf[i] = 0;
    if (!t) continue;
    for (uint64_t j = 0; j < m; ++j) {
      buf[i - m + j] += t * static_cast<uint32_t>(p - modulus.c[j]);
    }
  }
  FieldElem r;
  for (uint64_t i = 0; i < m; ++i) r.c[i] = static_cast<uint8_t>(buf[i] % p);
  return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, uint64_t e) const {
  FieldElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (is_zero(a)) throw std::invalid_argument("inv: zero element");
  return pow(a, order - 2);
}

uint64_t FieldCtx::multiplicative_order(const FieldElem& a) const {
  if (is_zero(a)) throw std::invalid_argument("multiplicative_order: zero element");
  uint64_t o = order - 1;
  for (uint64_t r : group_prime_factors) {
    while (o % r == 0 && pow(a, o / r) == one()) o /= r;
  }
  return o;
}

FieldElem FieldCtx::nth_root_of_unity(uint64_t n) const {
  if (n == 0 || (order - 1) % n != 0)
    throw std::invalid_argument("nth_root_of_unity: n does not divide the group order");
  return pow(gen, (order - 1) / n);
}

FieldCtx field_create(uint64_t p, uint64_t m) {
  if (!is_prime_u64(p) || p > 251) throw std::invalid_argument("field_create: p must be a small prime");
  if (m < 1 || m > static_cast<uint64_t>(kMaxFieldDeg))
    throw std::invalid_argument("field_create: unsupported extension degree");
  uint64_t order = 1;
  for (uint64_t i = 0; i < m; ++i) {
    if (order > (uint64_t(1) << 48) / p) throw std::invalid_argument("field_create: field too large");
    order *= p;
  }

  FieldCtx f;
  f.p = p;
  f.m = m;
  f.order = order;
  f.group_prime_factors = prime_factors(order - 1);

  // Canonical modulus: smallest monic irreducible of degree m, comparing
  // coefficient vectors (c0, c1, ..., c_{m-1}) lexicographically.  For
  // m >= 2 any candidate with c0 = 0 is divisible by x, so the scan starts
  // at c0 = 1; for m = 1 the smallest monic polynomial is x itself.
  bool found = false;
  PolyP cand(m + 1, 0);
  cand[m] = 1;
  if (m == 1) {
    found = true;  // modulus x; FieldElem modulus stays all-zero
  } else {
    uint64_t inner = 1;
    for (uint64_t i = 0; i + 1 < m; ++i) inner *= p;
    for (uint64_t c0 = 1; c0 < p && !found; ++c0) {
      cand[0] = static_cast<uint8_t>(c0);
      for (uint64_t v = 0; v < inner && !found; ++v) {
        uint64_t t = v;
        for (uint64_t j = m - 1; j >= 1; --j) {  // c1 is the most significant digit
          cand[j] = static_cast<uint8_t>(t % p);
          t /= p;
        }
        if (is_irreducible(cand, p, m)) found = true;
      }
    }
    if (!found) throw std::runtime_error("field_create: no irreducible polynomial found");
    for (uint64_t i = 0; i < m; ++i) f.modulus.c[i] = cand[i];
  }

  // Canonical generator: smallest value with full multiplicative order.
  for (uint64_t val = 1; val < order; ++val) {
    FieldElem g = f.from_value(val);
    bool ok = true;
    for (uint64_t r : f.group_prime_factors) {
      if (f.pow(g, (order - 1) / r) == f.one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f.gen = g;
      return f;
    }
  }
  throw std::runtime_error("field_create: no generator found");
}

const FieldCtx& field_cached(uint64_t p, uint64_t m) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, uint64_t>, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_unique<FieldCtx>(field_create(p, m));
  return *slot;
}

// ---------------------------------------------------------------------------
// subfield embedding
// ---------------------------------------------------------------------------

FieldElem SubfieldMap::up(const FieldElem& a) const {
  return up_table[small->value(a)];
}

bool SubfieldMap::down(const FieldElem& b, FieldElem* out) const {
  for (size_t v = 0; v < up_table.size(); ++v) {
    if (up_table[v] == b) {
      if (out) *out = small->from_value(v);
      return true;
    }
  }
  return false;
}

SubfieldMap subfield_embed(const FieldCtx& small, const FieldCtx& big) {
  if (small.p != big.p || big.m % small.m != 0)
    throw std::invalid_argument("subfield_embed: not a subfield");
  SubfieldMap map;
  map.small = &small;
  map.big = &big;
  map.up_table.resize(small.order);

  FieldElem xi = big.zero();
  if (small.m > 1) {
    // xi = first power of the big generator, stepping by the index of the
    // subgroup of size small.order - 1, that is a root of the small modulus.
    uint64_t sigma = (big.order - 1) / (small.order - 1);
    for (uint64_t u = 1; u < small.order; ++u) {
      FieldElem cand = big.pow(big.gen, sigma * u);
      FieldElem acc = big.one();  // evaluate monic small modulus at cand
      for (uint64_t i = small.m; i-- > 0;) {
        acc = big.add(big.mul(acc, cand), big.from_scalar(small.modulus.c[i]));
      }
      if (big.is_zero(acc)) {
        xi = cand;
        break;
      }
    }
    if (big.is_zero(xi)) throw std::runtime_error("subfield_embed: no root of small modulus");
  }

  for (uint64_t v = 0; v < small.order; ++v) {
    FieldElem a = small.from_value(v);
    FieldElem acc = big.zero();
    for (uint64_t i = small.m; i-- > 0;) {
      acc = big.add(big.mul(acc, xi), big.from_scalar(a.c[i]));
    }
    map.up_table[v] = acc;
  }
  return map;
}

}  // namespace cycodes
