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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cycodes {

/// Maximum extension degree supported by the fixed-size element storage.
/// GF(3^28) is the largest field the tools ever instantiate.
constexpr int kMaxFieldDeg = 32;

/// An element of GF(p^m): the coefficient vector of its representative
/// polynomial modulo the field modulus, lowest degree first.  Entries at
/// index >= m are zero.  Elements are plain values; all arithmetic goes
/// through the owning FieldCtx.
struct FieldElem {
  std::array<uint8_t, kMaxFieldDeg> c{};

  bool operator==(const FieldElem&) const = default;
};

/// A finite field GF(p^m) with a fixed modulus and a fixed multiplicative
/// generator, both chosen canonically:
///
///  * modulus: the lexicographically smallest monic irreducible polynomial
///    of degree m over GF(p), comparing coefficient vectors from the
///    constant term upward (for m = 1 this is the polynomial x);
///  * generator: the element of smallest integer value (see value()) whose
///    multiplicative order is p^m - 1.
///
/// The same (p, m) therefore always yields the same field presentation,
/// which keeps every derived object (roots of unity, irreducible factors,
/// generator polynomials) reproducible across runs and machines.
class FieldCtx {
 public:
  uint64_t p = 0;      ///< characteristic (prime)
  uint64_t m = 0;      ///< extension degree
  uint64_t order = 0;  ///< p^m

  /// Low coefficients c[0..m-1] of the monic modulus (the x^m term is
  /// implicit).  For m = 1 the modulus is x and all entries are zero.
  FieldElem modulus;
  /// Canonical multiplicative generator.
  FieldElem gen;
  /// Prime factorization of order - 1 (ascending, distinct primes).
  std::vector<uint64_t> group_prime_factors;

  // --- element construction -------------------------------------------
  FieldElem zero() const { return FieldElem{}; }
  FieldElem one() const { return from_value(1); }
  /// The residue class of x (zero when m == 1, where the modulus is x).
  FieldElem x() const;
  /// Element with coefficient vector given by the base-p digits of v.
  /// Requires v < order.
  FieldElem from_value(uint64_t v) const;
  /// Integer value sum c_i p^i; inverse of from_value.
  uint64_t value(const FieldElem& a) const;
  /// Embeds a base-field scalar 0 <= s < p.
  FieldElem from_scalar(uint64_t s) const { return from_value(s % p); }

  // --- arithmetic ------------------------------------------------------
  bool is_zero(const FieldElem& a) const { return a == FieldElem{}; }
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Raises to a nonnegative power by square-and-multiply.
  FieldElem pow(const FieldElem& a, uint64_t e) const;
  /// Multiplicative inverse; throws std::invalid_argument on zero.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

  /// Order of a in the multiplicative group; throws on zero.
  uint64_t multiplicative_order(const FieldElem& a) const;
  /// Canonical primitive n-th root of unity gen^((order-1)/n); throws
  /// std::invalid_argument unless n divides order - 1.
  FieldElem nth_root_of_unity(uint64_t n) const;
};

/// Builds GF(p^m) with the canonical modulus and generator described on
/// FieldCtx.  Throws std::invalid_argument unless p is prime, m >= 1 and
/// p^m fits the supported range.
FieldCtx field_create(uint64_t p, uint64_t m);

/// Interned version of field_create: one shared, immutable context per
/// (p, m), with a stable address for the lifetime of the process.  Objects
/// that keep FieldCtx pointers (polynomials, subfield maps) should be built
/// against cached contexts.  Thread-safe.
const FieldCtx& field_cached(uint64_t p, uint64_t m);

/// Identification of GF(p^s) inside GF(p^m) (s dividing m).  up maps the
/// residue class of the small field's x to a canonical root xi of the
/// small modulus in the big field; down inverts it on the image.
struct SubfieldMap {
  const FieldCtx* small = nullptr;
  const FieldCtx* big = nullptr;
  std::vector<FieldElem> up_table;  ///< indexed by small-field value

  FieldElem up(const FieldElem& a) const;
  /// Preimage of b, if b lies in the embedded subfield.
  bool down(const FieldElem& b, FieldElem* out) const;
  bool in_subfield(const FieldElem& b) const { return down(b, nullptr); }
};

/// Builds the canonical embedding of `small` into `big`.  Throws unless
/// the characteristics agree and small.m divides big.m.
SubfieldMap subfield_embed(const FieldCtx& small, const FieldCtx& big);

// --- small utilities shared by the other modules ------------------------

/// Deterministic Miller-Rabin primality test, exact for 64-bit inputs.
bool is_prime_u64(uint64_t n);
/// Ascending list of distinct prime factors (trial division; intended for
/// group orders up to ~2^48).
std::vector<uint64_t> prime_factors(uint64_t n);
/// a*b mod n without overflow for n < 2^63.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n);
/// a^e mod n.
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n);
/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
uint64_t order_mod(uint64_t a, uint64_t n);

}  // namespace cycodes
