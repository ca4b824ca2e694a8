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

#include <string>
#include <utility>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/gf.hpp"

namespace cycodes {

/// Dense univariate polynomial over a fixed field, lowest degree first.
/// Normalized: the highest stored coefficient is nonzero; the zero
/// polynomial has an empty vector.
struct Poly {
  const FieldCtx* f = nullptr;
  std::vector<FieldElem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const Poly& o) const { return f == o.f && c == o.c; }
};

Poly poly_zero(const FieldCtx& f);
Poly poly_one(const FieldCtx& f);
/// Polynomial from integer coefficient values, lowest degree first.
Poly poly_from_values(const FieldCtx& f, const std::vector<uint64_t>& vals);
/// x^n - 1 over f.
Poly poly_xn_minus_1(const FieldCtx& f, uint64_t n);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::invalid_argument on zero divisor
/// or mixed field contexts.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor.
Poly poly_gcd(Poly a, Poly b);
FieldElem poly_eval(const Poly& a, const FieldElem& x);

/// Total order used everywhere factors are sorted or labeled: first by
/// degree, then coefficient-wise from the highest degree down, comparing
/// integer element values (for GF(4): 0 < 1 < w < w^2).
int poly_compare(const Poly& a, const Poly& b);

/// Rabin irreducibility test over the polynomial's own field GF(q):
/// a of degree d is irreducible iff x^(q^d) = x mod a and, for every
/// prime r dividing d, gcd(x^(q^(d/r)) - x, a) = 1.  Degree <= 0 and
/// constants report false.
bool poly_is_irreducible(const Poly& a);

/// Display form matching the tables this project reproduces: monomials in
/// descending degree joined by " + ", coefficients printed as integers,
/// or as w / w^2 over GF(4); e.g. "x^6 + wx^4 + wx^3 + x^2 + w^2x + 1".
std::string to_display(const Poly& a);

enum class CosetFlavor {
  kUnitsSubgroup,  ///< cosets of the cyclic subgroup <q> inside Z_n^*
  kFullPartition,  ///< orbits of multiplication by q on all of Z_n
};

/// Multiplicative cosets of q modulo n, each ascending, ordered by
/// smallest element.  Requires gcd(q, n) = 1.
std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t q, uint64_t n, CosetFlavor flavor);

/// True iff T is a union of kFullPartition cosets (the closure property
/// every defining set must have).
bool is_union_of_cosets(uint64_t q, uint64_t n, const std::vector<uint64_t>& T);

/// The ambient arithmetic for length-n cyclic codes over GF(q): the base
/// field, the splitting field GF(q^N) with N = ord_n(q), the canonical
/// embedding between them, and the canonical primitive n-th root of
/// unity theta with all its powers.  Both contexts come from field_cached,
/// so polynomials built here stay valid after the RootSystem goes away.
struct RootSystem {
  uint64_t q = 0, n = 0, N = 0;
  const FieldCtx* base = nullptr;
  const FieldCtx* ext = nullptr;
  SubfieldMap embed;  ///< base into ext
  FieldElem theta;
  std::vector<FieldElem> theta_pow;  ///< theta^0 .. theta^(n-1)
};

/// Builds the root system; q must be a power of a single prime and
/// coprime to n.
RootSystem build_root_system(uint64_t q, uint64_t n);

/// Expands prod_{i in E} (x - theta^i) over the extension field.
Poly product_over_roots_ext(const RootSystem& rs, const std::vector<uint64_t>& exps);

/// Same product, mapped down to the base field.  If some coefficient is
/// not fixed by the Frobenius c -> c^q, the product is not base-rational:
/// throws std::domain_error when require_base, else returns the
/// extension-field polynomial.
Poly product_over_roots(const RootSystem& rs, const std::vector<uint64_t>& exps, bool require_base = true);

/// One irreducible factor of x^n - 1 with its canonical label, its root
/// exponents, and the block it belongs to.  Blocks: 0 is the x - 1
/// factor, 1 holds factors whose roots are powers of theta^{n2} (degree
/// ord_{n1}(q)), 2 the theta^{n1} ones, 3 the rest.  Labels follow the
/// "f<degree><index>" scheme with the index dropped when the degree class
/// has a single member (f1, f31, f32, f81, ..., f241, ...).
struct LabeledFactor {
  std::string label;
  Poly poly;
  std::vector<uint64_t> coset;
  int block = 0;
};

struct FactorList {
  uint64_t n1 = 0, n2 = 0, q = 0;
  std::vector<LabeledFactor> factors;  ///< sorted by poly_compare
};

/// Factors x^(n1*n2) - 1 over GF(q) into monic irreducibles built from
/// the kFullPartition cosets.  Requires gcd(q, n1*n2) = 1.
FactorList factor_xn_minus_1(uint64_t n1, uint64_t n2, uint64_t q);

/// Checks the seven-factor identity
///   x^n - 1 = (x-1) d0^{(n1)} d0^{(n2)} c0 d1^{(n1)} d1^{(n2)} c1
/// where (c0, c1) are the class polynomials of the family, plus the
/// cross identity (x-1)(x^n-1) = (x^{n1}-1)(x^{n2}-1) c0 c1.  Throws
/// std::invalid_argument when (n1, n2, q) is inadmissible for the family,
/// with the failed condition in the message.
bool verify_master_factorization(uint64_t n1, uint64_t n2, uint64_t q, Family fam);

}  // namespace cycodes
