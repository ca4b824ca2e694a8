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

#include <cstdint>
#include <string>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/polyring.hpp"

namespace cycodes {

/// A cyclic code of length n over GF(q), presented by a generator
/// polynomial g(x) dividing x^n - 1 together with the matching defining
/// set T = { i : g(theta^i) = 0 } (ascending, a union of q-cyclotomic
/// cosets).  The dimension is k = n - deg g = n - |T|.
struct CyclicCode {
  uint64_t n = 0, q = 0;
  const FieldCtx* field = nullptr;
  Poly gen;
  std::vector<uint64_t> defining_set;
  uint64_t k = 0;
  std::string label;
};

/// Binary selector (i, j, h) naming one of the eight codes of a family:
/// the generator is class_i(x) * d_j^{(n1)}(x) * d_h^{(n2)}(x).
struct FamilyTriple {
  int i = 0, j = 0, h = 0;
};

/// Shared construction state for one (n1, n2, q): the order-2 cyclotomy
/// tables, the splitting-field arithmetic, and the factor list of
/// x^n - 1.  Codes built from the same context share field storage.
class CodeContext {
 public:
  /// Throws std::invalid_argument on a bad prime pair or gcd(q, n) != 1.
  CodeContext(uint64_t n1, uint64_t n2, uint64_t q);

  uint64_t n1() const { return sys_.n1; }
  uint64_t n2() const { return sys_.n2; }
  uint64_t n() const { return sys_.n; }
  uint64_t q() const { return rs_.q; }
  const CyclotomySystem& sys() const { return sys_; }
  const RootSystem& roots() const { return rs_; }
  const FactorList& factors() const { return fl_; }

  /// Defining set X_i  u  n2*D_j^{(n1)}  u  n1*D_h^{(n2)}, ascending;
  /// even_like adjoins the exponent 0.  Throws std::invalid_argument with
  /// the violated condition when the family is inadmissible for q.
  std::vector<uint64_t> defining_set(Family fam, FamilyTriple t, bool even_like = false) const;

  /// The [n, (n+1)/2] code with that defining set (even_like gives the
  /// [n, (n-1)/2] subcode whose generator gains the factor x - 1).
  CyclicCode construct(Family fam, FamilyTriple t, bool even_like = false) const;

  /// Image of c under the coordinate equivalence x -> x^ell: the code
  /// with defining set ell^{-1} T.  Requires gcd(ell, n) = 1.
  CyclicCode map_code(const CyclicCode& c, uint64_t ell) const;

 private:
  CyclotomySystem sys_;
  RootSystem rs_;
  FactorList fl_;
};

/// Cyclic code with an arbitrary defining set: T is sorted and
/// deduplicated, the generator becomes prod_{t in T} (x - theta^t), and
/// k = n - |T|.  Throws std::invalid_argument unless T is closed under
/// multiplication by q mod n (otherwise the product has no coefficients
/// in the base field).
CyclicCode code_from_defining_set(const RootSystem& rs, std::vector<uint64_t> T,
                                  std::string label = "");

/// Every cyclic code of dimension (n+1)/2 whose generator takes half the
/// factors of each block of x^n - 1 (never the factor x - 1).  Codes are
/// emitted with the n1-block selection as the outermost loop and the
/// n-block as the innermost, selections in lexicographic order; labels
/// concatenate the chosen factor labels ("f31f81f241f242").  When a block
/// holds an odd number of factors no such code exists: `codes` is empty
/// and `obstruction` names the failing side.
struct Census {
  std::vector<CyclicCode> codes;
  std::string obstruction;
};
Census census_half_dim(const CodeContext& ctx);

/// BCH bound data for a defining set T mod n: the bound is 1 plus the
/// length of the longest cyclic run of consecutive residues contained in
/// T; run_start is the smallest starting exponent of such a run.  Empty T
/// gives bound 1.
struct BchBound {
  uint64_t bound = 1;
  uint64_t run_start = 0;
  uint64_t run_length = 0;
};
BchBound bch_bound(const std::vector<uint64_t>& T, uint64_t n);

/// Sharpest BCH bound over the equivalent codes x -> x^a: evaluates
/// bch_bound(aT) for every unit a and keeps the maximum, with the
/// smallest achieving a.  The run data describes the scaled set aT.
struct BchBoundBest {
  BchBound at_best;
  uint64_t unit = 1;
};
BchBoundBest bch_bound_best(const std::vector<uint64_t>& T, uint64_t n);

/// True iff E0 and E1 are each unions of multiplication-by-q orbits on
/// Z_n, are disjoint, cover {1, ..., n-1}, and mu*E0 = E1 and
/// mu*E1 = E0 (the duadic splitting conditions).
bool splitting_check(const std::vector<uint64_t>& e0, const std::vector<uint64_t>& e1,
                     uint64_t mu, uint64_t n, uint64_t q);

/// All units mu swapping the defining sets of the family's (0,0,0) and
/// (1,1,1) codes, ascending; empty when the pair is not a splitting.
std::vector<uint64_t> splitting_units(const CodeContext& ctx, Family fam);

}  // namespace cycodes
