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
#include <utility>
#include <vector>

namespace cycodes {

/// The three order-2 partitions of Z_n^* used to build half-dimension
/// cyclic codes: U splits by the nu-exponent, D by the g-exponent, V by
/// their sum.
enum class Family { U, D, V };

inline char family_letter(Family f) {
  return f == Family::U ? 'U' : f == Family::D ? 'D' : 'V';
}

/// Generalized cyclotomy of order two on Z_n^* for n = n1*n2, a product
/// of distinct odd primes.  With d = gcd(n1-1, n2-1) and
/// e = (n1-1)(n2-1)/d, every unit factors uniquely as g^s nu^i with
/// 0 <= s < e, 0 <= i < d, where g is the canonical common primitive root
/// (CRT lift of the smallest primitive roots mod n1 and n2) and nu is the
/// CRT solution of nu = g (mod n1), nu = 1 (mod n2).
///
/// Classes:  U_c = units with i = c (mod 2), D_c with s = c (mod 2),
/// V_c with s + i = c (mod 2).  Each class has (n1-1)(n2-1)/2 elements;
/// U_0, D_0 and V_0 all contain the subgroup of squares.
struct CyclotomySystem {
  uint64_t n1 = 0, n2 = 0, n = 0;
  uint64_t d = 0, e = 0;
  uint64_t g = 0;   ///< common primitive root of n1 and n2
  uint64_t nu = 0;  ///< g mod n1, 1 mod n2

  /// Per-residue factorization exponents; -1 marks non-units.
  std::vector<int32_t> s_of, i_of;

  bool is_unit(uint64_t x) const { return s_of[x % n] >= 0; }
  /// (s, i) with x = g^s nu^i; throws std::invalid_argument on non-units.
  std::pair<uint64_t, uint64_t> decompose(uint64_t x) const;
  /// Class index (0 or 1) of x in the given family; throws on non-units.
  int class_index(uint64_t x, Family f) const;
  /// All members of class c of the family, ascending.
  std::vector<uint64_t> class_members(Family f, int c) const;
};

/// Smallest primitive root modulo an odd prime p.
uint64_t primitive_root(uint64_t p);

/// Builds the order-2 cyclotomy for distinct odd primes n1, n2; throws
/// std::invalid_argument on bad input.
CyclotomySystem build_system(uint64_t n1, uint64_t n2);

/// True if a mod p is a nonzero quadratic residue modulo the odd prime p.
bool is_qr(uint64_t a, uint64_t p);
/// Ascending nonzero quadratic residues (c = 0) or nonresidues (c = 1).
std::vector<uint64_t> residue_class(uint64_t p, int c);

/// How -1 decomposes: -1 = g^s nu^i.  The closed form says i = 0 and
/// s = e/2 when (n1-1)(n2-1)/d^2 is odd, and i = d/2 otherwise.
struct MinusOneForm {
  uint64_t s = 0, i = 0;
  bool odd_case = false;       ///< (n1-1)(n2-1)/d^2 odd
  bool matches_closed_form = false;
};
MinusOneForm minus_one_form(const CyclotomySystem& sys);

/// Gate for building the eight codes of a family over GF(q): q must lie
/// in class 0 of the family and be a quadratic residue modulo both primes.
struct Admissibility {
  bool ok = false;
  bool q_unit = false;
  bool q_in_class0 = false;
  bool q_qr_n1 = false, q_qr_n2 = false;
  std::string reason;  ///< empty when ok; otherwise the violated condition
};
Admissibility check_admissible(const CyclotomySystem& sys, uint64_t q, Family f);

/// Tests whether D is an (n, |D|, lambda) difference set in Z_n: every
/// nonzero residue must occur the same number lambda of times among the
/// pairwise differences.
struct DiffSetResult {
  bool is_difference_set = false;
  uint64_t lambda = 0;
};
DiffSetResult is_difference_set(uint64_t n, const std::vector<uint64_t>& set);

/// One verified statement tying class membership of small integers (or
/// -1) to congruence conditions on (n1, n2).  `applicable` is false when
/// the statement's hypothesis fails for this pair, in which case nothing
/// is claimed.  For two-sided statements ok = (lhs == rhs); for one-sided
/// ones ok = rhs implies lhs.
struct PredicateResult {
  std::string name;
  uint64_t n1 = 0, n2 = 0;
  bool applicable = true;
  bool two_sided = true;
  bool lhs = false;  ///< class membership side
  bool rhs = false;  ///< congruence side
  bool ok = true;
};

/// Evaluates the full battery of membership-vs-congruence statements on
/// one pair.
std::vector<PredicateResult> congruence_predicates(const CyclotomySystem& sys);

/// Runs congruence_predicates over every pair of distinct odd primes up
/// to max_prime and collects mismatches (ok = false with applicable).
struct ScanReport {
  uint64_t max_prime = 0;
  uint64_t pairs = 0;
  uint64_t checks = 0;
  std::vector<PredicateResult> mismatches;
};
ScanReport inconsistency_scan(uint64_t max_prime);

}  // namespace cycodes
