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

#include "cycodes/cyclotomy.hpp"

#include <numeric>
#include <stdexcept>

#include "cycodes/gf.hpp"

namespace cycodes {

uint64_t primitive_root(uint64_t p) {
  if (!is_prime_u64(p) || p < 3) throw std::invalid_argument("primitive_root: p must be an odd prime");
  for (uint64_t cand = 2; cand < p; ++cand) {
    if (order_mod(cand, p) == p - 1) return cand;
  }
  throw std::runtime_error("primitive_root: none found");
}

namespace {
// CRT solution x with x = a (mod n1), x = b (mod n2), 0 <= x < n1*n2.
uint64_t crt2(uint64_t a, uint64_t n1, uint64_t b, uint64_t n2) {
  uint64_t inv = powmod_u64(n1 % n2, n2 - 2, n2);  // n2 prime
  uint64_t diff = (b + n2 - a % n2) % n2;
  return (a + n1 * mulmod_u64(diff, inv, n2)) % (n1 * n2);
}
}  // namespace

CyclotomySystem build_system(uint64_t n1, uint64_t n2) {
  if (n1 == n2 || n1 < 3 || n2 < 3 || !is_prime_u64(n1) || !is_prime_u64(n2))
    throw std::invalid_argument("build_system: n1, n2 must be distinct odd primes");
  CyclotomySystem sys;
  sys.n1 = n1;
  sys.n2 = n2;
  sys.n = n1 * n2;
  sys.d = std::gcd(n1 - 1, n2 - 1);
  sys.e = (n1 - 1) * (n2 - 1) / sys.d;

  uint64_t g1 = primitive_root(n1), g2 = primitive_root(n2);
  sys.g = crt2(g1, n1, g2, n2);
  sys.nu = crt2(g1, n1, 1, n2);

  sys.s_of.assign(sys.n, -1);
  sys.i_of.assign(sys.n, -1);
  uint64_t nu_pow = 1;
  for (uint64_t i = 0; i < sys.d; ++i) {
    uint64_t x = nu_pow;
    for (uint64_t s = 0; s < sys.e; ++s) {
      if (sys.s_of[x] >= 0) throw std::runtime_error("build_system: representation not unique");
      sys.s_of[x] = static_cast<int32_t>(s);
      sys.i_of[x] = static_cast<int32_t>(i);
      x = mulmod_u64(x, sys.g, sys.n);
    }
    nu_pow = mulmod_u64(nu_pow, sys.nu, sys.n);
  }
  uint64_t units = 0;
  for (uint64_t x = 0; x < sys.n; ++x) units += sys.s_of[x] >= 0;
  if (units != (n1 - 1) * (n2 - 1)) throw std::runtime_error("build_system: units not covered");
  return sys;
}

std::pair<uint64_t, uint64_t> CyclotomySystem::decompose(uint64_t x) const {
  x %= n;
  if (s_of[x] < 0) throw std::invalid_argument("decompose: not a unit");
  return {static_cast<uint64_t>(s_of[x]), static_cast<uint64_t>(i_of[x])};
}

int CyclotomySystem::class_index(uint64_t x, Family f) const {
  auto [s, i] = decompose(x);
  switch (f) {
    case Family::U: return static_cast<int>(i % 2);
    case Family::D: return static_cast<int>(s % 2);
    default: return static_cast<int>((s + i) % 2);
  }
}

std::vector<uint64_t> CyclotomySystem::class_members(Family f, int c) const {
  std::vector<uint64_t> out;
  out.reserve((n1 - 1) * (n2 - 1) / 2);
  for (uint64_t x = 1; x < n; ++x) {
    if (is_unit(x) && class_index(x, f) == c) out.push_back(x);
  }
  return out;
}

bool is_qr(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return false;
  return powmod_u64(a, (p - 1) / 2, p) == 1;
}

std::vector<uint64_t> residue_class(uint64_t p, int c) {
  std::vector<uint64_t> out;
  for (uint64_t a = 1; a < p; ++a) {
    if (is_qr(a, p) == (c == 0)) out.push_back(a);
  }
  return out;
}

MinusOneForm minus_one_form(const CyclotomySystem& sys) {
  MinusOneForm r;
  auto [s, i] = sys.decompose(sys.n - 1);
  r.s = s;
  r.i = i;
  r.odd_case = ((sys.n1 - 1) * (sys.n2 - 1) / (sys.d * sys.d)) % 2 == 1;
  r.matches_closed_form = r.odd_case ? (i == 0 && s == sys.e / 2) : (i == sys.d / 2);
  return r;
}

Admissibility check_admissible(const CyclotomySystem& sys, uint64_t q, Family f) {
  Admissibility a;
  a.q_unit = sys.is_unit(q);
  if (!a.q_unit) {
    a.reason = "q is not a unit modulo n1*n2";
    return a;
  }
  a.q_in_class0 = sys.class_index(q, f) == 0;
  a.q_qr_n1 = is_qr(q, sys.n1);
  a.q_qr_n2 = is_qr(q, sys.n2);
  if (!a.q_in_class0) {
    a.reason = std::string("q lies in ") + family_letter(f) + "_1, not " + family_letter(f) + "_0";
  } else if (!a.q_qr_n1) {
    a.reason = "q is a quadratic nonresidue modulo n1";
  } else if (!a.q_qr_n2) {
    a.reason = "q is a quadratic nonresidue modulo n2";
  } else {
    a.ok = true;
  }
  return a;
}

DiffSetResult is_difference_set(uint64_t n, const std::vector<uint64_t>& set) {
  std::vector<uint64_t> count(n, 0);
  for (uint64_t a : set) {
    for (uint64_t b : set) {
      if (a != b) ++count[(a + n - b % n) % n];
    }
  }
  DiffSetResult r;
  r.lambda = n > 1 ? count[1] : 0;
  for (uint64_t x = 1; x < n; ++x) {
    if (count[x] != r.lambda) return {false, 0};
  }
  r.is_difference_set = true;
  return r;
}

// ---------------------------------------------------------------------------
// membership-vs-congruence statements
// ---------------------------------------------------------------------------

namespace {

bool pm1(uint64_t p, uint64_t mod) {  // p = +-1 (mod mod)
  uint64_t r = p % mod;
  return r == 1 || r == mod - 1;
}

// x in class 0 of family f, treating non-units as "no".
bool in_class0(const CyclotomySystem& sys, uint64_t x, Family f) {
  return sys.is_unit(x) && sys.class_index(x, f) == 0;
}

}  // namespace

std::vector<PredicateResult> congruence_predicates(const CyclotomySystem& sys) {
  const uint64_t n1 = sys.n1, n2 = sys.n2, n = sys.n;
  std::vector<PredicateResult> out;
  auto add = [&](std::string name, bool applicable, bool two_sided, bool lhs, bool rhs) {
    PredicateResult r;
    r.name = std::move(name);
    r.n1 = n1;
    r.n2 = n2;
    r.applicable = applicable;
    r.two_sided = two_sided;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ok = !applicable || (two_sided ? lhs == rhs : (!rhs || lhs));
    out.push_back(std::move(r));
  };

  bool qr3_both = is_qr(3, n1) && is_qr(3, n2);
  bool qr4_both = is_qr(4, n1) && is_qr(4, n2);
  bool qnr_m1_n1 = !is_qr(n1 - 1, n1), qnr_m1_n2 = !is_qr(n2 - 1, n2);
  MinusOneForm mform = minus_one_form(sys);
  bool m1_in_U1 = sys.class_index(n - 1, Family::U) == 1;
  bool m1_in_D1 = sys.class_index(n - 1, Family::D) == 1;
  bool m1_in_V1 = sys.class_index(n - 1, Family::V) == 1;

  // -1 = g^(e/2) or has nu-exponent d/2, depending on the parity of
  // (n1-1)(n2-1)/d^2.
  add("minus_one_closed_form", true, true, mform.matches_closed_form, true);

  // U family -------------------------------------------------------------
  add("2_in_U0_iff_both_pm1_or_both_pm3_mod8", true, true, in_class0(sys, 2, Family::U),
      (pm1(n1, 8) && pm1(n2, 8)) || ((n1 % 8 == 3 || n1 % 8 == 5) && (n2 % 8 == 3 || n2 % 8 == 5)));
  add("3_in_U0_and_qr_both_iff_both_pm1_mod12", true, true,
      in_class0(sys, 3, Family::U) && qr3_both, pm1(n1, 12) && pm1(n2, 12));
  add("4_in_U0_and_qr_both_iff_both_pm1_mod4", true, true,
      in_class0(sys, 4, Family::U) && qr4_both, pm1(n1, 4) && pm1(n2, 4));

  // No element of U_1 is a nonresidue modulo both primes; but U_1 holds
  // elements that are a residue on one side and a nonresidue on the other,
  // in both orientations.
  {
    bool qnr_both = false, qr_qnr = false, qnr_qr = false;
    for (uint64_t x = 1; x < n; ++x) {
      if (!sys.is_unit(x) || sys.class_index(x, Family::U) != 1) continue;
      bool r1 = is_qr(x, n1), r2 = is_qr(x, n2);
      qnr_both |= !r1 && !r2;
      qr_qnr |= r1 && !r2;
      qnr_qr |= !r1 && r2;
    }
    add("U1_has_no_nonresidue_both", true, true, !qnr_both, true);
    add("U1_has_mixed_residue_elements_both_ways", true, true, qr_qnr && qnr_qr, true);
  }

  // D family -------------------------------------------------------------
  add("2_in_D0_iff_n2_pm1_mod8", true, true, in_class0(sys, 2, Family::D), pm1(n2, 8));
  add("3_in_D0_and_qr_both_iff_both_pm1_mod12", true, true,
      in_class0(sys, 3, Family::D) && qr3_both, pm1(n1, 12) && pm1(n2, 12));
  add("4_in_D0_and_qr_both_iff_both_pm1_mod4", true, true,
      in_class0(sys, 4, Family::D) && qr4_both, pm1(n1, 4) && pm1(n2, 4));
  add("minus_one_in_D1_iff_n2_minus1_mod8", pm1(n1, 8) && pm1(n2, 8), true, m1_in_D1, n2 % 8 == 7);
  add("minus_one_in_D1_and_qnr_both_when_both_minus1_mod4", n1 % 4 == 3 && n2 % 4 == 3, false,
      m1_in_D1 && qnr_m1_n1 && qnr_m1_n2, true);

  // V family -------------------------------------------------------------
  add("2_in_V0_and_qr_both_iff_both_pm1_mod8", true, true,
      in_class0(sys, 2, Family::V) && is_qr(2, n1) && is_qr(2, n2), pm1(n1, 8) && pm1(n2, 8));
  add("3_in_V0_and_qr_both_iff_both_pm1_mod12", true, true,
      in_class0(sys, 3, Family::V) && qr3_both, pm1(n1, 12) && pm1(n2, 12));
  add("4_in_V0_and_qr_both_if_both_pm1_mod4", true, false,
      in_class0(sys, 4, Family::V) && qr4_both, pm1(n1, 4) && pm1(n2, 4));
  add("minus_one_in_V1_and_qnr_both_iff_both_minus1_mod8", pm1(n1, 8) && pm1(n2, 8), true,
      m1_in_V1 && qnr_m1_n1 && qnr_m1_n2, n1 % 8 == 7 && n2 % 8 == 7);
  add("minus_one_in_V1_and_qnr_both_iff_both_minus1_mod4", true, true,
      m1_in_V1 && qnr_m1_n1 && qnr_m1_n2, n1 % 4 == 3 && n2 % 4 == 3);

  // witnesses needed by the square-root bounds: D_1 holds an element that
  // is a nonresidue on both sides (any g^s nu^i with s odd, i even), and
  // g itself is such an element of V_1.
  {
    bool d1_qnr_both = false;
    for (uint64_t x = 1; x < n && !d1_qnr_both; ++x) {
      if (sys.is_unit(x) && sys.class_index(x, Family::D) == 1 && !is_qr(x, n1) && !is_qr(x, n2))
        d1_qnr_both = true;
    }
    add("D1_has_nonresidue_both", true, true, d1_qnr_both, true);
    add("g_is_V1_nonresidue_both_witness", true, true,
        sys.class_index(sys.g, Family::V) == 1 && !is_qr(sys.g, n1) && !is_qr(sys.g, n2), true);
  }

  // Subgroup/coset laws: each class 0 is an index-2 subgroup of Z_n^* of
  // order (n1-1)(n2-1)/2 and class 1 its coset, i.e. the class index is a
  // homomorphism onto Z_2.  Checked brute-force over all unit pairs.
  {
    std::vector<uint64_t> units;
    for (uint64_t x = 1; x < n; ++x)
      if (sys.is_unit(x)) units.push_back(x);
    std::vector<uint8_t> cu(n, 0), cd(n, 0), cv(n, 0);
    for (uint64_t x : units) {
      cu[x] = static_cast<uint8_t>(sys.class_index(x, Family::U));
      cd[x] = static_cast<uint8_t>(sys.class_index(x, Family::D));
      cv[x] = static_cast<uint8_t>(sys.class_index(x, Family::V));
    }
    uint64_t half = (n1 - 1) * (n2 - 1) / 2;
    uint64_t u0 = 0, d0 = 0, v0 = 0;
    for (uint64_t x : units) {
      u0 += cu[x] == 0;
      d0 += cd[x] == 0;
      v0 += cv[x] == 0;
    }
    bool hom_u = cu[1] == 0 && u0 == half;
    bool hom_d = cd[1] == 0 && d0 == half;
    bool hom_v = cv[1] == 0 && v0 == half;
    for (uint64_t a : units) {
      for (uint64_t b : units) {
        uint64_t ab = a * b % n;
        hom_u &= cu[ab] == (cu[a] ^ cu[b]);
        hom_d &= cd[ab] == (cd[a] ^ cd[b]);
        hom_v &= cv[ab] == (cv[a] ^ cv[b]);
      }
      if (!(hom_u || hom_d || hom_v)) break;
    }
    add("U0_subgroup_and_translation_law", true, true, hom_u, true);
    add("D0_subgroup_and_translation_law", true, true, hom_d, true);
    add("V0_subgroup_and_translation_law", true, true, hom_v, true);
  }

  (void)m1_in_U1;
  return out;
}

ScanReport inconsistency_scan(uint64_t max_prime) {
  ScanReport report;
  report.max_prime = max_prime;
  std::vector<uint64_t> primes;
  for (uint64_t p = 3; p <= max_prime; p += 2) {
    if (is_prime_u64(p)) primes.push_back(p);
  }
  for (size_t a = 0; a < primes.size(); ++a) {
    for (size_t b = 0; b < primes.size(); ++b) {
      if (a == b) continue;
      ++report.pairs;
      CyclotomySystem sys = build_system(primes[a], primes[b]);
      for (auto& r : congruence_predicates(sys)) {
        ++report.checks;
        if (!r.ok) report.mismatches.push_back(r);
      }
    }
  }
  return report;
}

}  // namespace cycodes
