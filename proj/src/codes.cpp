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

#include "cycodes/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycodes {

CodeContext::CodeContext(uint64_t n1, uint64_t n2, uint64_t q)
    : sys_(build_system(n1, n2)),
      rs_(build_root_system(q, n1 * n2)),
      fl_(factor_xn_minus_1(n1, n2, q)) {}

std::vector<uint64_t> CodeContext::defining_set(Family fam, FamilyTriple t, bool even_like) const {
  Admissibility adm = check_admissible(sys_, rs_.q, fam);
  if (!adm.ok) throw std::invalid_argument("defining_set: " + adm.reason);
  if ((t.i | t.j | t.h) < 0 || t.i > 1 || t.j > 1 || t.h > 1)
    throw std::invalid_argument("defining_set: triple entries must be 0 or 1");

  std::vector<uint64_t> T = sys_.class_members(fam, t.i);
  for (uint64_t j : residue_class(sys_.n1, t.j)) T.push_back(sys_.n2 * j % sys_.n);
  for (uint64_t j : residue_class(sys_.n2, t.h)) T.push_back(sys_.n1 * j % sys_.n);
  if (even_like) T.push_back(0);
  std::sort(T.begin(), T.end());
  return T;
}

CyclicCode CodeContext::construct(Family fam, FamilyTriple t, bool even_like) const {
  CyclicCode c;
  c.n = sys_.n;
  c.q = rs_.q;
  c.defining_set = defining_set(fam, t, even_like);
  c.gen = product_over_roots(rs_, c.defining_set);
  c.field = c.gen.f;
  c.k = c.n - c.defining_set.size();
  c.label = std::string(1, family_letter(fam)) + "(" + std::to_string(t.i) + "," +
            std::to_string(t.j) + "," + std::to_string(t.h) + ")" +
            (even_like ? ",even-like" : "");
  return c;
}

CyclicCode CodeContext::map_code(const CyclicCode& c, uint64_t ell) const {
  uint64_t n = sys_.n;
  if (std::gcd(ell % n, n) != 1) throw std::invalid_argument("map_code: ell is not a unit mod n");
  uint64_t inv = powmod_u64(ell % n, order_mod(ell % n, n) - 1, n);
  CyclicCode out;
  out.n = c.n;
  out.q = c.q;
  out.label = c.label;
  out.k = c.k;
  for (uint64_t t : c.defining_set) out.defining_set.push_back(t * inv % n);
  std::sort(out.defining_set.begin(), out.defining_set.end());
  out.gen = product_over_roots(rs_, out.defining_set);
  out.field = out.gen.f;
  return out;
}

CyclicCode code_from_defining_set(const RootSystem& rs, std::vector<uint64_t> T,
                                  std::string label) {
  uint64_t n = rs.n;
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());
  if (!T.empty() && T.back() >= n)
    throw std::invalid_argument("code_from_defining_set: exponent out of range");
  if (!is_union_of_cosets(rs.q, n, T))
    throw std::invalid_argument(
        "code_from_defining_set: set is not closed under multiplication by q mod n");
  CyclicCode c;
  c.n = n;
  c.q = rs.q;
  c.defining_set = std::move(T);
  c.gen = product_over_roots(rs, c.defining_set);
  c.field = c.gen.f;
  c.k = n - c.defining_set.size();
  c.label = std::move(label);
  return c;
}

namespace {

// Advances idx (ascending positions into 0..m-1) to the next combination
// in lexicographic order; false when exhausted.
bool next_combination(std::vector<size_t>& idx, size_t m) {
  size_t h = idx.size();
  for (size_t r = h; r-- > 0;) {
    if (idx[r] + (h - r) < m) {
      ++idx[r];
      for (size_t s = r + 1; s < h; ++s) idx[s] = idx[s - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<size_t> first_combination(size_t h) {
  std::vector<size_t> idx(h);
  std::iota(idx.begin(), idx.end(), size_t{0});
  return idx;
}

}  // namespace

Census census_half_dim(const CodeContext& ctx) {
  Census out;
  std::vector<size_t> block1, block2, block3;
  for (size_t i = 0; i < ctx.factors().factors.size(); ++i) {
    int b = ctx.factors().factors[i].block;
    if (b == 1) block1.push_back(i);
    if (b == 2) block2.push_back(i);
    if (b == 3) block3.push_back(i);
  }

  auto odd_report = [&](const char* side, size_t count) {
    if (!out.obstruction.empty()) out.obstruction += "; ";
    out.obstruction += "(" + std::string(side) + "-1)/ord(q) = " + std::to_string(count) +
                       " factors on the " + side + " side, which cannot be halved";
  };
  if (block1.size() % 2 != 0) odd_report("n1", block1.size());
  if (block2.size() % 2 != 0) odd_report("n2", block2.size());
  if (block3.size() % 2 != 0 && out.obstruction.empty())
    odd_report("n", block3.size());
  if (!out.obstruction.empty()) return out;

  const FactorList& fl = ctx.factors();
  uint64_t n = ctx.n();
  auto build = [&](const std::vector<size_t>& chosen) {
    CyclicCode c;
    c.n = n;
    c.q = ctx.q();
    c.gen = poly_one(*fl.factors.front().poly.f);
    for (size_t i : chosen) {
      const LabeledFactor& f = fl.factors[i];
      c.label += f.label;
      c.gen = poly_mul(c.gen, f.poly);
      c.defining_set.insert(c.defining_set.end(), f.coset.begin(), f.coset.end());
    }
    std::sort(c.defining_set.begin(), c.defining_set.end());
    c.field = c.gen.f;
    c.k = n - c.defining_set.size();
    out.codes.push_back(std::move(c));
  };

  auto s1 = first_combination(block1.size() / 2);
  do {
    auto s2 = first_combination(block2.size() / 2);
    do {
      auto s3 = first_combination(block3.size() / 2);
      do {
        std::vector<size_t> chosen;
        for (size_t i : s1) chosen.push_back(block1[i]);
        for (size_t i : s2) chosen.push_back(block2[i]);
        for (size_t i : s3) chosen.push_back(block3[i]);
        std::sort(chosen.begin(), chosen.end());
        build(chosen);
      } while (next_combination(s3, block3.size()));
    } while (next_combination(s2, block2.size()));
  } while (next_combination(s1, block1.size()));
  return out;
}

BchBound bch_bound(const std::vector<uint64_t>& T, uint64_t n) {
  std::vector<bool> in(n, false);
  for (uint64_t t : T) in.at(t % n) = true;
  BchBound best{1, 0, 0};
  bool all = std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  if (all) return {n + 1, 0, n};
  for (uint64_t s = 0; s < n; ++s) {
    if (!in[s] || in[(s + n - 1) % n]) continue;  // only run starts
    uint64_t len = 0;
    while (in[(s + len) % n]) ++len;
    if (len > best.run_length) best = {len + 1, s, len};
  }
  return best;
}

BchBoundBest bch_bound_best(const std::vector<uint64_t>& T, uint64_t n) {
  BchBoundBest best;
  best.at_best = bch_bound(T, n);
  best.unit = 1;
  std::vector<uint64_t> scaled(T.size());
  for (uint64_t a = 2; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (size_t i = 0; i < T.size(); ++i) scaled[i] = T[i] * a % n;
    BchBound b = bch_bound(scaled, n);
    if (b.bound > best.at_best.bound) {
      best.at_best = b;
      best.unit = a;
    }
  }
  return best;
}

bool splitting_check(const std::vector<uint64_t>& e0, const std::vector<uint64_t>& e1,
                     uint64_t mu, uint64_t n, uint64_t q) {
  if (n < 2 || std::gcd(mu % n, n) != 1 || std::gcd(q % n, n) != 1) return false;
  std::vector<uint8_t> side(n, 0);  // 0 = outside, 1 = E0, 2 = E1
  for (uint64_t x : e0) {
    if (x == 0 || x >= n || side[x]) return false;
    side[x] = 1;
  }
  for (uint64_t x : e1) {
    if (x == 0 || x >= n || side[x]) return false;
    side[x] = 2;
  }
  for (uint64_t x = 1; x < n; ++x) {
    if (!side[x]) return false;                      // must cover 1..n-1
    if (side[x * q % n] != side[x]) return false;    // coset closure
    uint64_t want = side[x] == 1 ? 2 : 1;
    if (side[x * (mu % n) % n] != want) return false;  // mu swaps the halves
  }
  return true;
}

std::vector<uint64_t> splitting_units(const CodeContext& ctx, Family fam) {
  std::vector<uint64_t> e0 = ctx.defining_set(fam, {0, 0, 0});
  std::vector<uint64_t> e1 = ctx.defining_set(fam, {1, 1, 1});
  std::vector<uint64_t> out;
  uint64_t n = ctx.n();
  for (uint64_t mu = 1; mu < n; ++mu) {
    if (std::gcd(mu, n) != 1) continue;
    if (splitting_check(e0, e1, mu, n, ctx.q())) out.push_back(mu);
  }
  return out;
}

}  // namespace cycodes
