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

#include "cycodes/polyring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cycodes {

namespace {

void normalize(Poly& a) {
  while (!a.c.empty() && a.f->is_zero(a.c.back())) a.c.pop_back();
}

void require_same_field(const Poly& a, const Poly& b) {
  if (a.f != b.f) throw std::invalid_argument("poly: mixed field contexts");
}

}  // namespace

Poly poly_zero(const FieldCtx& f) { return Poly{&f, {}}; }

Poly poly_one(const FieldCtx& f) { return Poly{&f, {f.one()}}; }

Poly poly_from_values(const FieldCtx& f, const std::vector<uint64_t>& vals) {
  Poly p{&f, {}};
  p.c.reserve(vals.size());
  for (uint64_t v : vals) p.c.push_back(f.from_value(v));
  normalize(p);
  return p;
}

Poly poly_xn_minus_1(const FieldCtx& f, uint64_t n) {
  Poly p{&f, std::vector<FieldElem>(n + 1)};
  p.c[0] = f.neg(f.one());
  p.c[n] = f.one();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly r{a.f, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    FieldElem x = i < a.c.size() ? a.c[i] : a.f->zero();
    FieldElem y = i < b.c.size() ? b.c[i] : a.f->zero();
    r.c[i] = a.f->add(x, y);
  }
  normalize(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly r{a.f, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    FieldElem x = i < a.c.size() ? a.c[i] : a.f->zero();
    FieldElem y = i < b.c.size() ? b.c[i] : a.f->zero();
    r.c[i] = a.f->sub(x, y);
  }
  normalize(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return poly_zero(*a.f);
  Poly r{a.f, std::vector<FieldElem>(a.c.size() + b.c.size() - 1)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.f->is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = a.f->add(r.c[i + j], a.f->mul(a.c[i], b.c[j]));
    }
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  Poly rem = a;
  if (a.degree() < b.degree()) return {poly_zero(*a.f), rem};
  Poly quot{a.f, std::vector<FieldElem>(static_cast<size_t>(a.degree() - b.degree() + 1))};
  FieldElem lead_inv = a.f->inv(b.c.back());
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem.degree() < i) continue;
    FieldElem coeff = a.f->mul(rem.c[static_cast<size_t>(i)], lead_inv);
    if (a.f->is_zero(coeff)) continue;
    quot.c[static_cast<size_t>(i - b.degree())] = coeff;
    for (int j = 0; j <= b.degree(); ++j) {
      size_t idx = static_cast<size_t>(i - b.degree() + j);
      rem.c[idx] = a.f->sub(rem.c[idx], a.f->mul(coeff, b.c[static_cast<size_t>(j)]));
    }
    normalize(rem);
  }
  normalize(quot);
  return {quot, rem};
}

Poly poly_gcd(Poly a, Poly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && !(a.c.back() == a.f->one())) {
    FieldElem inv = a.f->inv(a.c.back());
    for (auto& x : a.c) x = a.f->mul(x, inv);
  }
  return a;
}

FieldElem poly_eval(const Poly& a, const FieldElem& x) {
  FieldElem acc = a.f->zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = a.f->add(a.f->mul(acc, x), a.c[i]);
  return acc;
}

int poly_compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    uint64_t va = a.f->value(a.c[static_cast<size_t>(i)]);
    uint64_t vb = b.f->value(b.c[static_cast<size_t>(i)]);
    if (va != vb) return va < vb ? -1 : 1;
  }
  return 0;
}

namespace {

Poly poly_powmod(Poly b, uint64_t e, const Poly& f) {
  Poly r = poly_one(*b.f);
  b = poly_divmod(b, f).second;
  while (e > 0) {
    if (e & 1) r = poly_divmod(poly_mul(r, b), f).second;
    b = poly_divmod(poly_mul(b, b), f).second;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool poly_is_irreducible(const Poly& a) {
  int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  Poly f = a;
  if (!(f.c.back() == f.f->one())) {
    FieldElem lead_inv = f.f->inv(f.c.back());
    for (auto& c : f.c) c = f.f->mul(c, lead_inv);
  }
  const uint64_t q = f.f->order;
  Poly x = poly_from_values(*f.f, {0, 1});
  // frob[j] = x^(q^j) mod f, built by repeated q-th powers (the q-power
  // map is a ring homomorphism of GF(q)[x]/(f))
  std::vector<uint64_t> proper_powers;
  for (uint64_t r : prime_factors(static_cast<uint64_t>(d)))
    proper_powers.push_back(static_cast<uint64_t>(d) / r);
  Poly cur = x;
  for (uint64_t j = 1; j <= static_cast<uint64_t>(d); ++j) {
    cur = poly_powmod(cur, q, f);
    if (std::find(proper_powers.begin(), proper_powers.end(), j) != proper_powers.end()) {
      if (!(poly_gcd(poly_sub(cur, x), f) == poly_one(*f.f))) return false;
    }
  }
  // deg f >= 2 here, so x is already reduced mod f
  return cur == x;
}

std::string to_display(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    uint64_t v = a.f->value(a.c[static_cast<size_t>(i)]);
    if (v == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coeff;
    if (a.f->order == 4 && v >= 2) {
      coeff = v == 2 ? "w" : "w^2";
    } else if (v != 1) {
      coeff = a.f->m == 1 ? std::to_string(v) : "e" + std::to_string(v);
    }
    if (i == 0) {
      out += coeff.empty() ? "1" : coeff;
    } else {
      out += coeff;
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t q, uint64_t n, CosetFlavor flavor) {
  if (std::gcd(q, n) != 1) throw std::invalid_argument("cyclotomic_cosets: q and n not coprime");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint64_t>> out;
  for (uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    if (flavor == CosetFlavor::kUnitsSubgroup && std::gcd(start, n) != 1) continue;
    std::vector<uint64_t> orbit;
    uint64_t x = start;
    do {
      orbit.push_back(x);
      seen[x] = true;
      x = mulmod_u64(x, q, n);
    } while (x != start);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_union_of_cosets(uint64_t q, uint64_t n, const std::vector<uint64_t>& T) {
  std::vector<bool> in(n, false);
  for (uint64_t t : T) {
    if (t >= n) return false;
    in[t] = true;
  }
  for (uint64_t t : T) {
    if (!in[mulmod_u64(t, q, n)]) return false;
  }
  return true;
}

RootSystem build_root_system(uint64_t q, uint64_t n) {
  if (q < 2) throw std::invalid_argument("build_root_system: q < 2");
  uint64_t p = prime_factors(q).size() == 1 ? prime_factors(q)[0] : 0;
  if (p == 0) throw std::invalid_argument("build_root_system: q is not a prime power");
  uint64_t k = 0, t = q;
  while (t > 1) t /= p, ++k;
  uint64_t check = 1;
  for (uint64_t i = 0; i < k; ++i) check *= p;
  if (check != q) throw std::invalid_argument("build_root_system: q is not a prime power");
  if (std::gcd(q, n) != 1) throw std::invalid_argument("build_root_system: q and n not coprime");

  RootSystem rs;
  rs.q = q;
  rs.n = n;
  rs.N = order_mod(q, n);
  rs.base = &field_cached(p, k);
  rs.ext = &field_cached(p, k * rs.N);
  rs.embed = subfield_embed(*rs.base, *rs.ext);
  rs.theta = rs.ext->nth_root_of_unity(n);
  rs.theta_pow.resize(n);
  rs.theta_pow[0] = rs.ext->one();
  for (uint64_t i = 1; i < n; ++i) rs.theta_pow[i] = rs.ext->mul(rs.theta_pow[i - 1], rs.theta);
  return rs;
}

namespace {

// Balanced product of the linear factors (x - theta^e) for exps[lo..hi).
Poly linear_product(const RootSystem& rs, const std::vector<uint64_t>& exps, size_t lo, size_t hi) {
  if (hi - lo == 1) {
    Poly p{rs.ext, {rs.ext->neg(rs.theta_pow[exps[lo] % rs.n]), rs.ext->one()}};
    return p;
  }
  size_t mid = lo + (hi - lo) / 2;
  return poly_mul(linear_product(rs, exps, lo, mid), linear_product(rs, exps, mid, hi));
}

}  // namespace

Poly product_over_roots_ext(const RootSystem& rs, const std::vector<uint64_t>& exps) {
  if (exps.empty()) return poly_one(*rs.ext);
  std::vector<uint64_t> sorted = exps;
  std::sort(sorted.begin(), sorted.end());
  return linear_product(rs, sorted, 0, sorted.size());
}

Poly product_over_roots(const RootSystem& rs, const std::vector<uint64_t>& exps, bool require_base) {
  Poly ext_poly = product_over_roots_ext(rs, exps);
  Poly base_poly{rs.base, {}};
  base_poly.c.reserve(ext_poly.c.size());
  for (const FieldElem& coeff : ext_poly.c) {
    // base-field test: fixed by the Frobenius x -> x^q
    if (!(rs.ext->pow(coeff, rs.q) == coeff)) {
      if (require_base) throw std::domain_error("product_over_roots: coefficients not in the base field");
      return ext_poly;
    }
    FieldElem down;
    if (!rs.embed.down(coeff, &down)) {
      if (require_base) throw std::domain_error("product_over_roots: coefficients not in the base field");
      return ext_poly;
    }
    base_poly.c.push_back(down);
  }
  return base_poly;
}

FactorList factor_xn_minus_1(uint64_t n1, uint64_t n2, uint64_t q) {
  uint64_t n = n1 * n2;
  RootSystem rs = build_root_system(q, n);
  FactorList list;
  list.n1 = n1;
  list.n2 = n2;
  list.q = q;

  for (auto& coset : cyclotomic_cosets(q, n, CosetFlavor::kFullPartition)) {
    LabeledFactor f;
    f.poly = product_over_roots(rs, coset, /*require_base=*/true);
    if (coset == std::vector<uint64_t>{0}) {
      f.block = 0;
    } else if (std::all_of(coset.begin(), coset.end(), [&](uint64_t x) { return x % n2 == 0; })) {
      f.block = 1;  // roots are powers of theta^{n2}: divides x^{n1} - 1 side
    } else if (std::all_of(coset.begin(), coset.end(), [&](uint64_t x) { return x % n1 == 0; })) {
      f.block = 2;
    } else {
      f.block = 3;
    }
    f.coset = std::move(coset);
    list.factors.push_back(std::move(f));
  }
  std::sort(list.factors.begin(), list.factors.end(),
            [](const LabeledFactor& a, const LabeledFactor& b) { return poly_compare(a.poly, b.poly) < 0; });

  // labels: f<degree> when the degree class is a singleton, else
  // f<degree><index> with index following the sort order
  std::map<int, int> degree_count, degree_seen;
  for (auto& f : list.factors) ++degree_count[f.poly.degree()];
  for (auto& f : list.factors) {
    int d = f.poly.degree();
    int idx = ++degree_seen[d];
    f.label = "f" + std::to_string(d) + (degree_count[d] > 1 ? std::to_string(idx) : "");
  }
  return list;
}

bool verify_master_factorization(uint64_t n1, uint64_t n2, uint64_t q, Family fam) {
  CyclotomySystem sys = build_system(n1, n2);
  Admissibility adm = check_admissible(sys, q, fam);
  if (!adm.ok) throw std::invalid_argument("verify_master_factorization: " + adm.reason);
  uint64_t n = sys.n;
  RootSystem rs = build_root_system(q, n);

  auto scaled = [&](uint64_t scale, uint64_t prime, int cls) {
    std::vector<uint64_t> exps;
    for (uint64_t j : residue_class(prime, cls)) exps.push_back(scale * j % n);
    return product_over_roots(rs, exps, true);
  };
  Poly d0n1 = scaled(n2, n1, 0), d1n1 = scaled(n2, n1, 1);
  Poly d0n2 = scaled(n1, n2, 0), d1n2 = scaled(n1, n2, 1);
  Poly c0 = product_over_roots(rs, sys.class_members(fam, 0), true);
  Poly c1 = product_over_roots(rs, sys.class_members(fam, 1), true);
  Poly x_minus_1 = product_over_roots(rs, {0}, true);

  Poly prod = poly_mul(poly_mul(poly_mul(x_minus_1, d0n1), poly_mul(d0n2, c0)), poly_mul(poly_mul(d1n1, d1n2), c1));
  if (!(prod == poly_xn_minus_1(*rs.base, n))) return false;

  // (x-1)(x^n-1) = (x^{n1}-1)(x^{n2}-1) c0 c1
  Poly lhs = poly_mul(x_minus_1, poly_xn_minus_1(*rs.base, n));
  Poly rhs = poly_mul(poly_mul(poly_xn_minus_1(*rs.base, n1), poly_xn_minus_1(*rs.base, n2)), poly_mul(c0, c1));
  return lhs == rhs;
}

}  // namespace cycodes
