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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "cycodes/codes.hpp"

using namespace cycodes;

namespace {

const std::vector<FamilyTriple> kTriples = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                            {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};

void check_code_invariants(const CodeContext& ctx, const CyclicCode& c) {
  CHECK(c.k == c.n - c.defining_set.size());
  CHECK(static_cast<uint64_t>(c.gen.degree()) == c.defining_set.size());
  CHECK(is_union_of_cosets(c.q, c.n, c.defining_set));
  Poly xn1 = poly_xn_minus_1(*c.field, c.n);
  auto [quot, rem] = poly_divmod(xn1, c.gen);
  CHECK(rem.is_zero());
  CHECK(poly_mul(quot, c.gen) == xn1);
  // every defining-set exponent really is a root of the generator
  for (uint64_t t : {c.defining_set.front(), c.defining_set.back()}) {
    Poly up{ctx.roots().ext, {}};
    for (const FieldElem& co : c.gen.c) up.c.push_back(ctx.roots().embed.up(co));
    CHECK(ctx.roots().ext->is_zero(poly_eval(up, ctx.roots().theta_pow[t])));
  }
}

}  // namespace

TEST_CASE("the eight family codes have half dimension and clean generators") {
  CodeContext b(7, 17, 2), t(11, 13, 3), f(5, 7, 4);
  for (Family fam : {Family::U, Family::D, Family::V}) {
    CAPTURE(family_letter(fam));
    for (FamilyTriple tr : kTriples) {
      INFO("triple (", tr.i, ",", tr.j, ",", tr.h, ")");
      CyclicCode cb = b.construct(fam, tr);
      CHECK(cb.n == 119);
      CHECK(cb.k == 60);
      check_code_invariants(b, cb);

      CyclicCode ct = t.construct(fam, tr);
      CHECK(ct.n == 143);
      CHECK(ct.k == 72);
      check_code_invariants(t, ct);

      CyclicCode cf = f.construct(fam, tr);
      CHECK(cf.n == 35);
      CHECK(cf.k == 18);
      check_code_invariants(f, cf);
    }
  }
  CHECK(b.construct(Family::U, {0, 0, 0}).label == "U(0,0,0)");
  CHECK(f.construct(Family::V, {1, 0, 1}).label == "V(1,0,1)");
}

TEST_CASE("the binary (0,0,0) defining set matches the published list") {
  CodeContext ctx(7, 17, 2);
  const std::vector<uint64_t> published = {
      1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 14, 15,  16,  17,  18,  20,  24,  25, 27,
      28, 30, 31, 32, 34, 36, 40, 41, 43, 45, 48, 50, 53,  54,  56,  60,  61,  62,  63, 64,
      67, 68, 72, 73, 75, 80, 81, 82, 86, 90, 91, 93, 96,  97,  100, 105, 106, 108, 112};
  CHECK(ctx.defining_set(Family::U, {0, 0, 0}) == published);
  CHECK(published.size() == 59);
}

TEST_CASE("even-like subcodes adjoin the root 1") {
  CodeContext ctx(7, 17, 2);
  CyclicCode odd = ctx.construct(Family::D, {0, 0, 0});
  CyclicCode even = ctx.construct(Family::D, {0, 0, 0}, /*even_like=*/true);
  CHECK(even.k == 59);
  CHECK(even.defining_set.front() == 0);
  CHECK(even.label == "D(0,0,0),even-like");
  const FieldCtx& f2 = *even.field;
  CHECK(f2.is_zero(poly_eval(even.gen, f2.one())));
  CHECK(!f2.is_zero(poly_eval(odd.gen, f2.one())));
  // generator gains exactly the factor x - 1
  CHECK(poly_mul(odd.gen, poly_from_values(f2, {1, 1})) == even.gen);
}

TEST_CASE("inadmissible labels are refused with the violated condition") {
  CodeContext bad(5, 11, 2);
  // 2 does lie in U_0 for (5,11), so the refusal names the residue condition
  CHECK_THROWS_WITH_AS(bad.construct(Family::U, {0, 0, 0}),
                       "defining_set: q is a quadratic nonresidue modulo n1", std::invalid_argument);
  // ...while for D the class membership itself fails
  CHECK_THROWS_WITH_AS(bad.construct(Family::D, {0, 0, 0}),
                       "defining_set: q lies in D_1, not D_0", std::invalid_argument);
  CodeContext bad2(5, 11, 3);  // 3 is a nonresidue mod 5
  CHECK_THROWS_AS(bad2.construct(Family::U, {0, 0, 0}), std::invalid_argument);
  CodeContext ok(7, 17, 2);
  CHECK_THROWS_AS(ok.construct(Family::U, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("coordinate maps x -> x^ell act on defining sets as division") {
  CodeContext ctx(7, 17, 2);
  CyclicCode c = ctx.construct(Family::D, {0, 0, 0});

  CyclicCode same = ctx.map_code(c, 1);
  CHECK(same.defining_set == c.defining_set);
  CHECK(same.gen == c.gen);

  // 3 = g sits in D_1 and is a nonresidue mod 7 and mod 17: the map sends
  // the (0,0,0) code to the (1,1,1) code
  CyclicCode swapped = ctx.map_code(c, 3);
  CyclicCode target = ctx.construct(Family::D, {1, 1, 1});
  CHECK(swapped.defining_set == target.defining_set);
  CHECK(swapped.gen == target.gen);

  // round trip with the inverse unit: 3 * 40 = 120 = 1 mod 119
  CyclicCode back = ctx.map_code(swapped, 40);
  CHECK(back.defining_set == c.defining_set);
  CHECK(back.gen == c.gen);

  CHECK_THROWS_AS(ctx.map_code(c, 7), std::invalid_argument);

  CodeContext q4(5, 7, 4);
  CyclicCode v0 = q4.construct(Family::V, {0, 0, 0});
  CyclicCode v_img = q4.map_code(v0, q4.sys().g);  // g = 17
  CHECK(v_img.defining_set == q4.construct(Family::V, {1, 1, 1}).defining_set);
}

TEST_CASE("half-dimension census: counts, order, and one code per selection") {
  CodeContext b(7, 17, 2);
  Census cb = census_half_dim(b);
  REQUIRE(cb.obstruction.empty());
  REQUIRE(cb.codes.size() == 24);
  CHECK(cb.codes.front().label == "f31f81f241f242");
  CHECK(cb.codes[1].label == "f31f81f241f243");
  CHECK(cb.codes.back().label == "f32f82f243f244");
  std::set<std::vector<uint64_t>> seen;
  for (const CyclicCode& c : cb.codes) {
    CHECK(c.k == 60);
    CHECK(c.gen.degree() == 59);
    CHECK(is_union_of_cosets(2, 119, c.defining_set));
    seen.insert(c.defining_set);
  }
  CHECK(seen.size() == 24);  // pairwise distinct generators

  Census cf = census_half_dim(CodeContext(5, 7, 4));
  REQUIRE(cf.obstruction.empty());
  CHECK(cf.codes.size() == 24);
  CHECK(cf.codes.front().label == "f21f31f61f62");

  Census ct = census_half_dim(CodeContext(11, 13, 3));
  REQUIRE(ct.obstruction.empty());
  CHECK(ct.codes.size() == 840);
  std::set<std::string> labels;
  for (const CyclicCode& c : ct.codes) {
    CHECK(c.k == 72);
    labels.insert(c.label);
  }
  CHECK(labels.size() == 840);
}

TEST_CASE("census obstruction when a factor block cannot be halved") {
  Census c = census_half_dim(CodeContext(3, 5, 2));
  CHECK(c.codes.empty());
  CHECK(c.obstruction.find("n1") != std::string::npos);

  Census c2 = census_half_dim(CodeContext(5, 7, 2));
  CHECK(c2.codes.empty());
  CHECK(!c2.obstruction.empty());
}

TEST_CASE("the 24 binary census codes are exactly the three families") {
  CodeContext ctx(7, 17, 2);
  Census census = census_half_dim(ctx);
  std::set<std::vector<uint64_t>> census_sets;
  for (const CyclicCode& c : census.codes) census_sets.insert(c.defining_set);
  std::set<std::vector<uint64_t>> family_sets;
  for (Family fam : {Family::U, Family::D, Family::V})
    for (FamilyTriple tr : kTriples) family_sets.insert(ctx.defining_set(fam, tr));
  CHECK(family_sets.size() == 24);
  CHECK(family_sets == census_sets);
}

TEST_CASE("BCH bound mechanics") {
  CHECK(bch_bound({}, 15).bound == 1);
  BchBound plain = bch_bound({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 119);
  CHECK(plain.bound == 11);
  CHECK(plain.run_start == 1);
  // runs wrap around 0
  BchBound wrap = bch_bound({117, 118, 0, 1}, 119);
  CHECK(wrap.bound == 5);
  CHECK(wrap.run_start == 117);
  // the zero code's defining set is everything
  std::vector<uint64_t> all(7);
  for (uint64_t i = 0; i < 7; ++i) all[i] = i;
  CHECK(bch_bound(all, 7).bound == 8);
}

TEST_CASE("BCH bounds for the binary family reach 11 after unit scaling") {
  CodeContext b2(7, 17, 2), b4(7, 17, 4);
  const std::vector<FamilyTriple> cases = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<uint64_t> plain_bounds = {11, 11, 11, 7};
  for (size_t i = 0; i < cases.size(); ++i) {
    CAPTURE(i);
    std::vector<uint64_t> T = b2.defining_set(Family::U, cases[i]);
    // the defining sets are identical over GF(2) and GF(4)
    CHECK(b4.defining_set(Family::U, cases[i]) == T);
    CHECK(bch_bound(T, 119).bound == plain_bounds[i]);
    BchBoundBest best = bch_bound_best(T, 119);
    CHECK(best.at_best.bound == 11);
  }
  CHECK(bch_bound(b2.defining_set(Family::U, {0, 0, 0}), 119).run_start == 1);
  // the (0,0,1) set only reveals its 10-run after scaling by 3
  CHECK(bch_bound_best(b2.defining_set(Family::U, {0, 0, 1}), 119).unit == 3);
}

TEST_CASE("duadic splitting checks") {
  // the quadratic-residue splitting mod 7 with q = 2
  CHECK(splitting_check({1, 2, 4}, {3, 5, 6}, 3, 7, 2));
  CHECK(!splitting_check({1, 2, 4}, {3, 5, 6}, 1, 7, 2));   // mu must swap
  CHECK(!splitting_check({1, 2, 4}, {3, 5, 4}, 3, 7, 2));   // overlap
  CHECK(!splitting_check({1, 2, 4}, {3, 5}, 3, 7, 2));      // misses 6
  CHECK(!splitting_check({1, 2, 4}, {3, 5, 6}, 7, 7, 2));   // mu not a unit
  CHECK(!splitting_check({1, 2, 3}, {4, 5, 6}, 6, 7, 2));   // not coset-closed
}

TEST_CASE("the D and V pairs split duadically; the U pair never does") {
  CodeContext b(7, 17, 2);
  std::vector<uint64_t> d = splitting_units(b, Family::D);
  CHECK(d.size() == 24);
  CHECK(d.front() == 3);
  std::vector<uint64_t> v = splitting_units(b, Family::V);
  CHECK(v.size() == 24);
  CHECK(v.front() == 3);
  CHECK(splitting_units(b, Family::U).empty());

  CodeContext t(11, 13, 3);
  CHECK(splitting_units(t, Family::D).size() == 30);
  CHECK(splitting_units(t, Family::D).front() == 2);
  CHECK(splitting_units(t, Family::V).size() == 30);
  CHECK(splitting_units(t, Family::U).empty());

  CodeContext f(5, 7, 4);
  CHECK(splitting_units(f, Family::D).size() == 6);
  CHECK(splitting_units(f, Family::D).front() == 3);
  CHECK(splitting_units(f, Family::V).size() == 6);
  CHECK(splitting_units(f, Family::U).empty());
}

TEST_CASE("complementary triples are equivalent codes in the D and V families") {
  for (auto [p1, p2, q] : std::vector<std::array<uint64_t, 3>>{{7, 17, 2}, {11, 13, 3}, {5, 7, 4}}) {
    CodeContext ctx(p1, p2, q);
    for (Family fam : {Family::D, Family::V}) {
      uint64_t mu = splitting_units(ctx, fam).front();
      for (FamilyTriple tr : kTriples) {
        CyclicCode c = ctx.construct(fam, tr);
        CyclicCode img = ctx.map_code(c, mu);
        FamilyTriple comp{1 - tr.i, 1 - tr.j, 1 - tr.h};
        CHECK(img.defining_set == ctx.defining_set(fam, comp));
      }
    }
  }
}
