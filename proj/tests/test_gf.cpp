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

#include "cycodes/gf.hpp"

using namespace cycodes;

namespace {
// Integer whose base-p digits are the low coefficients of the modulus.
uint64_t modulus_value(const FieldCtx& f) {
  uint64_t v = 0;
  for (uint64_t i = f.m; i-- > 0;) v = v * f.p + f.modulus.c[i];
  return v;
}
}  // namespace

TEST_CASE("prime fields use the modulus x and the smallest generator") {
  FieldCtx f2 = field_create(2, 1);
  CHECK(f2.order == 2);
  CHECK(modulus_value(f2) == 0);  // modulus is x
  CHECK(f2.value(f2.gen) == 1);

  FieldCtx f7 = field_create(7, 1);
  CHECK(f7.value(f7.gen) == 3);
  CHECK(f7.multiplicative_order(f7.from_value(2)) == 3);
  CHECK(f7.multiplicative_order(f7.gen) == 6);
  CHECK(f7.value(f7.mul(f7.from_value(4), f7.from_value(5))) == 6);
  CHECK(f7.value(f7.inv(f7.from_value(3))) == 5);
}

TEST_CASE("GF(4) is built on x^2+x+1 with generator x") {
  FieldCtx f4 = field_create(2, 2);
  CHECK(f4.order == 4);
  CHECK(modulus_value(f4) == 3);  // 1 + x
  CHECK(f4.value(f4.gen) == 2);   // the class of x
  FieldElem w = f4.gen;
  CHECK(f4.value(f4.mul(w, w)) == 3);           // w^2 = w + 1
  CHECK(f4.mul(w, f4.mul(w, w)) == f4.one());   // w^3 = 1
  CHECK(f4.multiplicative_order(w) == 3);
}

TEST_CASE("canonical presentations of the three working extension fields") {
  // Lexicographically smallest moduli (constant term upward) and smallest
  // full-order generators; these pin down every derived object.
  FieldCtx a = field_create(2, 24);
  CHECK(modulus_value(a) == 11534337);  // 1 + x^20 + x^21 + x^23 (+ x^24)
  CHECK(a.value(a.gen) == 2);

  FieldCtx b = field_create(2, 12);
  CHECK(modulus_value(b) == 513);  // 1 + x^9 (+ x^12)
  CHECK(b.value(b.gen) == 6);

  FieldCtx c = field_create(3, 15);
  // 1 + x^13 + 2 x^14 (+ x^15)
  uint64_t expect = 0;
  {
    uint8_t coeff[15] = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2};
    for (int i = 15; i-- > 0;) expect = expect * 3 + coeff[i];
  }
  CHECK(modulus_value(c) == expect);
  CHECK(c.value(c.gen) == 3);  // the class of x
}

TEST_CASE("roots of unity have the requested order") {
  FieldCtx f = field_create(2, 24);
  FieldElem theta = f.nth_root_of_unity(119);
  CHECK(f.multiplicative_order(theta) == 119);
  CHECK(f.pow(theta, 119) == f.one());
  CHECK(f.pow(theta, 7) != f.one());
  CHECK(f.pow(theta, 17) != f.one());

  FieldCtx g = field_create(3, 15);
  CHECK(g.multiplicative_order(g.nth_root_of_unity(143)) == 143);

  FieldCtx h = field_create(2, 12);
  CHECK(h.multiplicative_order(h.nth_root_of_unity(35)) == 35);
  CHECK_THROWS_AS(h.nth_root_of_unity(119), std::invalid_argument);
}

TEST_CASE("field axioms hold on sampled elements") {
  for (auto [p, m] : {std::pair<uint64_t, uint64_t>{2, 8}, {3, 5}, {5, 3}}) {
    FieldCtx f = field_create(p, m);
    uint64_t step = f.order / 17 + 1;
    for (uint64_t va = 1; va < f.order; va += step) {
      FieldElem x = f.from_value(va);
      CHECK(f.mul(x, f.inv(x)) == f.one());
      for (uint64_t vb = 1; vb < f.order; vb += step * 3) {
        FieldElem y = f.from_value(vb);
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.sub(f.add(x, y), y) == x);
        CHECK(f.mul(f.add(x, y), x) == f.add(f.mul(x, x), f.mul(y, x)));
      }
    }
    CHECK((f.order - 1) % f.multiplicative_order(f.from_value(1 + f.order / 2)) == 0);
  }
}

TEST_CASE("value round-trips and bounds") {
  FieldCtx f = field_create(3, 4);
  for (uint64_t v = 0; v < f.order; v += 7) CHECK(f.value(f.from_value(v)) == v);
  CHECK_THROWS_AS(f.from_value(f.order), std::invalid_argument);
  CHECK_THROWS_AS(f.inv(f.zero()), std::invalid_argument);
}

TEST_CASE("GF(4) embeds canonically into GF(2^12)") {
  FieldCtx f4 = field_create(2, 2);
  FieldCtx big = field_create(2, 12);
  SubfieldMap map = subfield_embed(f4, big);
  FieldElem w_img = map.up(f4.gen);
  CHECK(big.value(w_img) == 521);
  CHECK(big.value(map.up(f4.mul(f4.gen, f4.gen))) == 520);
  CHECK(big.multiplicative_order(w_img) == 3);
  // up is a field homomorphism on all sixteen pairs
  for (uint64_t va = 0; va < 4; ++va) {
    for (uint64_t vb = 0; vb < 4; ++vb) {
      FieldElem x = f4.from_value(va), y = f4.from_value(vb);
      CHECK(map.up(f4.add(x, y)) == big.add(map.up(x), map.up(y)));
      CHECK(map.up(f4.mul(x, y)) == big.mul(map.up(x), map.up(y)));
    }
  }
  // down recovers exactly the subfield
  FieldElem back;
  CHECK(map.down(w_img, &back));
  CHECK(back == f4.gen);
  CHECK(!map.in_subfield(big.gen));
}

TEST_CASE("integer helpers") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000000007ull));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));  // Carmichael
  CHECK(prime_factors(16777215) == std::vector<uint64_t>{3, 5, 7, 13, 17, 241});
  CHECK(prime_factors(14348906) == std::vector<uint64_t>{2, 11, 13, 4561});
  CHECK(order_mod(2, 119) == 24);
  CHECK(order_mod(3, 143) == 15);
  CHECK(order_mod(4, 35) == 6);
  CHECK(powmod_u64(2, 24, 119) == 1);
}
