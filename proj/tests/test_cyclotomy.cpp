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

#include "cycodes/cyclotomy.hpp"

using namespace cycodes;

TEST_CASE("smallest primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(11) == 2);
  CHECK(primitive_root(13) == 2);
  CHECK(primitive_root(17) == 3);
  CHECK(primitive_root(41) == 6);
}

TEST_CASE("system parameters for the three working pairs") {
  CyclotomySystem a = build_system(7, 17);
  CHECK(a.n == 119);
  CHECK(a.d == 2);
  CHECK(a.e == 48);
  CHECK(a.g == 3);
  CHECK(a.nu == 52);

  CyclotomySystem b = build_system(11, 13);
  CHECK(b.d == 2);
  CHECK(b.e == 60);
  CHECK(b.g == 2);
  CHECK(b.nu == 79);

  CyclotomySystem c = build_system(5, 7);
  CHECK(c.d == 2);
  CHECK(c.e == 12);
  CHECK(c.g == 17);
  CHECK(c.nu == 22);

  CHECK_THROWS_AS(build_system(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(build_system(9, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_system(2, 7), std::invalid_argument);
}

TEST_CASE("unique factorization of units") {
  CyclotomySystem sys = build_system(7, 17);
  auto [s_nu, i_nu] = sys.decompose(52);
  CHECK(s_nu == 0);
  CHECK(i_nu == 1);
  auto [s_g, i_g] = sys.decompose(3);
  CHECK(s_g == 1);
  CHECK(i_g == 0);
  auto [s_m1, i_m1] = sys.decompose(118);
  CHECK(s_m1 == 8);
  CHECK(i_m1 == 1);
  CHECK_THROWS_AS(sys.decompose(119), std::invalid_argument);  // 0
  CHECK_THROWS_AS(sys.decompose(7), std::invalid_argument);
  CHECK_THROWS_AS(sys.decompose(34), std::invalid_argument);

  CyclotomySystem small = build_system(3, 5);
  auto [s14, i14] = small.decompose(14);
  CHECK(s14 == 2);
  CHECK(i14 == 1);
  CHECK(small.class_members(Family::U, 0) == std::vector<uint64_t>{1, 2, 4, 8});
}

TEST_CASE("the (7,17) partitions match the published example sets") {
  CyclotomySystem sys = build_system(7, 17);
  const std::vector<uint64_t> u0 = {
      1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 31, 32, 36, 40, 41, 43,
      45, 48, 50, 53, 54, 60, 61, 62, 64, 67, 72, 73, 75, 80, 81, 82, 86, 90, 93, 96, 97, 100, 106, 108};
  const std::vector<uint64_t> d0 = {
      1, 2, 4, 8, 9, 13, 15, 16, 18, 19, 25, 26, 30, 32, 33, 36, 38, 43, 47, 50, 52, 53, 55, 59,
      60, 64, 66, 67, 69, 72, 76, 81, 83, 86, 87, 89, 93, 94, 100, 101, 103, 104, 106, 110, 111, 115, 117, 118};
  const std::vector<uint64_t> v0 = {
      1, 2, 4, 8, 9, 11, 15, 16, 18, 22, 23, 25, 29, 30, 32, 36, 37, 39, 43, 44, 46, 50, 53, 57,
      58, 60, 64, 65, 67, 71, 72, 74, 78, 79, 81, 86, 88, 92, 93, 95, 99, 100, 106, 107, 109, 113, 114, 116};
  CHECK(sys.class_members(Family::U, 0) == u0);
  CHECK(sys.class_members(Family::D, 0) == d0);
  CHECK(sys.class_members(Family::V, 0) == v0);

  // complements within the units
  for (Family f : {Family::U, Family::D, Family::V}) {
    auto c0 = sys.class_members(f, 0), c1 = sys.class_members(f, 1);
    CHECK(c0.size() == 48);
    CHECK(c1.size() == 48);
    std::vector<uint64_t> all;
    std::merge(c0.begin(), c0.end(), c1.begin(), c1.end(), std::back_inserter(all));
    size_t k = 0;
    for (uint64_t x = 1; x < 119; ++x) {
      if (x % 7 && x % 17) CHECK(all[k++] == x);
    }
  }

  // class 0 is a subgroup in every family; class 1 is its complement coset
  for (Family f : {Family::U, Family::D, Family::V}) {
    auto c0 = sys.class_members(f, 0);
    for (size_t t = 0; t < c0.size(); t += 7) {
      for (size_t u = 0; u < c0.size(); u += 5) {
        CHECK(sys.class_index(c0[t] * c0[u] % 119, f) == 0);
      }
    }
  }
}

TEST_CASE("squares land in class 0 of every family") {
  for (auto [p1, p2] : {std::pair<uint64_t, uint64_t>{7, 17}, {11, 13}, {5, 7}, {19, 23}}) {
    CyclotomySystem sys = build_system(p1, p2);
    for (uint64_t x = 1; x < sys.n; ++x) {
      if (!sys.is_unit(x)) continue;
      uint64_t sq = x * x % sys.n;
      CHECK(sys.class_index(sq, Family::U) == 0);
      CHECK(sys.class_index(sq, Family::D) == 0);
      CHECK(sys.class_index(sq, Family::V) == 0);
    }
  }
}

TEST_CASE("closed form of -1") {
  MinusOneForm a = minus_one_form(build_system(7, 17));
  CHECK(!a.odd_case);  // 6*16/4 = 24
  CHECK(a.i == 1);
  CHECK(a.matches_closed_form);

  MinusOneForm b = minus_one_form(build_system(3, 5));
  CHECK(!b.odd_case);
  CHECK(b.s == 2);
  CHECK(b.i == 1);
  CHECK(b.matches_closed_form);

  for (auto [p1, p2] : {std::pair<uint64_t, uint64_t>{11, 13}, {5, 7}, {13, 23}, {7, 31}}) {
    CHECK(minus_one_form(build_system(p1, p2)).matches_closed_form);
  }
}

TEST_CASE("admissibility of the working prime powers") {
  CyclotomySystem a = build_system(7, 17);
  for (Family f : {Family::U, Family::D, Family::V}) {
    Admissibility adm = check_admissible(a, 2, f);
    CHECK(adm.ok);
    CHECK(adm.reason.empty());
  }
  CyclotomySystem b = build_system(11, 13);
  for (Family f : {Family::U, Family::D, Family::V}) CHECK(check_admissible(b, 3, f).ok);
  CyclotomySystem c = build_system(5, 7);
  for (Family f : {Family::U, Family::D, Family::V}) CHECK(check_admissible(c, 4, f).ok);

  // 3 is a nonresidue mod 7, so (7,17) fails for q = 3
  Admissibility bad = check_admissible(a, 3, Family::U);
  CHECK(!bad.ok);
  CHECK(bad.reason == "q is a quadratic nonresidue modulo n1");
  // q dividing n is rejected up front
  Admissibility nonunit = check_admissible(a, 7, Family::D);
  CHECK(!nonunit.ok);
  CHECK(nonunit.reason == "q is not a unit modulo n1*n2");
}

TEST_CASE("difference sets") {
  // Fano-plane set in Z_7
  CHECK(is_difference_set(7, {1, 2, 4}).is_difference_set);
  CHECK(is_difference_set(7, {1, 2, 4}).lambda == 1);
  CHECK(!is_difference_set(7, {1, 2, 3}).is_difference_set);

  // twin-prime construction: U_0 together with the multiples of n2
  for (auto [p1, p2] : {std::pair<uint64_t, uint64_t>{3, 5}, {5, 7}, {11, 13}}) {
    CyclotomySystem sys = build_system(p1, p2);
    std::vector<uint64_t> set = sys.class_members(Family::U, 0);
    for (uint64_t j = 0; j < p1; ++j) set.push_back(j * p2);
    DiffSetResult r = is_difference_set(sys.n, set);
    CHECK(r.is_difference_set);
    CHECK(set.size() == (sys.n - 1) / 2);
    CHECK(r.lambda == (sys.n - 3) / 4);
  }
}

TEST_CASE("membership statements agree with their congruence forms") {
  for (auto [p1, p2] :
       {std::pair<uint64_t, uint64_t>{7, 17}, {17, 7}, {11, 13}, {5, 7}, {3, 5}, {23, 31}, {29, 37}}) {
    CyclotomySystem sys = build_system(p1, p2);
    for (const auto& r : congruence_predicates(sys)) {
      INFO(r.name, " at (", p1, ",", p2, ")");
      CHECK(r.ok);
    }
  }
}

TEST_CASE("scan of small prime pairs finds no mismatch") {
  ScanReport report = inconsistency_scan(31);
  CHECK(report.pairs == 90);  // ordered pairs from the ten odd primes <= 31
  CHECK(report.checks == report.pairs * 21);
  CHECK(report.mismatches.empty());
}
