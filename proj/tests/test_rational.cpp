/*
 *   Copyright 2026 The sgpd Authors
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

#include <doctest.h>

#include "sgpd/error.hpp"
#include "sgpd/rational.hpp"

using namespace sgpd;

TEST_CASE("parse and print") {
  auto m = RationalMatrix::parse("[[1, -1/2], [0, 3]]");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == mpq_class(-1, 2));
  CHECK(m.str() == "[[1,-1/2],[0,3]]");
  CHECK_THROWS_AS((void) RationalMatrix::parse("[[1,2],[3]]"), Error);
  CHECK_THROWS_AS((void) RationalMatrix::parse("[[1/0]]"), Error);
  CHECK_THROWS_AS((void) RationalMatrix::parse("[[x]]"), Error);
}

TEST_CASE("arithmetic is exact") {
  auto r = RationalMatrix::parse("[[3/5,-4/5],[4/5,3/5]]");
  CHECK(adj(r) * r == RationalMatrix::identity(2));
  auto e12 = RationalMatrix::parse("[[0,1],[0,0]]");
  CHECK((e12 * e12).is_zero());
  CHECK(e12 * adj(e12) == RationalMatrix::parse("[[1,0],[0,0]]"));
  CHECK(e12 + adj(e12) - adj(e12) == e12);
}

TEST_CASE("rank") {
  CHECK(RationalMatrix::parse("[[1,2],[2,4]]").rank() == 1);
  CHECK(RationalMatrix::identity(3).rank() == 3);
  CHECK(RationalMatrix::zero(2).rank() == 0);
  auto a = RationalMatrix::parse("[[1,0],[0,0]]");
  auto b = RationalMatrix::parse("[[0,0],[0,1]]");
  CHECK(a.hconcat(b).rank() == 2);
}

TEST_CASE("join of commuting projections") {
  auto p = RationalMatrix::parse("[[1,0],[0,0]]");
  auto q = RationalMatrix::parse("[[0,0],[0,1]]");
  CHECK(join(p, q) == RationalMatrix::identity(2));
  CHECK(join(p, p) == p);
}

TEST_CASE("dimension mismatches throw") {
  auto a = RationalMatrix::identity(2);
  auto b = RationalMatrix::identity(3);
  CHECK_THROWS_AS((void) (a * b), Error);
  CHECK_THROWS_AS((void) (a + b), Error);
}
