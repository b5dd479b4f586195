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
#include "sgpd/kgraph.hpp"
#include "support.hpp"

using namespace sgpd;
using namespace sgpd::testing;

namespace {

  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
  }

}  // namespace

TEST_CASE("FIX-D has nine morphisms up to (2,2)") {
  auto kg = fix_d();
  CHECK(kg.table->size() == 9);
  CHECK(names_of(*kg.table, kg.table->all())
        == std::vector<std::string>{"v", "b", "r", "bb", "br", "rr", "bbr", "brr", "bbrr"});
  // rb and br are the same morphism.
  auto b = kg.table->at("b");
  auto r = kg.table->at("r");
  CHECK(kg.table->product(b, r) == kg.table->product(r, b));
  CHECK(kg.paths[kg.table->at("br").value].size() == 2);
  CHECK(validate_associativity(kg.table->raw()).ok());
}

TEST_CASE("FIX-C as a 1-graph") {
  auto kg = fix_c(3);
  CHECK(names_of(*kg.table, kg.table->all())
        == std::vector<std::string>{"v", "e", "ee", "eee"});
  CHECK(kg.degree(kg.table->at("ee")) == Degree{2});
}

TEST_CASE("factorize") {
  auto kg = fix_d();
  auto [p, q] = factorize(kg, kg.table->at("br"), {1, 0}, {0, 1});
  CHECK(kg.table->name(p) == "b");
  CHECK(kg.table->name(q) == "r");
  auto [p2, q2] = factorize(kg, kg.table->at("br"), {0, 1}, {1, 0});
  CHECK(kg.table->name(p2) == "r");
  CHECK(kg.table->name(q2) == "b");
  CHECK(code_of([&] { (void) factorize(kg, kg.table->at("br"), {1, 1}, {0, 1}); })
        == ErrorCode::BadSplit);
}

TEST_CASE("degree slices") {
  auto kg = fix_d();
  CHECK(names_of(*kg.table, lambda_n_v(kg, 0, {1, 1}).members)
        == std::vector<std::string>{"br"});
  auto c = fix_c(3);
  CHECK(names_of(*c.table, lambda_n_v(c, 0, {2}).members) == std::vector<std::string>{"ee"});
  CHECK(code_of([&] { (void) lambda_n_v(kg, 0, {3, 0}); }) == ErrorCode::DegreeOutOfRange);
  CHECK(code_of([&] { (void) lambda_n_v(kg, 0, {1}); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("row-finite without sources") {
  CHECK_FALSE(rfns_check(fix_d()));
  CHECK_FALSE(rfns_check(fix_c()));
  // u receives no edges: the slice of degree 1 at u is empty.
  auto kg = build_kgraph(parse_kgr("k: 1\nobjects: u v\nedge: e 1 u v\n"), {2});
  auto w  = rfns_check(kg);
  REQUIRE(w);
  CHECK(kg.skeleton.objects[w->v] == "u");
  CHECK(w->n == Degree{1});
}

TEST_CASE("slices are partitions") {
  auto kg = fix_d();
  for (auto const& n : degrees_up_to({2, 2})) {
    CHECK_FALSE(slice_partition_check(kg, 0, n));
  }
  CHECK_FALSE(slice_partition_check(fix_c(), 0, {1}));
}

TEST_CASE("a category whose slice is not a partition") {
  auto t    = broken_category();
  auto view = detect_category(*t);
  CHECK(view.objects.size() == 3);
  // Morphisms into v of "degree one": a and b.  Both divide m.
  ElementSet slice{t->at("a"), t->at("b")};
  std::sort(slice.begin(), slice.end());
  auto w = check_slice_partition(*t, slice, t->right_set(t->at("v")));
  REQUIRE(w);
  REQUIRE(w->intersecting);
  CHECK(t->name(w->intersecting->first) == "a");
  CHECK(t->name(w->intersecting->second) == "b");
}

TEST_CASE("common extensions") {
  auto kg = fix_d();
  auto b  = kg.table->at("b");
  auto r  = kg.table->at("r");
  auto c  = common_extensions(kg, b, r, {1, 1});
  REQUIRE(c.size() == 1);
  CHECK(kg.table->name(c[0].first) == "r");
  CHECK(kg.table->name(c[0].second) == "b");
  CHECK(common_extensions(kg, b, b, {1, 0}).size() == 1);
  CHECK(common_extensions(kg, b, r, {2, 1}).size() == 1);
  CHECK_THROWS_AS((void) common_extensions(kg, b, r, {1, 0}), Error);
}

TEST_CASE("inconsistent squares are rejected") {
  // The square names an edge of the wrong colour.
  CHECK(code_of([] {
          (void) build_kgraph(parse_kgr("k: 2\nobjects: v\nedge: b 1 v v\nedge: r 2 v v\n"
                                        "square: b r = b r\n"),
                              {2, 2});
        })
        == ErrorCode::InconsistentSquares);
  // No square at all for the path b r.
  CHECK(code_of([] {
          (void) build_kgraph(parse_kgr("k: 2\nobjects: v\nedge: b 1 v v\nedge: r 2 v v\n"),
                              {1, 1});
        })
        == ErrorCode::InconsistentSquares);
  // Endpoints do not match.
  CHECK(code_of([] {
          (void) build_kgraph(parse_kgr("k: 2\nobjects: u v\nedge: b 1 v v\nedge: r 2 v v\n"
                                        "edge: s 2 u u\nsquare: b r = s b\n"),
                              {1, 1});
        })
        == ErrorCode::InconsistentSquares);
}

TEST_CASE("degree function of FIX-D") {
  auto                kg = fix_d();
  std::vector<Degree> degrees;
  for (auto const& m : kg.morphisms) {
    degrees.push_back(m.degree);
  }
  auto df = validate_degree_function(*kg.table, degrees, {2, 2});
  CHECK(df.additive);
  CHECK(df.positive_splits_unique);
  CHECK(df.zero_splits_unique);
  // A wrong degree on bb breaks additivity.
  degrees[kg.table->at("bb").value] = {1, 1};
  CHECK_FALSE(validate_degree_function(*kg.table, degrees, {2, 2}).additive);
}

TEST_CASE("category detection") {
  auto view = detect_category(*fix_d().table);
  CHECK(view.objects.size() == 1);
  CHECK(code_of([] { (void) detect_category(*fix_f()); }) == ErrorCode::NotACategory);
  auto two = detect_category(*two_objects());
  CHECK(two.objects.size() == 2);
}

TEST_CASE("degree helpers") {
  CHECK(degree_add({1, 0}, {0, 2}) == Degree{1, 2});
  CHECK(degree_join({1, 0}, {0, 2}) == Degree{1, 2});
  CHECK(degree_leq({1, 0}, {1, 1}));
  CHECK_FALSE(degree_leq({2, 0}, {1, 1}));
  CHECK(degrees_up_to({1, 1}).size() == 4);
  CHECK(format_degree({2, 2}) == "(2,2)");
}
