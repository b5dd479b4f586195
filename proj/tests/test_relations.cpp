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
#include "sgpd/relations.hpp"
#include "sgpd/reps.hpp"
#include "support.hpp"

using namespace sgpd;
using namespace sgpd::testing;

namespace {

  RationalMatrix M(char const* text) {
    return RationalMatrix::parse(text);
  }

  // S of every element, as an assignment keyed by element name.
  Assignment assignment_of(Representation const& rep) {
    Assignment a;
    for (auto f : rep.table().all()) {
      a.emplace(rep.table().name(f), rep.S(f));
    }
    return a;
  }

}  // namespace

TEST_CASE("terms print in prefix notation") {
  CHECK(Term::Q("f").str() == "(* (adj S[f]) S[f])");
  CHECK(Term::P("f").str() == "(* S[f] (adj S[f]))");
  CHECK(Term::diff(Term::unit(), Term::Q("g")).str() == "(- 1 (* (adj S[g]) S[g]))");
  CHECK(Term::join({Term::P("a"), Term::P("b")}).str()
        == "(join (* S[a] (adj S[a])) (* S[b] (adj S[b])))");
  CHECK_THROWS_AS((void) Term::join({Term::generator("a")}), Error);
  CHECK(Term::sum({Term::zero(), Term::unit()}).str() == "(+ 0 1)");
}

TEST_CASE("relations print with their family tag") {
  Relation r{Family::PROD0, Term::product({Term::generator("f"), Term::generator("f")}),
             Term::zero(), "non-composable pair"};
  CHECK(r.str() == "rel: PROD0: (* S[f] S[f]) = 0");
}

TEST_CASE("generic presentation of FIX-E") {
  auto t = fix_e();
  auto p = emit_generic(*t, true, 2, 6);
  CHECK(p.generators == std::vector<std::string>{"f"});
  CHECK(p.count(Family::PI) == 1);
  CHECK(p.count(Family::PROD) == 0);
  CHECK(p.count(Family::PROD0) == 1);
  CHECK(p.count(Family::INIT0) == 1);
  // Nine (F, G) instances collapse to six distinct relations.
  CHECK(p.count(Family::TIGHT) == 6);
  auto toeplitz = emit_generic(*t, false, 2, 6);
  CHECK(toeplitz.count(Family::TIGHT) == 0);
  CHECK(toeplitz.relations.size() == p.relations.size() - 6);
  CHECK(p.serialize() == emit_generic(*t, true, 2, 6).serialize());
}

TEST_CASE("canonical order") {
  auto p = emit_generic(*fix_f(), true, 1, 6);
  for (std::size_t i = 1; i < p.relations.size(); ++i) {
    auto const& a = p.relations[i - 1];
    auto const& b = p.relations[i];
    CHECK(static_cast<int>(a.family) <= static_cast<int>(b.family));
    if (a.family == b.family) {
      CHECK(a.lhs.str() + " = " + a.rhs.str() < b.lhs.str() + " = " + b.rhs.str());
    }
  }
}

TEST_CASE("Cuntz-Krieger presentation of A = [[1]]") {
  auto p = emit_cuntz_krieger(mat({{1}}));
  CHECK(p.generators == std::vector<std::string>{"1"});
  CHECK(p.count(Family::PI) == 1);
  CHECK(p.count(Family::TCK3) == 1);
  CHECK(p.count(Family::EL13) == 3);
  Assignment rotation{{"1", M("[[3/5,-4/5],[4/5,3/5]]")}};
  CHECK(evaluate(p, rotation).satisfied);
  auto e = evaluate(p, Assignment{{"1", M("[[0,1],[0,0]]")}});
  CHECK_FALSE(e.satisfied);
  REQUIRE(e.first_failure);
  CHECK(e.first_failure->family == Family::TCK3);
}

TEST_CASE("Kumjian-Pask presentation of FIX-D") {
  auto kg = fix_d();
  auto p  = emit_kumjian_pask(kg, 6);
  CHECK_FALSE(p.unital);
  CHECK(p.count(Family::KP1) == 1);
  // Degrees (a, b), (c, d) with a + c, b + d <= 2: 6 * 6 pairs.
  CHECK(p.count(Family::KP2) == 36);
  CHECK(p.count(Family::KP3) == 8);
  CHECK(p.count(Family::KP4) == 8);
  // Non-boundary part of D(v) is {v, b, r, br}; each alone covers it.
  CHECK(p.count(Family::KPCOV) == 4);
}

TEST_CASE("Kumjian-Pask needs a graph without sources") {
  auto kg = build_kgraph(parse_kgr("k: 1\nobjects: u v\nedge: e 1 u v\n"), {2});
  CHECK_THROWS_AS((void) emit_kumjian_pask(kg, 6), Error);
}

TEST_CASE("evaluation reports missing generators") {
  auto p = emit_cuntz_krieger(mat({{1, 1}, {1, 0}}));
  CHECK_THROWS_AS((void) evaluate(p, Assignment{{"1", M("[[1]]")}}), Error);
  CHECK_THROWS_AS((void) evaluate(p, Assignment{{"1", M("[[1]]")}, {"2", M("[[1,0],[0,1]]")}}),
                  Error);
}

TEST_CASE("KP and generic-tight agree on FIX-D") {
  auto kg = fix_d();
  auto kp = emit_kumjian_pask(kg, 6);
  auto gt = emit_generic(*kg.table, true, 2, 6);
  for (auto const& rep :
       {Representation::from_named(kg.table, 2,
                                   {{"v", M("[[1,0],[0,1]]")},
                                    {"b", M("[[0,1],[1,0]]")},
                                    {"r", M("[[0,1],[1,0]]")}}),
        Representation::from_named(kg.table, 1,
                                   {{"v", M("[[1]]")}, {"b", M("[[1]]")}, {"r", M("[[1]]")}})}) {
    auto a  = assignment_of(rep);
    auto cc = cross_check(kp, gt, a, identity_translation(gt));
    CHECK(cc.a.satisfied);
    CHECK(cc.b.satisfied);
    CHECK_FALSE(cc.discrepancy);
  }
}

TEST_CASE("CK and generic-tight agree on A = [[1]]") {
  auto mk = build_markov(mat({{1}}), 3);
  auto ck = emit_cuntz_krieger(*mk.matrix);
  auto gt = emit_generic(*mk.table, true, 2, 6);
  Assignment letters{{"1", M("[[3/5,-4/5],[4/5,3/5]]")}};
  auto cc = cross_check(ck, gt, letters, word_translation(mk));
  CHECK(cc.a.satisfied);
  CHECK(cc.b.satisfied);
  CHECK_FALSE(cc.discrepancy);

  // A nilpotent choice fails both.
  Assignment bad{{"1", M("[[0,1],[0,0]]")}};
  auto cb = cross_check(ck, gt, bad, word_translation(mk));
  CHECK_FALSE(cb.a.satisfied);
  CHECK_FALSE(cb.b.satisfied);
  CHECK_FALSE(cb.discrepancy);
}
