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

#include "sgpd/relations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sgpd/covers.hpp"
#include "sgpd/error.hpp"

namespace sgpd {

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  Term Term::unit() {
    return {Kind::Unit, {}, {}};
  }

  Term Term::zero() {
    return {Kind::Zero, {}, {}};
  }

  Term Term::generator(std::string name) {
    return {Kind::Gen, std::move(name), {}};
  }

  Term Term::adjoint(Term t) {
    return {Kind::Adj, {}, {std::move(t)}};
  }

  Term Term::product(std::vector<Term> factors) {
    if (factors.empty()) {
      return unit();
    }
    if (factors.size() == 1) {
      return std::move(factors.front());
    }
    return {Kind::Prod, {}, std::move(factors)};
  }

  Term Term::sum(std::vector<Term> terms) {
    if (terms.empty()) {
      return zero();
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    return {Kind::Sum, {}, std::move(terms)};
  }

  Term Term::diff(Term a, Term b) {
    return {Kind::Diff, {}, {std::move(a), std::move(b)}};
  }

  Term Term::join(std::vector<Term> terms) {
    for (auto const& t : terms) {
      if (!t.projection_shaped()) {
        raise(ErrorCode::InvalidArgument, "join over a non-projection " + t.str());
      }
    }
    if (terms.empty()) {
      return zero();
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    return {Kind::Join, {}, std::move(terms)};
  }

  Term Term::Q(std::string const& f) {
    return {Kind::Prod, {}, {adjoint(generator(f)), generator(f)}};
  }

  Term Term::P(std::string const& f) {
    return {Kind::Prod, {}, {generator(f), adjoint(generator(f))}};
  }

  bool Term::projection_shaped() const {
    switch (kind) {
      case Kind::Unit:
      case Kind::Zero:
        return true;
      case Kind::Gen:
      case Kind::Adj:
        return false;
      case Kind::Prod:
        if (args.size() == 2) {
          auto const& a = args[0];
          auto const& b = args[1];
          if (a.kind == Kind::Gen && b == adjoint(a)) {
            return true;
          }
          if (b.kind == Kind::Gen && a == adjoint(b)) {
            return true;
          }
        }
        return std::all_of(args.begin(), args.end(),
                           [](Term const& t) { return t.projection_shaped(); });
      case Kind::Sum:
        return false;
      case Kind::Diff:
        return args[0].kind == Kind::Unit && args[1].projection_shaped();
      case Kind::Join:
        return true;
    }
    return false;
  }

  std::string Term::str() const {
    auto list = [&](char const* head) {
      std::string out = std::string("(") + head;
      for (auto const& a : args) {
        out += " " + a.str();
      }
      return out + ")";
    };
    switch (kind) {
      case Kind::Unit:
        return "1";
      case Kind::Zero:
        return "0";
      case Kind::Gen:
        return "S[" + gen + "]";
      case Kind::Adj:
        return "(adj " + args[0].str() + ")";
      case Kind::Prod:
        return list("*");
      case Kind::Sum:
        return list("+");
      case Kind::Diff:
        return list("-");
      case Kind::Join:
        return list("join");
    }
    return "?";
  }

  char const* family_name(Family f) noexcept {
    switch (f) {
      case Family::PI: return "PI";
      case Family::PROD: return "PROD";
      case Family::PROD0: return "PROD0";
      case Family::COMM: return "COMM";
      case Family::ORTH: return "ORTH";
      case Family::INIT: return "INIT";
      case Family::INIT0: return "INIT0";
      case Family::TIGHT: return "TIGHT";
      case Family::TCK1: return "TCK1";
      case Family::TCK2: return "TCK2";
      case Family::TCK3: return "TCK3";
      case Family::EL13: return "EL13";
      case Family::KP1: return "KP1";
      case Family::KP2: return "KP2";
      case Family::KP3: return "KP3";
      case Family::KP4: return "KP4";
      case Family::KPCOV: return "KPCOV";
    }
    return "?";
  }

  std::string Relation::str() const {
    return std::string("rel: ") + family_name(family) + ": " + lhs.str() + " = "
           + rhs.str();
  }

  std::string Presentation::serialize() const {
    std::ostringstream os;
    os << "style: " << style << "\n";
    os << "unital: " << (unital ? "yes" : "no") << "\n";
    os << "gen:";
    for (auto const& g : generators) {
      os << " " << g;
    }
    os << "\n";
    for (auto const& r : relations) {
      os << r.str() << "  # " << r.provenance << "\n";
    }
    return os.str();
  }

  std::size_t Presentation::count(Family f) const {
    return static_cast<std::size_t>(std::count_if(
        relations.begin(), relations.end(),
        [&](Relation const& r) { return r.family == f; }));
  }

  namespace {

    using T = Term;

    T S(std::string const& f) {
      return T::generator(f);
    }

    void canonicalize(Presentation& pres) {
      std::vector<std::pair<std::string, std::size_t>> keys;
      for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        auto const& r = pres.relations[i];
        keys.emplace_back(r.lhs.str() + " = " + r.rhs.str(), i);
      }
      std::vector<std::size_t> order(keys.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto fa = pres.relations[a].family;
        auto fb = pres.relations[b].family;
        return fa != fb ? fa < fb : keys[a].first < keys[b].first;
      });
      std::vector<Relation>                       out;
      std::set<std::pair<Family, std::string>>    seen;
      for (auto i : order) {
        if (seen.emplace(pres.relations[i].family, keys[i].first).second) {
          out.push_back(std::move(pres.relations[i]));
        }
      }
      pres.relations = std::move(out);
    }

    T cover_term(SemigroupoidTable const& t, ElementSet const& target,
                 ElementSet const& H) {
      std::vector<T> parts;
      for (auto h : H) {
        parts.push_back(T::P(t.name(h)));
      }
      if (H.size() > 1 && is_partition(t, {target, H}).ok) {
        return T::sum(std::move(parts));
      }
      return T::join(std::move(parts));
    }

    T product_term(SemigroupoidTable const&       t,
                   std::vector<ExtElement> const& F,
                   std::vector<ExtElement> const& G) {
      std::vector<T> factors;
      for (auto f : F) {
        if (!f.is_unit()) {
          factors.push_back(T::Q(t.name(f)));
        }
      }
      for (auto g : G) {
        factors.push_back(T::diff(T::unit(), g.is_unit() ? T::unit() : T::Q(t.name(g))));
      }
      return T::product(std::move(factors));
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Emitters
  ////////////////////////////////////////////////////////////////////////

  Presentation emit_generic(SemigroupoidTable const& t,
                            bool                     tight,
                            std::size_t              max_fg,
                            std::size_t              max_cover) {
    Presentation pres;
    pres.style = tight ? "generic-tight" : "generic-toeplitz";
    auto const n = static_cast<std::uint32_t>(t.size());
    for (std::uint32_t i = 0; i < n; ++i) {
      pres.generators.push_back(t.name(ElementId{i}));
    }
    auto add = [&](Family f, T lhs, T rhs, std::string why) {
      pres.relations.push_back({f, std::move(lhs), std::move(rhs), std::move(why)});
    };
    for (auto const& f : pres.generators) {
      add(Family::PI, T::product({S(f), T::adjoint(S(f)), S(f)}), S(f),
          "partial isometry");
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        ElementId f{i}, g{j};
        if (!t.decided(f, g)) {
          continue;
        }
        auto const& a = t.name(f);
        auto const& b = t.name(g);
        if (auto fg = t.product(f, g)) {
          add(Family::PROD, T::product({S(a), S(b)}), S(t.name(*fg)), "product rule");
          add(Family::INIT, T::product({T::Q(a), T::P(b)}), T::P(b),
              "composable pair");
        } else {
          add(Family::PROD0, T::product({S(a), S(b)}), T::zero(),
              "non-composable pair");
          add(Family::INIT0, T::product({T::Q(a), T::P(b)}), T::zero(),
              "non-composable pair");
        }
      }
    }
    std::vector<T> projections;
    for (auto const& f : pres.generators) {
      projections.push_back(T::Q(f));
    }
    for (auto const& f : pres.generators) {
      projections.push_back(T::P(f));
    }
    for (std::size_t a = 0; a < projections.size(); ++a) {
      for (std::size_t b = a + 1; b < projections.size(); ++b) {
        add(Family::COMM, T::product({projections[a], projections[b]}),
            T::product({projections[b], projections[a]}), "commuting projections");
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        if (!t.common_multiple(ElementId{i}, ElementId{j})) {
          add(Family::ORTH,
              T::product({T::P(t.name(ElementId{i})), T::P(t.name(ElementId{j}))}),
              T::zero(), "disjoint pair");
        }
      }
    }
    if (tight) {
      auto const inst = enumerate_tightness_instances(t, max_fg, max_cover);
      for (auto const& in : inst.instances) {
        auto const& target = inst.targets[in.target];
        for (auto const& H : inst.coverings[in.target].coverings) {
          add(Family::TIGHT, cover_term(t, target, H), product_term(t, in.F, in.G),
              "covering " + format_set(t, H) + " for F=" + format_set(t, in.F)
                  + " G=" + format_set(t, in.G));
        }
      }
    }
    canonicalize(pres);
    return pres;
  }

  Presentation emit_cuntz_krieger(Matrix01 const& m) {
    Presentation pres;
    pres.style      = "cuntz-krieger";
    pres.generators = m.labels();
    auto const n    = static_cast<Letter>(m.size());
    auto add = [&](Family f, T lhs, T rhs, std::string why) {
      pres.relations.push_back({f, std::move(lhs), std::move(rhs), std::move(why)});
    };
    for (auto const& a : pres.generators) {
      add(Family::PI, T::product({S(a), T::adjoint(S(a)), S(a)}), S(a),
          "partial isometry");
    }
    for (Letter i = 0; i < n; ++i) {
      for (Letter j = 0; j < n; ++j) {
        auto const& a = m.label(i);
        auto const& b = m.label(j);
        if (i < j) {
          add(Family::TCK1, T::product({T::Q(a), T::Q(b)}),
              T::product({T::Q(b), T::Q(a)}), "initial projections commute");
        }
        if (i != j) {
          add(Family::TCK2, T::product({T::adjoint(S(a)), S(b)}), T::zero(),
              "distinct letters");
        }
        add(Family::TCK3, T::product({T::Q(a), T::P(b)}),
            m(i, j) ? T::P(b) : T::zero(), "matrix entry");
      }
    }
    // Every pair of disjoint letter sets X, Y: each letter is in X, in Y or
    // in neither.
    std::size_t combos = 1;
    for (Letter i = 0; i < n; ++i) {
      combos *= 3;
    }
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Letter> X, Y;
      auto                c = code;
      for (Letter i = 0; i < n; ++i, c /= 3) {
        if (c % 3 == 1) {
          X.push_back(i);
        } else if (c % 3 == 2) {
          Y.push_back(i);
        }
      }
      std::vector<T> finals;
      for (auto j : letters_of_lambda_fg(m, X, Y)) {
        finals.push_back(T::P(m.label(j)));
      }
      std::vector<T> factors;
      std::string    why = "X={";
      for (auto x : X) {
        factors.push_back(T::Q(m.label(x)));
        why += (x == X.front() ? "" : ",") + m.label(x);
      }
      why += "} Y={";
      for (auto y : Y) {
        factors.push_back(T::diff(T::unit(), T::Q(m.label(y))));
        why += (y == Y.front() ? "" : ",") + m.label(y);
      }
      add(Family::EL13, T::sum(std::move(finals)), T::product(std::move(factors)),
          why + "}");
    }
    canonicalize(pres);
    return pres;
  }

  Presentation emit_kumjian_pask(KGraph const& kg, std::size_t max_cover) {
    if (auto w = rfns_check(kg)) {
      raise(ErrorCode::SourcesPresent,
            "no morphisms of degree " + format_degree(w->n) + " end at "
                + kg.skeleton.objects[w->v]);
    }
    auto const&  t = *kg.table;
    Presentation pres;
    pres.style  = "kumjian-pask";
    pres.unital = false;
    auto const n = static_cast<std::uint32_t>(t.size());
    for (std::uint32_t i = 0; i < n; ++i) {
      pres.generators.push_back(t.name(ElementId{i}));
    }
    auto add = [&](Family f, T lhs, T rhs, std::string why) {
      pres.relations.push_back({f, std::move(lhs), std::move(rhs), std::move(why)});
    };
    auto const objects = static_cast<std::uint32_t>(kg.skeleton.objects.size());
    for (std::uint32_t v = 0; v < objects; ++v) {
      auto const& a = t.name(kg.object(v));
      add(Family::KP1, S(a), T::P(a), "object projection");
      for (std::uint32_t u = v + 1; u < objects; ++u) {
        add(Family::KP1, T::product({S(a), S(t.name(kg.object(u)))}), T::zero(),
            "distinct objects");
      }
    }
    for (auto [f, g] : t.composable_pairs()) {
      add(Family::KP2, T::product({S(t.name(f)), S(t.name(g))}),
          S(t.name(*t.product(f, g))), "product rule");
    }
    for (std::uint32_t i = objects; i < n; ++i) {
      ElementId f{i};
      add(Family::KP3, T::Q(t.name(f)), S(t.name(kg.object(kg.source(f)))),
          "initial projection is the source");
    }
    for (std::uint32_t v = 0; v < objects; ++v) {
      for (auto const& d : degrees_up_to(kg.max_degree)) {
        if (std::all_of(d.begin(), d.end(), [](auto x) { return x == 0; })) {
          continue;
        }
        std::vector<T> finals;
        for (auto f : lambda_n_v(kg, v, d).members) {
          finals.push_back(T::P(t.name(f)));
        }
        add(Family::KP4, S(t.name(kg.object(v))), T::sum(std::move(finals)),
            "degree " + format_degree(d));
      }
    }
    for (std::uint32_t v = 0; v < objects; ++v) {
      auto const obj = kg.object(v);
      ElementSet target;
      for (auto h : t.right_set(obj)) {
        if (!t.boundary(h)) {
          target.push_back(h);
        }
      }
      auto covers = minimal_coverings(t, target, max_cover);
      if (covers.exceeded) {
        raise(ErrorCode::BoundExceeded,
              "minimal covering " + format_set(t, *covers.exceeded)
                  + " has more than " + std::to_string(max_cover) + " members");
      }
      for (auto const& H : covers.coverings) {
        add(Family::KPCOV, cover_term(t, target, H), S(t.name(obj)),
            "covering " + format_set(t, H) + " of D(" + t.name(obj) + ")");
      }
    }
    canonicalize(pres);
    return pres;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  RationalMatrix evaluate(Term const& term, Assignment const& assign, std::size_t dim) {
    using K = Term::Kind;
    switch (term.kind) {
      case K::Unit:
        return RationalMatrix::identity(dim);
      case K::Zero:
        return RationalMatrix::zero(dim);
      case K::Gen: {
        auto it = assign.find(term.gen);
        if (it == assign.end()) {
          raise(ErrorCode::IncompatibleGenerators, "no matrix for " + term.gen);
        }
        return it->second;
      }
      case K::Adj:
        return adj(evaluate(term.args[0], assign, dim));
      case K::Prod: {
        auto acc = evaluate(term.args[0], assign, dim);
        for (std::size_t i = 1; i < term.args.size(); ++i) {
          acc = acc * evaluate(term.args[i], assign, dim);
        }
        return acc;
      }
      case K::Sum: {
        auto acc = RationalMatrix::zero(dim);
        for (auto const& a : term.args) {
          acc = acc + evaluate(a, assign, dim);
        }
        return acc;
      }
      case K::Diff:
        return evaluate(term.args[0], assign, dim) - evaluate(term.args[1], assign, dim);
      case K::Join: {
        auto acc = RationalMatrix::zero(dim);
        for (auto const& a : term.args) {
          acc = join(acc, evaluate(a, assign, dim));
        }
        return acc;
      }
    }
    return RationalMatrix::zero(dim);
  }

  Evaluation evaluate(Presentation const& pres, Assignment const& assign) {
    std::size_t dim = 0;
    for (auto const& g : pres.generators) {
      auto it = assign.find(g);
      if (it == assign.end()) {
        raise(ErrorCode::IncompatibleGenerators, "no matrix for generator " + g);
      }
      auto const& m = it->second;
      if (dim == 0) {
        dim = m.rows();
      }
      if (m.rows() != dim || m.cols() != dim) {
        raise(ErrorCode::DimensionMismatch, "matrix for " + g + " has the wrong size");
      }
    }
    Evaluation out;
    if (dim == 0) {
      return out;
    }
    for (auto const& r : pres.relations) {
      ++out.checked;
      if (!(evaluate(r.lhs, assign, dim) == evaluate(r.rhs, assign, dim))) {
        out.satisfied     = false;
        out.first_failure = r;
        break;
      }
    }
    return out;
  }

  CrossCheck cross_check(Presentation const& a,
                         Presentation const& b,
                         Assignment const&   assign,
                         Translation const&  translation) {
    Assignment translated;
    for (auto const& g : b.generators) {
      auto it = translation.find(g);
      if (it == translation.end() || it->second.empty()) {
        raise(ErrorCode::IncompatibleGenerators, "no translation for " + g);
      }
      std::optional<RationalMatrix> acc;
      for (auto const& x : it->second) {
        if (std::find(a.generators.begin(), a.generators.end(), x)
            == a.generators.end()) {
          raise(ErrorCode::IncompatibleGenerators,
                g + " translates to " + x + ", which is not a generator");
        }
        auto m = assign.find(x);
        if (m == assign.end()) {
          raise(ErrorCode::IncompatibleGenerators, "no matrix for " + x);
        }
        acc = acc ? *acc * m->second : m->second;
      }
      translated.emplace(g, *acc);
    }
    CrossCheck out;
    out.a           = evaluate(a, assign);
    out.b           = evaluate(b, translated);
    out.discrepancy = out.a.satisfied != out.b.satisfied;
    return out;
  }

  Translation identity_translation(Presentation const& pres) {
    Translation out;
    for (auto const& g : pres.generators) {
      out[g] = {g};
    }
    return out;
  }

  Translation word_translation(MarkovTruncation const& mk) {
    Translation out;
    for (auto const& w : mk.words) {
      std::vector<std::string> letters;
      for (auto l : w) {
        letters.push_back(mk.matrix->label(l));
      }
      out[mk.matrix->word_name(w)] = std::move(letters);
    }
    return out;
  }

}  // namespace sgpd
