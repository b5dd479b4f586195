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

// Finite relation presentations and their evaluation on matrices.

#ifndef SGPD_RELATIONS_HPP_
#define SGPD_RELATIONS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgpd/kgraph.hpp"
#include "sgpd/markov.hpp"
#include "sgpd/rational.hpp"
#include "sgpd/table.hpp"

namespace sgpd {

  struct Term {
    enum class Kind { Unit, Zero, Gen, Adj, Prod, Sum, Diff, Join };

    Kind              kind = Kind::Zero;
    std::string       gen;
    std::vector<Term> args;

    static Term unit();
    static Term zero();
    static Term generator(std::string name);
    static Term adjoint(Term t);
    static Term product(std::vector<Term> factors);
    static Term sum(std::vector<Term> terms);
    static Term diff(Term a, Term b);
    // Throws InvalidArgument unless every term is projection-shaped.
    static Term join(std::vector<Term> terms);

    // Q = S_f* S_f and P = S_f S_f*.
    static Term Q(std::string const& f);
    static Term P(std::string const& f);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool        projection_shaped() const;

    friend bool operator==(Term const&, Term const&) = default;
  };

  // Families, in canonical order.
  enum class Family {
    PI,
    PROD,
    PROD0,
    COMM,
    ORTH,
    INIT,
    INIT0,
    TIGHT,
    TCK1,
    TCK2,
    TCK3,
    EL13,
    KP1,
    KP2,
    KP3,
    KP4,
    KPCOV
  };

  char const* family_name(Family f) noexcept;

  struct Relation {
    Family      family;
    Term        lhs;
    Term        rhs;
    std::string provenance;

    [[nodiscard]] std::string str() const;
  };

  struct Presentation {
    std::string              style;
    std::vector<std::string> generators;
    std::vector<Relation>    relations;
    bool                     unital = true;

    [[nodiscard]] std::string serialize() const;
    [[nodiscard]] std::size_t count(Family f) const;
  };

  // Relations of the representation axioms, plus the covering relations for
  // every (F, G) and minimal covering when tight.  Throws BoundExceeded.
  Presentation emit_generic(SemigroupoidTable const& table,
                            bool                     tight,
                            std::size_t              max_fg,
                            std::size_t              max_cover);

  // Generators are the letters.
  Presentation emit_cuntz_krieger(Matrix01 const& matrix);

  // Throws SourcesPresent when some slice is empty, BoundExceeded.
  Presentation emit_kumjian_pask(KGraph const& kg, std::size_t max_cover);

  using Assignment = std::map<std::string, RationalMatrix>;

  struct Evaluation {
    bool                    satisfied = true;
    std::size_t             checked   = 0;
    std::optional<Relation> first_failure;
  };

  // Throws IncompatibleGenerators if a generator has no matrix, and
  // DimensionMismatch.
  Evaluation evaluate(Presentation const& pres, Assignment const& assign);

  RationalMatrix evaluate(Term const& term, Assignment const& assign, std::size_t dim);

  // Generators of B written as products of generators of A.
  using Translation = std::map<std::string, std::vector<std::string>>;

  struct CrossCheck {
    Evaluation a;
    Evaluation b;
    // a.satisfied != b.satisfied
    bool discrepancy = false;
  };

  // Evaluates A under assign and B under the translated assignment.  Throws
  // IncompatibleGenerators.
  CrossCheck cross_check(Presentation const& a,
                         Presentation const& b,
                         Assignment const&   assign,
                         Translation const&  translation);

  // Identity translation over the generators of pres.
  Translation identity_translation(Presentation const& pres);

  // Each word maps to its letters.
  Translation word_translation(MarkovTruncation const& mk);

}  // namespace sgpd

#endif  // SGPD_RELATIONS_HPP_
