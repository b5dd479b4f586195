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

// Finite-dimensional representations by rational partial isometries.

#ifndef SGPD_REPS_HPP_
#define SGPD_REPS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/covers.hpp"
#include "sgpd/kgraph.hpp"
#include "sgpd/markov.hpp"
#include "sgpd/rational.hpp"
#include "sgpd/table.hpp"

namespace sgpd {

  class Representation {
   public:
    // Elements without a matrix get the product S_g S_h of the least
    // composable pair (g, h) with gh = f whose matrices are known, repeated
    // until nothing changes.  Throws DimensionMismatch for non-square or
    // wrongly sized matrices and InvalidArgument if some element is left
    // without a matrix.
    Representation(std::shared_ptr<SemigroupoidTable const>   table,
                   std::size_t                                dim,
                   std::vector<std::optional<RationalMatrix>> given);

    // Same, keyed by element name; throws UnknownElement.
    static Representation
    from_named(std::shared_ptr<SemigroupoidTable const>                  table,
               std::size_t                                               dim,
               std::vector<std::pair<std::string, RationalMatrix>> const& given);

    [[nodiscard]] SemigroupoidTable const& table() const noexcept {
      return *_table;
    }
    [[nodiscard]] std::shared_ptr<SemigroupoidTable const> table_ptr() const {
      return _table;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    // The unit maps to the identity.
    [[nodiscard]] RationalMatrix const& S(ExtElement f) const;
    [[nodiscard]] RationalMatrix const& Q(ExtElement f) const;
    [[nodiscard]] RationalMatrix const& P(ExtElement f) const;

   private:
    std::shared_ptr<SemigroupoidTable const> _table;
    std::size_t                              _dim;
    RationalMatrix                           _one;
    std::vector<RationalMatrix>              _s, _q, _p;
  };

  struct AxiomWitness {
    // "i", "ii", "commute", "iii", "iv" or "v".
    std::string                                          clause;
    std::vector<ExtElement>                              elements;
    std::vector<std::pair<std::string, RationalMatrix>> matrices;
  };

  struct AxiomReport {
    bool                        ok = true;
    std::optional<AxiomWitness> witness;
    // Clause v recomputed from the vanishing products of clause ii agrees
    // with the direct computation.
    bool        rederivation_consistent = true;
    std::size_t skipped_pairs           = 0;
  };

  AxiomReport check_axioms(Representation const& rep);

  struct TightWitness {
    std::vector<ExtElement> F;
    std::vector<ExtElement> G;
    ElementSet              H;
    RationalMatrix          join;
    RationalMatrix          product;
  };

  struct TightnessReport {
    bool                        tight     = true;
    bool                        axioms_ok = true;
    std::optional<TightWitness> witness;
    std::size_t                 instances = 0;
    std::size_t                 targets   = 0;
    std::size_t                 coverings = 0;
    // For every covering that is a partition, the join equals the sum of
    // the final projections.  Only asserted when the axioms hold.
    bool partition_sums_agree = true;
  };

  // Throws BoundExceeded.
  TightnessReport check_tight(Representation const& rep,
                              std::size_t           max_fg,
                              std::size_t           max_cover);

  // Every spring and every element whose right set consists of springs
  // only must be represented by zero.
  struct VanishingReport {
    bool                     ok = true;
    std::optional<ElementId> witness;
  };

  VanishingReport spring_vanishing_check(Representation const& rep);

  struct MonicCollapseWitness {
    ElementId   f, g, h;
    std::string identity;
  };

  // For fg = fh with g != h: S_g = S_h and S_g = S_f* S_fg.
  std::optional<MonicCollapseWitness> monic_collapse_check(Representation const& rep);

  struct IdempotentCheck {
    bool        ok = true;
    std::string failed;  // which identity failed
  };

  // Requires D(f) = {e}, ee = e and a tight representation; throws
  // PreconditionUnmet otherwise.  Checks S_e = S_e^2 = S_e* = Q_f.
  IdempotentCheck idempotent_dset_check(Representation const& rep,
                                        ElementId             f,
                                        ElementId             e,
                                        std::size_t           max_fg    = 2,
                                        std::size_t           max_cover = default_max_cover);

  struct CategoryWitness {
    std::string            clause;  // "i", "ii" or "iii"
    std::vector<ElementId> elements;
  };

  // S_v is a projection, objects have orthogonal final projections, and
  // Q_f = P_{s(f)}.
  std::optional<CategoryWitness> category_facts_check(Representation const& rep,
                                                      CategoryView const&   view);

  struct CategoryTightnessWitness {
    ElementId      v;
    ElementSet     H;
    RationalMatrix join;
    RationalMatrix projection;
  };

  struct CategoryTightnessReport {
    bool                                    tight = true;
    std::optional<CategoryTightnessWitness> witness;
    std::size_t                             coverings = 0;
    // Filled when the full check was requested.
    std::optional<bool> full_tight;
    std::optional<bool> agrees;
  };

  // Ranges of all S_f and S_f* together span the space.
  bool nondegenerate(Representation const& rep);

  // For every object v and minimal covering H of D(v): join of P_h = P_v.
  // Throws DegenerateRepresentation and BoundExceeded.  With full_max_fg the
  // full tightness check also runs and the verdicts are compared.
  CategoryTightnessReport category_tightness(Representation const& rep,
                                             CategoryView const&   view,
                                             std::size_t           max_cover,
                                             std::optional<std::size_t> full_max_fg
                                             = std::nullopt);

  // For every partition H of the words beginning with x (members of length
  // at most max_len, inside the truncation): sum of P_h = P_x.  Returns the
  // first failing partition.
  std::optional<std::vector<Word>> prefix_partition_sum_check(
      Representation const&   rep,
      MarkovTruncation const& mk,
      Letter                  x,
      std::size_t             max_len);

  // Worker count from SGPD_THREADS, else the hardware concurrency.
  std::size_t worker_count();

}  // namespace sgpd

#endif  // SGPD_REPS_HPP_
