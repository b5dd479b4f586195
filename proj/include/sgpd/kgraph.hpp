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

// Higher-rank graphs as degree-bounded categories, and categories seen as
// semigroupoids.

#ifndef SGPD_KGRAPH_HPP_
#define SGPD_KGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/table.hpp"

namespace sgpd {

  struct KEdge {
    std::string   name;
    std::uint32_t color = 1;  // 1..k
    std::uint32_t src   = 0;  // object index
    std::uint32_t dst   = 0;
  };

  // The path "e f" (e after f, so s(e) = r(f)) equals "f2 e2".
  struct KSquare {
    std::string e, f, f2, e2;
  };

  struct KGraphSkeleton {
    std::uint32_t            k = 1;
    std::vector<std::string> objects;
    std::vector<KEdge>       edges;
    std::vector<KSquare>     squares;
  };

  struct Morphism {
    // Edge indices of the normal form, colour 1 leftmost; empty for an
    // object.
    std::vector<std::uint32_t> path;
    std::uint32_t              src = 0;
    std::uint32_t              rng = 0;
    Degree                     degree;
  };

  struct KGraph {
    KGraphSkeleton                           skeleton;
    Degree                                   max_degree;
    // Element i of the table is morphisms[i]; ordered by total degree, then
    // by normal form.  Objects come first, in declaration order.
    std::vector<Morphism>                    morphisms;
    // All edge paths of each morphism (one per colour arrangement).
    std::vector<std::vector<std::vector<std::uint32_t>>> paths;
    std::shared_ptr<SemigroupoidTable const> table;

    [[nodiscard]] ElementId object(std::uint32_t v) const {
      return ElementId{v};
    }
    [[nodiscard]] ElementId   object(std::string const& name) const;
    [[nodiscard]] std::uint32_t source(ElementId f) const {
      return morphisms.at(f.value).src;
    }
    [[nodiscard]] std::uint32_t range(ElementId f) const {
      return morphisms.at(f.value).rng;
    }
    [[nodiscard]] Degree const& degree(ElementId f) const {
      return morphisms.at(f.value).degree;
    }
    // Morphism of an edge path; throws UnknownElement.
    [[nodiscard]] ElementId of_path(std::vector<std::uint32_t> const& path) const;
  };

  // Throws InconsistentSquares, InvalidArgument.
  KGraph build_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree);

  // Throws BadSplit.
  std::pair<ElementId, ElementId> factorize(KGraph const& kg,
                                            ElementId     f,
                                            Degree const& n,
                                            Degree const& m);

  struct DegreeSlice {
    std::uint32_t v = 0;
    Degree        n;
    ElementSet    members;
  };

  // Throws DegreeOutOfRange.
  DegreeSlice lambda_n_v(KGraph const& kg, std::uint32_t v, Degree const& n);

  struct RfnsWitness {
    std::uint32_t v = 0;
    Degree        n;
  };

  std::optional<RfnsWitness> rfns_check(KGraph const& kg);

  struct SliceWitness {
    std::optional<std::pair<ElementId, ElementId>> intersecting;
    std::optional<ElementId>                       uncovered;
  };

  // slice must be pairwise disjoint and meet every element of domain.
  std::optional<SliceWitness> check_slice_partition(SemigroupoidTable const& table,
                                                    ElementSet const&        slice,
                                                    ElementSet const&        domain);

  // Runs the check with the slice of degree n at v and the domain of
  // morphisms with range v and degree at most max_degree - n.  Throws
  // DegreeOutOfRange.
  std::optional<SliceWitness> slice_partition_check(KGraph const& kg,
                                                    std::uint32_t v,
                                                    Degree const& n);

  // Pairs (p, q) with fp = gq of degree n.  Throws DegreeOutOfRange.
  std::vector<std::pair<ElementId, ElementId>>
  common_extensions(KGraph const& kg, ElementId f, ElementId g, Degree const& n);

  // Degree arithmetic helpers.
  Degree degree_add(Degree const& a, Degree const& b);
  Degree degree_join(Degree const& a, Degree const& b);
  bool   degree_leq(Degree const& a, Degree const& b);
  std::vector<Degree> degrees_up_to(Degree const& bound);
  std::string format_degree(Degree const& d);

  // A semigroupoid table read as a small category: objects are the
  // idempotents acting as two-sided identities, every element has exactly
  // one source and one range object, and (f, g) is composable exactly when
  // s(f) = r(g) (for decided pairs).
  struct CategoryView {
    ElementSet                 objects;
    std::vector<ElementId>     source;  // per element
    std::vector<ElementId>     range;
  };

  // Throws NotACategory.
  CategoryView detect_category(SemigroupoidTable const& table);
  CategoryView category_view(KGraph const& kg);

  // Checks additivity d(fg) = d(f) + d(g) and unique factorization for every
  // decided element and split.  Splits with a zero part are reported apart,
  // since a semigroupoid without degree-zero elements cannot meet them.
  struct DegreeFunctionReport {
    bool                    additive = true;
    std::optional<std::string> additivity_witness;
    bool                    positive_splits_unique = true;
    std::optional<std::string> positive_split_witness;
    bool                    zero_splits_unique = true;
    std::optional<std::string> zero_split_witness;
  };

  DegreeFunctionReport validate_degree_function(SemigroupoidTable const& table,
                                                std::vector<Degree> const& degree,
                                                Degree const&              bound);

}  // namespace sgpd

#endif  // SGPD_KGRAPH_HPP_
