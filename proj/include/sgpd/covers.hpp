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

// Coverings, partitions and the enumeration of minimal coverings used by the
// tightness checks.

#ifndef SGPD_COVERS_HPP_
#define SGPD_COVERS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sgpd/table.hpp"

namespace sgpd {

  struct CoverSpec {
    ElementSet target;
    ElementSet candidate;
  };

  struct CoverCheck {
    bool                     ok = true;
    std::optional<ElementId> uncovered;
    std::optional<std::pair<ElementId, ElementId>> intersecting;
  };

  // Throws CandidateNotSubset.
  CoverCheck is_covering(SemigroupoidTable const& table, CoverSpec const& spec);
  CoverCheck is_partition(SemigroupoidTable const& table, CoverSpec const& spec);

  // True iff no element of target can be added to the (pairwise disjoint)
  // antichain.  Throws InvalidArgument if the antichain is not pairwise
  // disjoint or not inside target.
  bool check_maximality(SemigroupoidTable const& table,
                        ElementSet const&        target,
                        ElementSet const&        antichain);

  // Repeatedly drops h2 when some other member h1 divides it.  Throws
  // NotACovering.
  CoverSpec prune_covering(SemigroupoidTable const& table, CoverSpec const& spec);

  struct CoverEnumeration {
    // Inclusion-minimal coverings with at most max_size members, sorted.
    std::vector<ElementSet> coverings;
    // The least minimal covering that is larger than max_size, if any.
    std::optional<ElementSet> exceeded;
  };

  inline constexpr std::size_t default_max_cover = 6;

  // Throws CandidateNotSubset if target is not a set of table elements, and
  // BoundExceeded if the search itself grows beyond a fixed node budget.
  CoverEnumeration minimal_coverings(SemigroupoidTable const& table,
                                     ElementSet const&        target,
                                     std::size_t max_size = default_max_cover);

  // The set that an (F, G) tightness relation must cover: non-boundary
  // elements h with every pair (f, h), (g, h) decided, (f, h) composable and
  // (g, h) not.  Without a window this is lambda_fg.
  ElementSet tightness_target(SemigroupoidTable const&       table,
                              std::vector<ExtElement> const& F,
                              std::vector<ExtElement> const& G);

  struct TightnessInstance {
    std::vector<ExtElement> F;
    std::vector<ExtElement> G;
    std::size_t             target;  // index into TightnessInstances::targets
  };

  struct TightnessInstances {
    std::vector<ElementSet>        targets;
    std::vector<CoverEnumeration>  coverings;  // parallel to targets
    std::vector<TightnessInstance> instances;
  };

  // All (F, G) with |F|, |G| <= max_fg drawn from the non-boundary elements
  // and the unit, F and G disjoint.  Nonempty F come first (by size, then
  // lexicographically, unit last), the empty F last; G ascends from the
  // empty set.  Throws BoundExceeded if some target has a minimal covering
  // larger than max_cover.
  TightnessInstances enumerate_tightness_instances(SemigroupoidTable const& table,
                                                   std::size_t max_fg,
                                                   std::size_t max_cover);

  // Subsets of pool of size lo..hi, by size then lexicographically.
  std::vector<std::vector<ExtElement>>
  bounded_subsets(std::vector<ExtElement> const& pool, std::size_t lo, std::size_t hi);

  std::string format_set(SemigroupoidTable const& table, ElementSet const& set);
  std::string format_set(SemigroupoidTable const&       table,
                         std::vector<ExtElement> const& set);

}  // namespace sgpd

#endif  // SGPD_COVERS_HPP_
