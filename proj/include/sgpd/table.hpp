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

// The semigroupoid data model: a finite carrier, a set of composable pairs
// and a product defined on exactly those pairs.  Tables are immutable once
// built and are only ever built through the associativity validator.

#ifndef SGPD_TABLE_HPP_
#define SGPD_TABLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sgpd {

  struct ElementId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(ElementId, ElementId) = default;
  };

  // Sorted, duplicate-free.
  using ElementSet = std::vector<ElementId>;

  // An element of the carrier, or the formal unit adjoined outside it.  The
  // unit is never stored in a table; it orders after every element.
  class ExtElement {
   public:
    constexpr ExtElement(ElementId id) noexcept : _id(id) {}  // NOLINT

    static constexpr ExtElement unit() noexcept {
      return ExtElement();
    }

    [[nodiscard]] constexpr bool is_unit() const noexcept {
      return !_id.has_value();
    }

    [[nodiscard]] ElementId element() const;

    friend constexpr bool operator==(ExtElement, ExtElement) = default;
    friend constexpr bool operator<(ExtElement a, ExtElement b) noexcept {
      if (a.is_unit() || b.is_unit()) {
        return !a.is_unit() && b.is_unit();
      }
      return *a._id < *b._id;
    }

   private:
    constexpr ExtElement() noexcept = default;
    std::optional<ElementId> _id;
  };

  // Text token for the unit in element lists.  Element names may not begin
  // with '@'.
  inline constexpr std::string_view unit_token = "@1";

  using Degree = std::vector<std::uint32_t>;

  // Degree-bounded view of an infinite structure (Markov words up to a length,
  // k-graph morphisms up to a degree).  A pair is decided when the sum of the
  // weights stays within the bound; undecided pairs say nothing about
  // composability and are skipped by every check.
  struct Window {
    std::vector<Degree> weights;
    Degree              bound;
    // Elements whose weight reaches the bound in some component.
    std::vector<bool> boundary;
    // Boundary elements whose empty right set is a truncation artifact.
    std::vector<bool> open;
  };

  struct Composition {
    std::uint32_t left;
    std::uint32_t right;
    std::uint32_t product;

    friend constexpr bool operator==(Composition const&, Composition const&)
        = default;
  };

  // Unvalidated table data, as read from a file or produced by a builder.
  struct RawTable {
    std::vector<std::string> names;
    std::vector<Composition> products;
    std::optional<Window>    window;

    [[nodiscard]] std::uint32_t index_of(std::string_view name) const;
    void add(std::string_view f, std::string_view g, std::string_view fg);
  };

  enum class AssociativityCase { I, II, III };

  struct AssociativityViolation {
    enum class Kind { MissingPair, ProductMismatch };

    ElementId         f;
    ElementId         g;
    ElementId         h;
    AssociativityCase premise;
    Kind              kind;
    // For MissingPair: the pair that should have been composable.
    std::pair<ElementId, ElementId> missing;
    // For ProductMismatch: (fg)h and f(gh).
    ElementId left_product;
    ElementId right_product;
  };

  struct ValidationReport {
    std::optional<AssociativityViolation> violation;
    // Triples skipped because they leave the window.
    std::size_t skipped_triples = 0;
    std::size_t checked_triples = 0;

    [[nodiscard]] bool ok() const noexcept {
      return !violation.has_value();
    }
  };

  // Checks the three-case associativity axiom exhaustively, returning the
  // first violating triple in (f, g, h) index order.  Throws MalformedTable
  // for out-of-range indices or a pair with two different products.
  ValidationReport validate_associativity(RawTable const& raw);

  std::string describe(AssociativityViolation const& v, RawTable const& raw);

  class SemigroupoidTable {
   public:
    // Validates raw and throws MalformedTable (with the witness) if the
    // associativity axiom fails.
    static SemigroupoidTable from_raw(RawTable raw);

    [[nodiscard]] std::size_t size() const noexcept {
      return _raw.names.size();
    }

    [[nodiscard]] std::string const& name(ElementId f) const;
    [[nodiscard]] std::string        name(ExtElement f) const;
    [[nodiscard]] std::optional<ElementId> find(std::string_view name) const;
    // Throws UnknownElement.
    [[nodiscard]] ElementId  at(std::string_view name) const;
    [[nodiscard]] ExtElement resolve(std::string_view token) const;

    [[nodiscard]] bool composable(ElementId f, ElementId g) const;
    [[nodiscard]] std::optional<ElementId> product(ElementId f,
                                                   ElementId g) const;
    // D(f), ascending.
    [[nodiscard]] ElementSet const& right_set(ElementId f) const;

    [[nodiscard]] bool has_window() const noexcept {
      return _raw.window.has_value();
    }
    [[nodiscard]] std::optional<Window> const& window() const noexcept {
      return _raw.window;
    }
    [[nodiscard]] bool decided(ElementId f, ElementId g) const;
    [[nodiscard]] bool boundary(ElementId f) const;
    [[nodiscard]] bool open(ElementId f) const;
    [[nodiscard]] Degree const* weight(ElementId f) const;

    [[nodiscard]] bool divides(ElementId f, ElementId g) const;
    // Least common multiple token, if any.
    [[nodiscard]] std::optional<ElementId> common_multiple(ElementId f,
                                                           ElementId g) const;

    [[nodiscard]] std::vector<std::pair<ElementId, ElementId>>
    composable_pairs() const;

    [[nodiscard]] ElementSet all() const;

    [[nodiscard]] RawTable const& raw() const noexcept {
      return _raw;
    }

   private:
    SemigroupoidTable() = default;

    [[nodiscard]] std::size_t words() const noexcept {
      return (size() + 63) / 64;
    }

    RawTable                                       _raw;
    std::unordered_map<std::string, std::uint32_t> _index;
    std::vector<std::int32_t>                       _product;
    std::vector<ElementSet>                         _right;
    // Row f has bit g set iff f divides g.
    std::vector<std::uint64_t> _multiples;
  };

  struct DSet {
    ExtElement owner;
    ElementSet members;
  };

  // Unit acts as a two-sided identity.  Throws NotComposable.
  ExtElement compose(SemigroupoidTable const& table, ExtElement f, ExtElement g);

  // D(unit) is the whole carrier; the unit is never a member.
  DSet d_set(SemigroupoidTable const& table, ExtElement f);

  bool divides(SemigroupoidTable const& table, ElementId f, ElementId g);
  bool equivalent(SemigroupoidTable const& table, ElementId f, ElementId g);

  struct Intersection {
    std::optional<ElementId> common_multiple;
    // False when the table is a window onto a larger structure, in which
    // case "disjoint" means "no common multiple inside the window".
    bool certified = true;

    [[nodiscard]] bool disjoint() const noexcept {
      return !common_multiple.has_value();
    }
  };

  Intersection intersects(SemigroupoidTable const& table,
                          ElementId                f,
                          ElementId                g);

  // nullopt when f is monic; otherwise the least pair (g, h), g != h, fg = fh.
  std::optional<std::pair<ElementId, ElementId>>
  is_monic(SemigroupoidTable const& table, ElementId f);

  // Elements composable after all of F and after none of G.  A unit in F is
  // ignored; a unit in G empties the result.
  ElementSet lambda_fg(SemigroupoidTable const&    table,
                       std::vector<ExtElement> const& F,
                       std::vector<ExtElement> const& G);

  std::string join_names(SemigroupoidTable const& table,
                         ElementSet const&        set,
                         std::string_view         sep = ",");

}  // namespace sgpd

#endif  // SGPD_TABLE_HPP_
