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

// Fixtures and brute-force oracles shared by the unit tests.  The oracles
// work on raw composition data only and never call library predicates.

#ifndef SGPD_TESTS_SUPPORT_HPP_
#define SGPD_TESTS_SUPPORT_HPP_

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgpd/formats.hpp"
#include "sgpd/kgraph.hpp"
#include "sgpd/markov.hpp"
#include "sgpd/table.hpp"

namespace sgpd::testing {

  inline Matrix01 mat(std::vector<std::vector<int>> const& rows) {
    return Matrix01(rows);
  }

  using TablePtr = std::shared_ptr<SemigroupoidTable const>;

  inline TablePtr make_table(RawTable raw) {
    return std::make_shared<SemigroupoidTable const>(SemigroupoidTable::from_raw(std::move(raw)));
  }

  inline TablePtr table_from_text(std::string const& text) {
    return make_table(parse_sgpd(text));
  }

  // One vertex v with a loop e.
  inline KGraph fix_c(std::uint32_t n = 3) {
    return build_kgraph(parse_kgr("k: 1\nobjects: v\nedge: e 1 v v\n"), Degree{n});
  }

  // One vertex, blue loop b, red loop r, br = rb.
  inline char const* const fix_d_text
      = "k: 2\nobjects: v\nedge: b 1 v v\nedge: r 2 v v\nsquare: b r = r b\n";

  inline KGraph fix_d() {
    return build_kgraph(parse_kgr(fix_d_text), Degree{2, 2});
  }

  // A single element and no composable pairs.
  inline TablePtr fix_e() {
    return table_from_text("elements: f\n");
  }

  // fg = fh = m.
  inline TablePtr fix_f() {
    return table_from_text("elements: f g h m\ncompose: f g -> m\ncompose: f h -> m\n");
  }

  // Two objects u, v and nothing else.
  inline TablePtr two_objects() {
    return table_from_text("elements: u v\ncompose: u u -> u\ncompose: v v -> v\n");
  }

  // Objects v, u, w; a, b : u -> v; c : w -> u; ac = bc = m.  A category whose
  // slices are not partitions.
  inline TablePtr broken_category() {
    return table_from_text(
        "elements: v u w a b c m\n"
        "compose: v v -> v\ncompose: u u -> u\ncompose: w w -> w\n"
        "compose: v a -> a\ncompose: v b -> b\ncompose: u c -> c\n"
        "compose: a u -> a\ncompose: b u -> b\ncompose: c w -> c\n"
        "compose: a c -> m\ncompose: b c -> m\n"
        "compose: v m -> m\ncompose: m w -> m\n");
  }

  // Composition data as a map, for the oracles below.
  class NaiveTable {
   public:
    explicit NaiveTable(RawTable const& raw) : n(raw.names.size()), weight(n, 0) {
      for (auto const& c : raw.products) {
        prod[{c.left, c.right}] = c.product;
      }
      if (raw.window) {
        for (std::size_t i = 0; i < n; ++i) {
          for (auto w : raw.window->weights[i]) {
            weight[i] += w;
          }
        }
      }
    }

    [[nodiscard]] std::optional<std::uint32_t> mul(std::uint32_t f, std::uint32_t g) const {
      auto it = prod.find({f, g});
      if (it == prod.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Every case of the axiom, straight from its statement.
    [[nodiscard]] bool associative() const {
      for (std::uint32_t f = 0; f < n; ++f) {
        for (std::uint32_t g = 0; g < n; ++g) {
          for (std::uint32_t h = 0; h < n; ++h) {
            if (!triple_ok(f, g, h)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    // Only triples whose total weight stays within the window's bound; the
    // remaining ones may involve products the window cannot see.
    [[nodiscard]] bool associative_within(std::uint32_t bound) const {
      for (std::uint32_t f = 0; f < n; ++f) {
        for (std::uint32_t g = 0; g < n; ++g) {
          for (std::uint32_t h = 0; h < n; ++h) {
            if (weight[f] + weight[g] + weight[h] <= bound && !triple_ok(f, g, h)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    [[nodiscard]] bool triple_ok(std::uint32_t f, std::uint32_t g, std::uint32_t h) const {
      auto fg = mul(f, g);
      auto gh = mul(g, h);
      std::optional<std::uint32_t> fg_h = fg ? mul(*fg, h) : std::nullopt;
      std::optional<std::uint32_t> f_gh = gh ? mul(f, *gh) : std::nullopt;
      bool const i   = fg && gh;
      bool const ii  = fg && fg_h;
      bool const iii = gh && f_gh;
      if (i || ii || iii) {
        return fg && gh && fg_h && f_gh && *fg_h == *f_gh;
      }
      return true;
    }

    [[nodiscard]] bool divides(std::uint32_t f, std::uint32_t g) const {
      if (f == g) {
        return true;
      }
      for (std::uint32_t h = 0; h < n; ++h) {
        if (mul(f, h) == g) {
          return true;
        }
      }
      return false;
    }

    [[nodiscard]] bool intersect(std::uint32_t f, std::uint32_t g) const {
      for (std::uint32_t m = 0; m < n; ++m) {
        if (divides(f, m) && divides(g, m)) {
          return true;
        }
      }
      return false;
    }

    [[nodiscard]] bool covers(std::vector<std::uint32_t> const& target,
                              std::vector<std::uint32_t> const& H) const {
      for (auto x : target) {
        bool hit = false;
        for (auto h : H) {
          hit = hit || intersect(x, h);
        }
        if (!hit) {
          return false;
        }
      }
      return true;
    }

    // Inclusion-minimal coverings of target by subsets of target.
    [[nodiscard]] std::set<std::vector<std::uint32_t>>
    minimal_coverings(std::vector<std::uint32_t> const& target) const {
      std::set<std::vector<std::uint32_t>> out;
      auto const                           m = target.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint32_t> H;
        for (std::size_t i = 0; i < m; ++i) {
          if ((mask >> i) & 1U) {
            H.push_back(target[i]);
          }
        }
        if (!covers(target, H)) {
          continue;
        }
        bool minimal = true;
        for (std::size_t drop = 0; drop < H.size() && minimal; ++drop) {
          auto smaller = H;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
          minimal = !covers(target, smaller);
        }
        if (minimal) {
          out.insert(H);
        }
      }
      return out;
    }

    std::size_t                                                   n;
    std::vector<std::uint32_t>                                    weight;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> prod;
  };

  // Random composition data on n elements with the given number of pairs.
  inline RawTable random_raw(std::mt19937& rng, std::size_t n, std::size_t pairs) {
    RawTable raw;
    for (std::size_t i = 0; i < n; ++i) {
      raw.names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    std::set<std::pair<std::uint32_t, std::uint32_t>> used;
    for (std::size_t k = 0; k < pairs; ++k) {
      auto f = pick(rng);
      auto g = pick(rng);
      if (used.insert({f, g}).second) {
        raw.products.push_back({f, g, pick(rng)});
      }
    }
    return raw;
  }

  // Rejection-samples an associative table with 2..max_n elements.
  inline RawTable random_semigroupoid(std::mt19937& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(2, max_n);
    for (;;) {
      auto const n     = size(rng);
      auto const pairs = std::uniform_int_distribution<std::size_t>(0, n + 2)(rng);
      auto       raw   = random_raw(rng, n, pairs);
      if (NaiveTable(raw).associative()) {
        return raw;
      }
    }
  }

  inline std::vector<std::uint32_t> ids(ElementSet const& s) {
    std::vector<std::uint32_t> out;
    for (auto x : s) {
      out.push_back(x.value);
    }
    return out;
  }

  inline ElementSet as_set(std::vector<std::uint32_t> const& xs) {
    ElementSet out;
    for (auto x : xs) {
      out.push_back(ElementId{x});
    }
    return out;
  }

  inline std::vector<std::string> names_of(SemigroupoidTable const& t, ElementSet const& s) {
    std::vector<std::string> out;
    for (auto x : s) {
      out.push_back(t.name(x));
    }
    return out;
  }

}  // namespace sgpd::testing

#endif  // SGPD_TESTS_SUPPORT_HPP_
