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

#include "sgpd/covers.hpp"

#include <algorithm>
#include <map>

#include "sgpd/error.hpp"

namespace sgpd {

  namespace {

    ElementSet normalized(SemigroupoidTable const& table, ElementSet set) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      for (auto x : set) {
        if (x.value >= table.size()) {
          raise(ErrorCode::UnknownElement, "element index out of range");
        }
      }
      return set;
    }

    void require_subset(ElementSet const& candidate, ElementSet const& target) {
      if (!std::includes(target.begin(), target.end(), candidate.begin(),
                         candidate.end())) {
        raise(ErrorCode::CandidateNotSubset,
              "candidate is not a subset of the target");
      }
    }

    std::optional<ElementId> first_uncovered(SemigroupoidTable const& table,
                                             ElementSet const&        target,
                                             ElementSet const&        cover) {
      for (auto t : target) {
        bool hit = std::any_of(cover.begin(), cover.end(), [&](ElementId h) {
          return table.common_multiple(t, h).has_value();
        });
        if (!hit) {
          return t;
        }
      }
      return std::nullopt;
    }

    std::optional<std::pair<ElementId, ElementId>>
    first_intersecting(SemigroupoidTable const& table, ElementSet const& set) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          if (table.common_multiple(set[i], set[j])) {
            return std::make_pair(set[i], set[j]);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  CoverCheck is_covering(SemigroupoidTable const& table, CoverSpec const& spec) {
    auto const target    = normalized(table, spec.target);
    auto const candidate = normalized(table, spec.candidate);
    require_subset(candidate, target);
    CoverCheck out;
    out.uncovered = first_uncovered(table, target, candidate);
    out.ok        = !out.uncovered;
    return out;
  }

  CoverCheck is_partition(SemigroupoidTable const& table, CoverSpec const& spec) {
    auto const target    = normalized(table, spec.target);
    auto const candidate = normalized(table, spec.candidate);
    require_subset(candidate, target);
    CoverCheck out;
    out.intersecting = first_intersecting(table, candidate);
    if (!out.intersecting) {
      out.uncovered = first_uncovered(table, target, candidate);
    }
    out.ok = !out.intersecting && !out.uncovered;
    return out;
  }

  bool check_maximality(SemigroupoidTable const& table,
                        ElementSet const&        target_in,
                        ElementSet const&        antichain_in) {
    auto const target    = normalized(table, target_in);
    auto const antichain = normalized(table, antichain_in);
    if (!std::includes(target.begin(), target.end(), antichain.begin(),
                       antichain.end())) {
      raise(ErrorCode::InvalidArgument, "antichain is not inside the target");
    }
    if (first_intersecting(table, antichain)) {
      raise(ErrorCode::InvalidArgument, "antichain is not pairwise disjoint");
    }
    for (auto t : target) {
      if (std::binary_search(antichain.begin(), antichain.end(), t)) {
        continue;
      }
      bool blocked = std::any_of(antichain.begin(), antichain.end(),
                                 [&](ElementId h) {
                                   return table.common_multiple(t, h).has_value();
                                 });
      if (!blocked) {
        return false;
      }
    }
    return true;
  }

  CoverSpec prune_covering(SemigroupoidTable const& table, CoverSpec const& spec) {
    auto const target = normalized(table, spec.target);
    auto       cover  = normalized(table, spec.candidate);
    require_subset(cover, target);
    if (first_uncovered(table, target, cover)) {
      raise(ErrorCode::NotACovering, "candidate does not cover the target");
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < cover.size() && !changed; ++i) {
        for (std::size_t j = 0; j < cover.size(); ++j) {
          if (i != j && table.divides(cover[j], cover[i])) {
            cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
        }
      }
    }
    return {target, cover};
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimal coverings: minimal hitting sets of the neighbourhoods
  // N(t) = { h in target : h meets t }, by the MMCS scheme.
  ////////////////////////////////////////////////////////////////////////

  namespace {

    constexpr std::size_t node_budget = 2'000'000;

    class Mmcs {
     public:
      explicit Mmcs(std::vector<std::vector<std::uint32_t>> nbr)
          : _nbr(std::move(nbr)), _cnt(_nbr.size(), 0), _cand(_nbr.size(), true) {}

      std::vector<std::vector<std::uint32_t>> run() {
        recurse();
        return std::move(_found);
      }

     private:
      std::size_t uncovered_count() const {
        return static_cast<std::size_t>(
            std::count(_cnt.begin(), _cnt.end(), 0U));
      }

      bool all_critical() const {
        for (auto s : _chosen) {
          bool crit = std::any_of(_nbr[s].begin(), _nbr[s].end(),
                                  [&](std::uint32_t t) { return _cnt[t] == 1; });
          if (!crit) {
            return false;
          }
        }
        return true;
      }

      void add(std::uint32_t e) {
        _chosen.push_back(e);
        for (auto t : _nbr[e]) {
          ++_cnt[t];
        }
      }

      void remove(std::uint32_t e) {
        _chosen.pop_back();
        for (auto t : _nbr[e]) {
          --_cnt[t];
        }
      }

      void recurse() {
        if (++_nodes > node_budget) {
          raise(ErrorCode::BoundExceeded,
                "minimal covering search exceeded its node budget");
        }
        // Pick the uncovered edge with the fewest candidates.
        std::optional<std::uint32_t> edge;
        std::size_t                  best = 0;
        for (std::uint32_t t = 0; t < _cnt.size(); ++t) {
          if (_cnt[t] != 0) {
            continue;
          }
          std::size_t c = 0;
          for (auto h : _nbr[t]) {
            c += _cand[h] ? 1 : 0;
          }
          if (!edge || c < best) {
            edge = t;
            best = c;
          }
        }
        if (!edge) {
          _found.push_back(_chosen);
          return;
        }
        std::vector<std::uint32_t> choices;
        for (auto h : _nbr[*edge]) {
          if (_cand[h]) {
            choices.push_back(h);
            _cand[h] = false;
          }
        }
        for (auto e : choices) {
          add(e);
          if (all_critical()) {
            recurse();
          }
          remove(e);
          _cand[e] = true;
        }
      }

      std::vector<std::vector<std::uint32_t>> _nbr;
      std::vector<std::uint32_t>              _cnt;
      std::vector<bool>                       _cand;
      std::vector<std::uint32_t>              _chosen;
      std::vector<std::vector<std::uint32_t>> _found;
      std::size_t                             _nodes = 0;
    };

  }  // namespace

  CoverEnumeration minimal_coverings(SemigroupoidTable const& table,
                                     ElementSet const&        target_in,
                                     std::size_t              max_size) {
    auto const target = normalized(table, target_in);
    auto const n      = target.size();
    std::vector<std::vector<std::uint32_t>> nbr(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (table.common_multiple(target[i], target[j])) {
          nbr[i].push_back(j);
        }
      }
    }
    std::vector<ElementSet> all;
    for (auto& local : Mmcs(std::move(nbr)).run()) {
      std::sort(local.begin(), local.end());
      ElementSet cover;
      for (auto i : local) {
        cover.push_back(target[i]);
      }
      all.push_back(std::move(cover));
    }
    std::sort(all.begin(), all.end());
    CoverEnumeration out;
    for (auto& c : all) {
      if (c.size() <= max_size) {
        out.coverings.push_back(std::move(c));
      } else if (!out.exceeded) {
        out.exceeded = std::move(c);
      }
    }
    return out;
  }

  ElementSet tightness_target(SemigroupoidTable const&       table,
                              std::vector<ExtElement> const& F,
                              std::vector<ExtElement> const& G) {
    ElementSet out;
    for (auto g : G) {
      if (g.is_unit()) {
        return out;
      }
    }
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      ElementId h{i};
      if (table.boundary(h)) {
        continue;
      }
      bool keep = true;
      for (auto f : F) {
        if (!f.is_unit()) {
          auto e = f.element();
          keep   = keep && table.decided(e, h) && table.composable(e, h);
        }
      }
      for (auto g : G) {
        auto e = g.element();
        keep   = keep && table.decided(e, h) && !table.composable(e, h);
      }
      if (keep) {
        out.push_back(h);
      }
    }
    return out;
  }

  std::vector<std::vector<ExtElement>>
  bounded_subsets(std::vector<ExtElement> const& pool, std::size_t lo, std::size_t hi) {
    std::vector<std::vector<ExtElement>> out;
    hi = std::min(hi, pool.size());
    for (std::size_t k = lo; k <= hi; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
      }
      while (true) {
        std::vector<ExtElement> subset;
        for (auto i : idx) {
          subset.push_back(pool[i]);
        }
        out.push_back(std::move(subset));
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }
    return out;
  }

  TightnessInstances enumerate_tightness_instances(SemigroupoidTable const& table,
                                                   std::size_t max_fg,
                                                   std::size_t max_cover) {
    std::vector<ExtElement> pool;
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      if (!table.boundary(ElementId{i})) {
        pool.emplace_back(ElementId{i});
      }
    }
    pool.push_back(ExtElement::unit());

    auto Fs = bounded_subsets(pool, 1, max_fg);
    Fs.emplace_back();
    auto const Gs = bounded_subsets(pool, 0, max_fg);

    TightnessInstances         out;
    std::map<ElementSet, std::size_t> seen;
    for (auto const& F : Fs) {
      for (auto const& G : Gs) {
        bool overlap = std::any_of(F.begin(), F.end(), [&](ExtElement f) {
          return std::find(G.begin(), G.end(), f) != G.end();
        });
        if (overlap) {
          continue;
        }
        auto target = tightness_target(table, F, G);
        auto it     = seen.find(target);
        if (it == seen.end()) {
          auto covers = minimal_coverings(table, target, max_cover);
          if (covers.exceeded) {
            raise(ErrorCode::BoundExceeded,
                  "minimal covering " + format_set(table, *covers.exceeded)
                      + " of " + format_set(table, target) + " has more than "
                      + std::to_string(max_cover) + " members");
          }
          it = seen.emplace(target, out.targets.size()).first;
          out.targets.push_back(target);
          out.coverings.push_back(std::move(covers));
        }
        out.instances.push_back({F, G, it->second});
      }
    }
    return out;
  }

  std::string format_set(SemigroupoidTable const& table, ElementSet const& set) {
    return "{" + join_names(table, set) + "}";
  }

  std::string format_set(SemigroupoidTable const&       table,
                         std::vector<ExtElement> const& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += table.name(set[i]);
    }
    return out + "}";
  }

}  // namespace sgpd
