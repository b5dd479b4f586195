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

#include "sgpd/springs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace sgpd {

  SpringReport find_springs(SemigroupoidTable const& table) {
    SpringReport      report;
    std::vector<bool> spring(table.size(), false);
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      ElementId f{i};
      if (!table.right_set(f).empty()) {
        continue;
      }
      if (table.open(f)) {
        report.boundary_artifacts.push_back(f);
      } else {
        spring[i] = true;
        report.springs.push_back(f);
      }
    }
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      auto const& right = table.right_set(ElementId{i});
      if (!right.empty()
          && std::all_of(right.begin(), right.end(), [&](ElementId g) {
               return spring[g.value];
             })) {
        report.derived_dead.push_back(ElementId{i});
      }
    }
    return report;
  }

  char const* mode_name(DespringMode mode) noexcept {
    return mode == DespringMode::Finest ? "finest" : "universal";
  }

  namespace {

    struct UnionFind {
      std::vector<std::uint32_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0U);
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

  }  // namespace

  SpringExtension despring(std::shared_ptr<SemigroupoidTable const> table,
                           DespringMode                             mode) {
    SpringExtension out;
    out.base = table;
    out.mode = mode;
    auto const springs = find_springs(*table).springs;
    if (springs.empty()) {
      out.extended   = table;
      out.no_springs = true;
      return out;
    }

    auto const  n = table->size();
    UnionFind   uf(n);
    std::vector<bool> is_spring(n, false);
    for (auto g : springs) {
      is_spring[g.value] = true;
    }
    for (auto [f, g] : table->composable_pairs()) {
      if (!is_spring[g.value]) {
        continue;
      }
      auto fg = *table->product(f, g);
      if (mode == DespringMode::Finest) {
        uf.unite(g.value, fg.value);
      }
    }
    if (mode == DespringMode::Universal) {
      for (auto g : springs) {
        uf.unite(springs.front().value, g.value);
      }
    }

    // Classes keyed by their least member, hence ordered by it.
    std::map<std::uint32_t, ElementSet> classes;
    for (auto g : springs) {
      classes[uf.find(g.value)].push_back(g);
    }

    RawTable raw = table->raw();
    std::unordered_set<std::string> taken(raw.names.begin(), raw.names.end());
    for (auto& [root, members] : classes) {
      std::string name = "e_" + table->name(ElementId{root});
      while (taken.count(name) != 0) {
        name += "'";
      }
      taken.insert(name);
      auto const e = static_cast<std::uint32_t>(raw.names.size());
      raw.names.push_back(name);
      if (raw.window) {
        raw.window->weights.emplace_back(raw.window->bound.size(), 0);
        raw.window->boundary.push_back(false);
        raw.window->open.push_back(false);
      }
      for (auto g : members) {
        raw.products.push_back({g.value, e, g.value});
      }
      raw.products.push_back({e, e, e});
      out.classes.push_back({ElementId{e}, members});
    }
    out.extended = std::make_shared<SemigroupoidTable const>(
        SemigroupoidTable::from_raw(std::move(raw)));
    return out;
  }

}  // namespace sgpd
