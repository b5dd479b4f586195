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

#include "sgpd/kgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sgpd/error.hpp"

namespace sgpd {

  ////////////////////////////////////////////////////////////////////////
  // Degrees
  ////////////////////////////////////////////////////////////////////////

  Degree degree_add(Degree const& a, Degree const& b) {
    Degree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[i] + b.at(i);
    }
    return out;
  }

  Degree degree_join(Degree const& a, Degree const& b) {
    Degree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = std::max(a[i], b.at(i));
    }
    return out;
  }

  bool degree_leq(Degree const& a, Degree const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::uint64_t total(Degree const& d) {
      return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
    }

    bool degree_order(Degree const& a, Degree const& b) {
      auto ta = total(a);
      auto tb = total(b);
      return ta != tb ? ta < tb : a < b;
    }

    Degree degree_sub(Degree const& a, Degree const& b) {
      Degree out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
      }
      return out;
    }

    bool is_zero(Degree const& d) {
      return std::all_of(d.begin(), d.end(), [](auto x) { return x == 0; });
    }
  }  // namespace

  std::vector<Degree> degrees_up_to(Degree const& bound) {
    std::vector<Degree> out;
    Degree              d(bound.size(), 0);
    while (true) {
      out.push_back(d);
      std::size_t i = 0;
      while (i < d.size() && d[i] == bound[i]) {
        d[i] = 0;
        ++i;
      }
      if (i == d.size()) {
        break;
      }
      ++d[i];
    }
    std::sort(out.begin(), out.end(), degree_order);
    return out;
  }

  std::string format_degree(Degree const& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(d[i]);
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Path = std::vector<std::uint32_t>;

    struct Builder {
      KGraphSkeleton const& sk;
      Degree const&         N;
      std::map<std::string, std::uint32_t>   edge_index;
      std::map<std::pair<std::uint32_t, std::uint32_t>,
               std::pair<std::uint32_t, std::uint32_t>>
          swap;

      std::uint32_t color(std::uint32_t e) const {
        return sk.edges[e].color;
      }

      std::string path_text(Path const& p) const {
        std::string out;
        for (std::size_t i = 0; i < p.size(); ++i) {
          out += (i == 0 ? "" : " ") + sk.edges[p[i]].name;
        }
        return out;
      }

      void validate() {
        if (sk.k == 0) {
          raise(ErrorCode::InvalidArgument, "rank must be positive");
        }
        if (sk.objects.empty()) {
          raise(ErrorCode::InvalidArgument, "no objects");
        }
        if (N.size() != sk.k) {
          raise(ErrorCode::DegreeOutOfRange,
                "degree bound has " + std::to_string(N.size())
                    + " components, rank is " + std::to_string(sk.k));
        }
        std::set<std::string> names(sk.objects.begin(), sk.objects.end());
        if (names.size() != sk.objects.size()) {
          raise(ErrorCode::InvalidArgument, "duplicate object name");
        }
        for (std::uint32_t i = 0; i < sk.edges.size(); ++i) {
          auto const& e = sk.edges[i];
          if (!names.insert(e.name).second) {
            raise(ErrorCode::InvalidArgument, "duplicate name '" + e.name + "'");
          }
          if (e.color < 1 || e.color > sk.k) {
            raise(ErrorCode::InvalidArgument, "edge '" + e.name + "' has colour "
                                                  + std::to_string(e.color));
          }
          if (e.src >= sk.objects.size() || e.dst >= sk.objects.size()) {
            raise(ErrorCode::InvalidArgument,
                  "edge '" + e.name + "' has an unknown endpoint");
          }
          edge_index.emplace(e.name, i);
        }
        for (auto const& name : names) {
          if (name.empty() || name.front() == '@'
              || name.find_first_of(" \t.#") != std::string::npos) {
            raise(ErrorCode::InvalidArgument, "invalid name '" + name + "'");
          }
        }
      }

      std::uint32_t edge(std::string const& name) const {
        auto it = edge_index.find(name);
        if (it == edge_index.end()) {
          raise(ErrorCode::InconsistentSquares,
                "square mentions unknown edge '" + name + "'");
        }
        return it->second;
      }

      void load_squares() {
        for (auto const& sq : sk.squares) {
          auto const e = edge(sq.e), f = edge(sq.f), f2 = edge(sq.f2),
                     e2   = edge(sq.e2);
          auto const text = sq.e + " " + sq.f + " = " + sq.f2 + " " + sq.e2;
          auto const& E = sk.edges;
          if (color(e) != color(e2) || color(f) != color(f2)
              || color(e) == color(f)) {
            raise(ErrorCode::InconsistentSquares, "colours do not match in " + text);
          }
          if (E[e].src != E[f].dst || E[f2].src != E[e2].dst
              || E[e].dst != E[f2].dst || E[f].src != E[e2].src) {
            raise(ErrorCode::InconsistentSquares,
                  "endpoints do not match in " + text);
          }
          for (auto [from, to] : {std::pair{std::pair{e, f}, std::pair{f2, e2}},
                                  std::pair{std::pair{f2, e2}, std::pair{e, f}}}) {
            auto [it, fresh] = swap.emplace(from, to);
            if (!fresh && it->second != to) {
              raise(ErrorCode::InconsistentSquares,
                    "path " + path_text({from.first, from.second})
                        + " is identified with both "
                        + path_text({it->second.first, it->second.second})
                        + " and " + path_text({to.first, to.second}));
            }
          }
        }
        for (std::uint32_t x = 0; x < sk.edges.size(); ++x) {
          for (std::uint32_t y = 0; y < sk.edges.size(); ++y) {
            if (sk.edges[x].src == sk.edges[y].dst && color(x) != color(y)
                && swap.count({x, y}) == 0) {
              raise(ErrorCode::InconsistentSquares,
                    "no square for the path " + path_text({x, y}));
            }
          }
        }
      }

      Degree degree_of(Path const& p) const {
        Degree d(sk.k, 0);
        for (auto e : p) {
          ++d[color(e) - 1];
        }
        return d;
      }
    };

    std::uint64_t arrangements(Degree const& d) {
      // Multinomial coefficient, exact for the small degrees used here.
      std::uint64_t out = 1;
      std::uint64_t n   = 0;
      for (auto c : d) {
        for (std::uint32_t i = 1; i <= c; ++i) {
          ++n;
          out = out * n / i;
        }
      }
      return out;
    }

  }  // namespace

  ElementId KGraph::object(std::string const& name) const {
    auto it = std::find(skeleton.objects.begin(), skeleton.objects.end(), name);
    if (it == skeleton.objects.end()) {
      raise(ErrorCode::UnknownElement, "object '" + name + "'");
    }
    return ElementId{static_cast<std::uint32_t>(it - skeleton.objects.begin())};
  }

  ElementId KGraph::of_path(std::vector<std::uint32_t> const& path) const {
    for (std::uint32_t i = 0; i < paths.size(); ++i) {
      for (auto const& p : paths[i]) {
        if (p == path) {
          return ElementId{i};
        }
      }
    }
    raise(ErrorCode::UnknownElement, "no morphism for the given path");
  }

  KGraph build_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree) {
    Builder b{skeleton, max_degree, {}, {}};
    b.validate();
    b.load_squares();
    auto const& E = skeleton.edges;

    // Raw composable edge paths of degree at most N.
    std::vector<Path> raw;
    std::vector<Path> level;
    for (std::uint32_t e = 0; e < E.size(); ++e) {
      if (degree_leq(b.degree_of({e}), max_degree)) {
        level.push_back({e});
      }
    }
    while (!level.empty()) {
      raw.insert(raw.end(), level.begin(), level.end());
      std::vector<Path> next;
      for (auto const& p : level) {
        for (std::uint32_t e = 0; e < E.size(); ++e) {
          if (E[p.back()].src != E[e].dst) {
            continue;
          }
          auto q = p;
          q.push_back(e);
          if (degree_leq(b.degree_of(q), max_degree)) {
            next.push_back(std::move(q));
          }
        }
      }
      level = std::move(next);
    }
    std::map<Path, std::uint32_t> index;
    for (std::uint32_t i = 0; i < raw.size(); ++i) {
      index.emplace(raw[i], i);
    }

    std::vector<std::uint32_t> parent(raw.size());
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (std::uint32_t i = 0; i < raw.size(); ++i) {
      auto const& p = raw[i];
      for (std::size_t pos = 0; pos + 1 < p.size(); ++pos) {
        auto it = b.swap.find({p[pos], p[pos + 1]});
        if (it == b.swap.end()) {
          continue;
        }
        auto q       = p;
        q[pos]       = it->second.first;
        q[pos + 1]   = it->second.second;
        auto a       = find(i);
        auto c       = find(index.at(q));
        parent[std::max(a, c)] = std::min(a, c);
      }
    }

    std::map<std::uint32_t, std::vector<Path>> classes;
    for (std::uint32_t i = 0; i < raw.size(); ++i) {
      classes[find(i)].push_back(raw[i]);
    }

    struct Pending {
      Path              normal;
      std::vector<Path> members;
    };
    std::vector<Pending> pending;
    for (auto& [root, members] : classes) {
      std::map<std::vector<std::uint32_t>, Path const*> by_colors;
      for (auto const& p : members) {
        std::vector<std::uint32_t> colors;
        for (auto e : p) {
          colors.push_back(b.color(e));
        }
        auto [it, fresh] = by_colors.emplace(colors, &p);
        if (!fresh) {
          raise(ErrorCode::InconsistentSquares,
                "paths " + b.path_text(*it->second) + " and " + b.path_text(p)
                    + " are identified but have the same colour order");
        }
      }
      auto const d = b.degree_of(members.front());
      if (by_colors.size() != arrangements(d)) {
        raise(ErrorCode::InconsistentSquares,
              "path " + b.path_text(members.front())
                  + " lacks some factorization");
      }
      // The colour-sorted arrangement is the least key.
      Pending pd{*by_colors.begin()->second, members};
      std::sort(pd.members.begin(), pd.members.end());
      pending.push_back(std::move(pd));
    }
    std::sort(pending.begin(), pending.end(), [&](auto const& x, auto const& y) {
      auto tx = x.normal.size();
      auto ty = y.normal.size();
      return tx != ty ? tx < ty : x.normal < y.normal;
    });

    KGraph kg;
    kg.skeleton   = skeleton;
    kg.max_degree = max_degree;
    for (std::uint32_t v = 0; v < skeleton.objects.size(); ++v) {
      kg.morphisms.push_back({{}, v, v, Degree(skeleton.k, 0)});
      kg.paths.emplace_back();
    }
    std::map<Path, std::uint32_t> class_of;
    for (auto& pd : pending) {
      auto const id = static_cast<std::uint32_t>(kg.morphisms.size());
      kg.morphisms.push_back({pd.normal, E[pd.normal.back()].src,
                              E[pd.normal.front()].dst, b.degree_of(pd.normal)});
      for (auto const& p : pd.members) {
        class_of.emplace(p, id);
      }
      kg.paths.push_back(std::move(pd.members));
    }

    bool const dotted = std::any_of(E.begin(), E.end(),
                                    [](auto const& e) { return e.name.size() > 1; });
    RawTable   table;
    Window     window;
    window.bound = max_degree;
    for (auto const& m : kg.morphisms) {
      if (m.path.empty()) {
        table.names.push_back(skeleton.objects[m.rng]);
      } else {
        std::string name;
        for (std::size_t i = 0; i < m.path.size(); ++i) {
          name += (dotted && i != 0 ? "." : "") + E[m.path[i]].name;
        }
        table.names.push_back(name);
      }
      window.weights.push_back(m.degree);
      bool boundary = false;
      for (std::size_t c = 0; c < max_degree.size(); ++c) {
        boundary = boundary || m.degree[c] == max_degree[c];
      }
      window.boundary.push_back(boundary);
      window.open.push_back(false);
    }
    {
      std::set<std::string> unique(table.names.begin(), table.names.end());
      if (unique.size() != table.names.size()) {
        raise(ErrorCode::InvalidArgument,
              "morphism names collide; use distinct edge and object names");
      }
    }
    auto const n = kg.morphisms.size();
    for (std::uint32_t f = 0; f < n; ++f) {
      auto const& mf = kg.morphisms[f];
      for (std::uint32_t g = 0; g < n; ++g) {
        auto const& mg = kg.morphisms[g];
        if (mf.src != mg.rng
            || !degree_leq(degree_add(mf.degree, mg.degree), max_degree)) {
          continue;
        }
        std::uint32_t product = 0;
        if (mf.path.empty()) {
          product = g;
        } else if (mg.path.empty()) {
          product = f;
        } else {
          auto p = mf.path;
          p.insert(p.end(), mg.path.begin(), mg.path.end());
          product = class_of.at(p);
        }
        table.products.push_back({f, g, product});
      }
    }
    table.window = std::move(window);
    kg.table     = std::make_shared<SemigroupoidTable const>(
        SemigroupoidTable::from_raw(std::move(table)));
    return kg;
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_element(KGraph const& kg, ElementId f) {
      if (f.value >= kg.morphisms.size()) {
        raise(ErrorCode::UnknownElement, "element index out of range");
      }
    }

    void check_rank(KGraph const& kg, Degree const& n) {
      if (n.size() != kg.skeleton.k) {
        raise(ErrorCode::DegreeOutOfRange,
              format_degree(n) + " has the wrong number of components");
      }
    }
  }  // namespace

  std::pair<ElementId, ElementId> factorize(KGraph const& kg,
                                            ElementId     f,
                                            Degree const& n,
                                            Degree const& m) {
    check_element(kg, f);
    auto const& mf = kg.morphisms[f.value];
    if (n.size() != mf.degree.size() || m.size() != mf.degree.size()
        || degree_add(n, m) != mf.degree) {
      raise(ErrorCode::BadSplit, format_degree(n) + " + " + format_degree(m)
                                     + " is not " + format_degree(mf.degree));
    }
    if (is_zero(n)) {
      return {kg.object(mf.rng), f};
    }
    if (is_zero(m)) {
      return {f, kg.object(mf.src)};
    }
    std::vector<std::uint32_t> colors;
    for (auto const* part : {&n, &m}) {
      for (std::uint32_t c = 0; c < part->size(); ++c) {
        colors.insert(colors.end(), (*part)[c], c + 1);
      }
    }
    auto const cut = total(n);
    for (auto const& p : kg.paths[f.value]) {
      bool match = true;
      for (std::size_t i = 0; i < p.size() && match; ++i) {
        match = kg.skeleton.edges[p[i]].color == colors[i];
      }
      if (match) {
        auto const mid = p.begin() + static_cast<std::ptrdiff_t>(cut);
        return {kg.of_path({p.begin(), mid}), kg.of_path({mid, p.end()})};
      }
    }
    raise(ErrorCode::BadSplit, "no factorization found");
  }

  DegreeSlice lambda_n_v(KGraph const& kg, std::uint32_t v, Degree const& n) {
    check_rank(kg, n);
    if (v >= kg.skeleton.objects.size()) {
      raise(ErrorCode::UnknownElement, "object index out of range");
    }
    if (!degree_leq(n, kg.max_degree)) {
      raise(ErrorCode::DegreeOutOfRange,
            format_degree(n) + " exceeds " + format_degree(kg.max_degree));
    }
    DegreeSlice out{v, n, {}};
    for (std::uint32_t i = 0; i < kg.morphisms.size(); ++i) {
      if (kg.morphisms[i].rng == v && kg.morphisms[i].degree == n) {
        out.members.push_back(ElementId{i});
      }
    }
    return out;
  }

  std::optional<RfnsWitness> rfns_check(KGraph const& kg) {
    auto const degrees = degrees_up_to(kg.max_degree);
    for (std::uint32_t v = 0; v < kg.skeleton.objects.size(); ++v) {
      for (auto const& n : degrees) {
        if (lambda_n_v(kg, v, n).members.empty()) {
          return RfnsWitness{v, n};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SliceWitness> check_slice_partition(SemigroupoidTable const& table,
                                                    ElementSet const&        slice,
                                                    ElementSet const&        domain) {
    for (std::size_t i = 0; i < slice.size(); ++i) {
      for (std::size_t j = i + 1; j < slice.size(); ++j) {
        if (table.common_multiple(slice[i], slice[j])) {
          return SliceWitness{std::make_pair(slice[i], slice[j]), std::nullopt};
        }
      }
    }
    for (auto t : domain) {
      bool hit = std::any_of(slice.begin(), slice.end(), [&](ElementId h) {
        return table.common_multiple(t, h).has_value();
      });
      if (!hit) {
        return SliceWitness{std::nullopt, t};
      }
    }
    return std::nullopt;
  }

  std::optional<SliceWitness> slice_partition_check(KGraph const& kg,
                                                    std::uint32_t v,
                                                    Degree const& n) {
    auto const slice = lambda_n_v(kg, v, n);
    auto const room  = degree_sub(kg.max_degree, n);
    ElementSet domain;
    for (std::uint32_t i = 0; i < kg.morphisms.size(); ++i) {
      if (kg.morphisms[i].rng == v && degree_leq(kg.morphisms[i].degree, room)) {
        domain.push_back(ElementId{i});
      }
    }
    return check_slice_partition(*kg.table, slice.members, domain);
  }

  std::vector<std::pair<ElementId, ElementId>>
  common_extensions(KGraph const& kg, ElementId f, ElementId g, Degree const& n) {
    check_element(kg, f);
    check_element(kg, g);
    check_rank(kg, n);
    auto const& df = kg.degree(f);
    auto const& dg = kg.degree(g);
    if (!degree_leq(df, n) || !degree_leq(dg, n) || !degree_leq(n, kg.max_degree)) {
      raise(ErrorCode::DegreeOutOfRange,
            "need d(f), d(g) <= " + format_degree(n) + " <= "
                + format_degree(kg.max_degree));
    }
    auto const& t = *kg.table;
    std::vector<std::pair<ElementId, ElementId>> out;
    auto const ps = lambda_n_v(kg, kg.source(f), degree_sub(n, df)).members;
    auto const qs = lambda_n_v(kg, kg.source(g), degree_sub(n, dg)).members;
    for (auto p : ps) {
      auto fp = t.product(f, p);
      for (auto q : qs) {
        if (fp && fp == t.product(g, q)) {
          out.emplace_back(p, q);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Categories
  ////////////////////////////////////////////////////////////////////////

  CategoryView detect_category(SemigroupoidTable const& table) {
    auto const   n = table.size();
    CategoryView view;
    for (std::uint32_t i = 0; i < n; ++i) {
      ElementId u{i};
      if (table.product(u, u) != u) {
        continue;
      }
      bool identity = true;
      for (std::uint32_t j = 0; j < n && identity; ++j) {
        ElementId f{j};
        if (auto p = table.product(u, f); p && *p != f) {
          identity = false;
        }
        if (auto p = table.product(f, u); p && *p != f) {
          identity = false;
        }
      }
      if (identity) {
        view.objects.push_back(u);
      }
    }
    view.source.resize(n);
    view.range.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      ElementId                f{i};
      std::vector<ElementId>   src, rng;
      for (auto u : view.objects) {
        if (table.composable(f, u)) {
          src.push_back(u);
        }
        if (table.composable(u, f)) {
          rng.push_back(u);
        }
      }
      if (src.size() != 1 || rng.size() != 1) {
        raise(ErrorCode::NotACategory,
              "'" + table.name(f) + "' does not have exactly one source and range");
      }
      view.source[i] = src.front();
      view.range[i]  = rng.front();
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        ElementId f{i}, g{j};
        if (!table.decided(f, g)) {
          continue;
        }
        auto p = table.product(f, g);
        if (p.has_value() != (view.source[i] == view.range[j])) {
          raise(ErrorCode::NotACategory, "composability of (" + table.name(f)
                                             + "," + table.name(g)
                                             + ") does not follow s(f) = r(g)");
        }
        if (p && (view.source[p->value] != view.source[j]
                  || view.range[p->value] != view.range[i])) {
          raise(ErrorCode::NotACategory, "product of (" + table.name(f) + ","
                                             + table.name(g)
                                             + ") has the wrong endpoints");
        }
      }
    }
    return view;
  }

  CategoryView category_view(KGraph const& kg) {
    CategoryView view;
    for (std::uint32_t v = 0; v < kg.skeleton.objects.size(); ++v) {
      view.objects.push_back(ElementId{v});
    }
    for (auto const& m : kg.morphisms) {
      view.source.push_back(ElementId{m.src});
      view.range.push_back(ElementId{m.rng});
    }
    return view;
  }

  DegreeFunctionReport validate_degree_function(SemigroupoidTable const&   table,
                                                std::vector<Degree> const& degree,
                                                Degree const&              bound) {
    if (degree.size() != table.size()) {
      raise(ErrorCode::InvalidArgument, "one degree per element is required");
    }
    DegreeFunctionReport out;
    std::vector<std::vector<std::pair<ElementId, ElementId>>> factors(table.size());
    for (auto [f, g] : table.composable_pairs()) {
      auto fg = *table.product(f, g);
      factors[fg.value].emplace_back(f, g);
      if (out.additive
          && degree[fg.value] != degree_add(degree[f.value], degree[g.value])) {
        out.additive           = false;
        out.additivity_witness = "d(" + table.name(fg) + ") != d("
                                 + table.name(f) + ") + d(" + table.name(g) + ")";
      }
    }
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      auto const& d = degree[i];
      if (!degree_leq(d, bound)) {
        continue;
      }
      for (auto const& n : degrees_up_to(d)) {
        auto const  m     = degree_sub(d, n);
        std::size_t found = 0;
        for (auto [g, h] : factors[i]) {
          found += degree[g.value] == n && degree[h.value] == m ? 1 : 0;
        }
        if (found == 1) {
          continue;
        }
        auto const text = table.name(ElementId{i}) + " at " + format_degree(n)
                          + " + " + format_degree(m) + ": "
                          + std::to_string(found) + " factorizations";
        if (is_zero(n) || is_zero(m)) {
          if (out.zero_splits_unique) {
            out.zero_splits_unique = false;
            out.zero_split_witness = text;
          }
        } else if (out.positive_splits_unique) {
          out.positive_splits_unique = false;
          out.positive_split_witness = text;
        }
      }
    }
    return out;
  }

}  // namespace sgpd
