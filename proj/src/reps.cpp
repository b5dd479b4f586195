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

#include "sgpd/reps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

#include "sgpd/error.hpp"
#include "sgpd/springs.hpp"

namespace sgpd {

  std::size_t worker_count() {
    if (char const* env = std::getenv("SGPD_THREADS")) {
      char*      end = nullptr;
      auto const n   = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && n > 0) {
        return n;
      }
    }
    return std::max(1U, std::thread::hardware_concurrency());
  }

  namespace {

    // Least index in [0, count) for which fail(i) is true, or count.
    template <typename Fn>
    std::size_t first_failure(std::size_t count, Fn&& fail) {
      auto const workers = std::min(worker_count(), count / 32 + 1);
      if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          if (fail(i)) {
            return i;
          }
        }
        return count;
      }
      std::atomic<std::size_t> best{count};
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          while (true) {
            auto i = next.fetch_add(1);
            if (i >= count || i >= best.load()) {
              return;
            }
            if (fail(i)) {
              auto cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
            }
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      return best.load();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Representation
  ////////////////////////////////////////////////////////////////////////

  Representation::Representation(std::shared_ptr<SemigroupoidTable const>   table,
                                 std::size_t                                dim,
                                 std::vector<std::optional<RationalMatrix>> given)
      : _table(std::move(table)), _dim(dim), _one(RationalMatrix::identity(dim)) {
    auto const n = _table->size();
    if (dim == 0) {
      raise(ErrorCode::DimensionMismatch, "dimension must be positive");
    }
    given.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (given[i] && (given[i]->rows() != dim || given[i]->cols() != dim)) {
        raise(ErrorCode::DimensionMismatch,
              "matrix for '" + _table->name(ElementId{i}) + "' is not "
                  + std::to_string(dim) + "x" + std::to_string(dim));
      }
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto [g, h] : _table->composable_pairs()) {
        auto m = _table->product(g, h)->value;
        if (!given[m] && given[g.value] && given[h.value]) {
          given[m] = *given[g.value] * *given[h.value];
          progress = true;
        }
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!given[i]) {
        raise(ErrorCode::InvalidArgument,
              "no matrix for '" + _table->name(ElementId{i}) + "'");
      }
      auto const& s  = *given[i];
      auto const  sa = adj(s);
      _q.push_back(sa * s);
      _p.push_back(s * sa);
      _s.push_back(s);
    }
  }

  Representation Representation::from_named(
      std::shared_ptr<SemigroupoidTable const>                   table,
      std::size_t                                                dim,
      std::vector<std::pair<std::string, RationalMatrix>> const& given) {
    std::vector<std::optional<RationalMatrix>> slots(table->size());
    for (auto const& [name, m] : given) {
      auto id = table->at(name);
      if (slots[id.value]) {
        raise(ErrorCode::InvalidArgument, "two matrices for '" + name + "'");
      }
      slots[id.value] = m;
    }
    return Representation(std::move(table), dim, std::move(slots));
  }

  RationalMatrix const& Representation::S(ExtElement f) const {
    return f.is_unit() ? _one : _s.at(f.element().value);
  }

  RationalMatrix const& Representation::Q(ExtElement f) const {
    return f.is_unit() ? _one : _q.at(f.element().value);
  }

  RationalMatrix const& Representation::P(ExtElement f) const {
    return f.is_unit() ? _one : _p.at(f.element().value);
  }

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  AxiomReport check_axioms(Representation const& rep) {
    auto const& t = rep.table();
    auto const  n = static_cast<std::uint32_t>(t.size());
    AxiomReport report;
    auto fail = [&](std::string clause, std::vector<ExtElement> elems,
                    std::vector<std::pair<std::string, RationalMatrix>> ms) {
      report.ok      = false;
      report.witness = AxiomWitness{std::move(clause), std::move(elems), std::move(ms)};
      return report;
    };
    auto nm = [&](std::string prefix, ElementId f) {
      return prefix + "_" + t.name(f);
    };

    for (std::uint32_t i = 0; i < n; ++i) {
      ElementId f{i};
      auto const& s = rep.S(f);
      if (!(s * adj(s) * s == s)) {
        return fail("i", {f}, {{nm("S", f), s}});
      }
    }

    std::vector<std::vector<bool>> vanishing(n, std::vector<bool>(n, false));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        ElementId f{i}, g{j};
        if (!t.decided(f, g)) {
          ++report.skipped_pairs;
          continue;
        }
        auto const prod = rep.S(f) * rep.S(g);
        if (auto fg = t.product(f, g)) {
          if (!(prod == rep.S(*fg))) {
            return fail("ii", {f, g},
                        {{nm("S", f) + "*" + nm("S", g), prod}, {nm("S", *fg), rep.S(*fg)}});
          }
        } else if (!prod.is_zero()) {
          return fail("ii", {f, g}, {{nm("S", f) + "*" + nm("S", g), prod}});
        } else {
          vanishing[i][j] = true;
        }
      }
    }

    std::vector<std::pair<std::string, RationalMatrix const*>> projections;
    for (std::uint32_t i = 0; i < n; ++i) {
      projections.emplace_back(nm("Q", ElementId{i}), &rep.Q(ElementId{i}));
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      projections.emplace_back(nm("P", ElementId{i}), &rep.P(ElementId{i}));
    }
    for (std::size_t a = 0; a < projections.size(); ++a) {
      for (std::size_t b = a + 1; b < projections.size(); ++b) {
        auto const& x = *projections[a].second;
        auto const& y = *projections[b].second;
        if (!(x * y == y * x)) {
          return fail("commute",
                      {ElementId{static_cast<std::uint32_t>(a % n)},
                       ElementId{static_cast<std::uint32_t>(b % n)}},
                      {{projections[a].first, x}, {projections[b].first, y}});
        }
      }
    }

    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        ElementId f{i}, g{j};
        if (t.common_multiple(f, g)) {
          continue;
        }
        auto const prod = rep.P(f) * rep.P(g);
        if (!prod.is_zero()) {
          return fail("iii", {f, g}, {{nm("P", f) + "*" + nm("P", g), prod}});
        }
      }
    }

    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        ElementId f{i}, g{j};
        if (!t.decided(f, g)) {
          continue;
        }
        auto const qp = rep.Q(f) * rep.P(g);
        if (t.composable(f, g)) {
          if (!(qp == rep.P(g))) {
            return fail("iv", {f, g},
                        {{nm("Q", f) + "*" + nm("P", g), qp}, {nm("P", g), rep.P(g)}});
          }
        } else {
          if (vanishing[i][j]) {
            auto const again
                = adj(rep.S(f)) * (rep.S(f) * rep.S(g)) * adj(rep.S(g));
            if (!(again == qp) || !again.is_zero()) {
              report.rederivation_consistent = false;
            }
          }
          if (!qp.is_zero()) {
            return fail("v", {f, g}, {{nm("Q", f) + "*" + nm("P", g), qp}});
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tightness
  ////////////////////////////////////////////////////////////////////////

  namespace {

    RationalMatrix join_of(Representation const& rep, ElementSet const& H) {
      auto acc = RationalMatrix::zero(rep.dim());
      for (auto h : H) {
        acc = join(acc, rep.P(h));
      }
      return acc;
    }

    RationalMatrix sum_of(Representation const& rep, ElementSet const& H) {
      auto acc = RationalMatrix::zero(rep.dim());
      for (auto h : H) {
        acc = acc + rep.P(h);
      }
      return acc;
    }

    RationalMatrix product_side(Representation const&          rep,
                                std::vector<ExtElement> const& F,
                                std::vector<ExtElement> const& G) {
      auto       acc = RationalMatrix::identity(rep.dim());
      auto const one = RationalMatrix::identity(rep.dim());
      for (auto f : F) {
        acc = acc * rep.Q(f);
      }
      for (auto g : G) {
        acc = acc * (one - rep.Q(g));
      }
      return acc;
    }

  }  // namespace

  TightnessReport check_tight(Representation const& rep,
                              std::size_t           max_fg,
                              std::size_t           max_cover) {
    auto const& t    = rep.table();
    auto const  inst = enumerate_tightness_instances(t, max_fg, max_cover);
    TightnessReport report;
    report.axioms_ok = check_axioms(rep).ok;
    report.instances = inst.instances.size();
    report.targets   = inst.targets.size();

    std::vector<std::vector<RationalMatrix>> joins(inst.targets.size());
    for (std::size_t k = 0; k < inst.targets.size(); ++k) {
      for (auto const& H : inst.coverings[k].coverings) {
        joins[k].push_back(join_of(rep, H));
        ++report.coverings;
        if (report.axioms_ok && is_partition(t, {inst.targets[k], H}).ok
            && !(sum_of(rep, H) == joins[k].back())) {
          report.partition_sums_agree = false;
        }
      }
    }

    auto const bad = first_failure(inst.instances.size(), [&](std::size_t i) {
      auto const& in  = inst.instances[i];
      auto const  rhs = product_side(rep, in.F, in.G);
      for (auto const& j : joins[in.target]) {
        if (!(j == rhs)) {
          return true;
        }
      }
      return false;
    });
    if (bad < inst.instances.size()) {
      auto const& in  = inst.instances[bad];
      auto const  rhs = product_side(rep, in.F, in.G);
      auto const& cov = inst.coverings[in.target].coverings;
      for (std::size_t c = 0; c < cov.size(); ++c) {
        if (!(joins[in.target][c] == rhs)) {
          report.tight   = false;
          report.witness = TightWitness{in.F, in.G, cov[c], joins[in.target][c], rhs};
          break;
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Consequences
  ////////////////////////////////////////////////////////////////////////

  VanishingReport spring_vanishing_check(Representation const& rep) {
    auto const springs = find_springs(rep.table());
    ElementSet dead    = springs.springs;
    dead.insert(dead.end(), springs.derived_dead.begin(), springs.derived_dead.end());
    std::sort(dead.begin(), dead.end());
    for (auto f : dead) {
      if (!rep.S(f).is_zero()) {
        return {false, f};
      }
    }
    return {};
  }

  std::optional<MonicCollapseWitness> monic_collapse_check(Representation const& rep) {
    auto const& t = rep.table();
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      ElementId   f{i};
      auto const& right = t.right_set(f);
      for (std::size_t a = 0; a < right.size(); ++a) {
        auto const g  = right[a];
        auto const fg = *t.product(f, g);
        for (std::size_t b = a + 1; b < right.size(); ++b) {
          auto const h = right[b];
          if (*t.product(f, h) != fg) {
            continue;
          }
          if (!(rep.S(g) == rep.S(h))) {
            return MonicCollapseWitness{f, g, h, "S_g = S_h"};
          }
          if (!(rep.S(g) == adj(rep.S(f)) * rep.S(fg))) {
            return MonicCollapseWitness{f, g, h, "S_g = S_f* S_fg"};
          }
        }
      }
    }
    return std::nullopt;
  }

  IdempotentCheck idempotent_dset_check(Representation const& rep,
                                        ElementId             f,
                                        ElementId             e,
                                        std::size_t           max_fg,
                                        std::size_t           max_cover) {
    auto const& t = rep.table();
    if (f.value >= t.size() || e.value >= t.size()) {
      raise(ErrorCode::UnknownElement, "element index out of range");
    }
    if (t.right_set(f) != ElementSet{e}) {
      raise(ErrorCode::PreconditionUnmet,
            "D(" + t.name(f) + ") is not {" + t.name(e) + "}");
    }
    if (t.product(e, e) != e) {
      raise(ErrorCode::PreconditionUnmet, t.name(e) + " is not idempotent");
    }
    auto const tight = check_tight(rep, max_fg, max_cover);
    if (!tight.axioms_ok || !tight.tight) {
      raise(ErrorCode::PreconditionUnmet, "the representation is not tight");
    }
    auto const& s = rep.S(e);
    if (!(s * s == s)) {
      return {false, "S_e = S_e^2"};
    }
    if (!(adj(s) == s)) {
      return {false, "S_e = S_e*"};
    }
    if (!(s == rep.Q(f))) {
      return {false, "S_e = Q_f"};
    }
    return {};
  }

  std::optional<CategoryWitness> category_facts_check(Representation const& rep,
                                                      CategoryView const&   view) {
    auto const& t = rep.table();
    if (view.source.size() != t.size()) {
      raise(ErrorCode::NotACategory, "category data does not match the table");
    }
    for (auto v : view.objects) {
      auto const& s = rep.S(v);
      if (!(adj(s) == s) || !(s * s == s)) {
        return CategoryWitness{"i", {v}};
      }
    }
    for (std::size_t a = 0; a < view.objects.size(); ++a) {
      for (std::size_t b = a + 1; b < view.objects.size(); ++b) {
        auto u = view.objects[a];
        auto v = view.objects[b];
        if (!(rep.P(u) * rep.P(v)).is_zero()) {
          return CategoryWitness{"ii", {u, v}};
        }
      }
    }
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      ElementId f{i};
      if (!(rep.Q(f) == rep.P(view.source[i]))) {
        return CategoryWitness{"iii", {f, view.source[i]}};
      }
    }
    return std::nullopt;
  }

  bool nondegenerate(Representation const& rep) {
    auto const& t   = rep.table();
    auto        acc = RationalMatrix(rep.dim(), 0);
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      acc = acc.hconcat(rep.S(ElementId{i})).hconcat(adj(rep.S(ElementId{i})));
    }
    return acc.rank() == rep.dim();
  }

  CategoryTightnessReport category_tightness(Representation const&      rep,
                                             CategoryView const&        view,
                                             std::size_t                max_cover,
                                             std::optional<std::size_t> full_max_fg) {
    auto const& t = rep.table();
    if (!nondegenerate(rep)) {
      raise(ErrorCode::DegenerateRepresentation,
            "the ranges of the S_f and S_f* do not span the space");
    }
    CategoryTightnessReport report;
    for (auto v : view.objects) {
      ElementSet target;
      for (auto h : t.right_set(v)) {
        if (!t.boundary(h)) {
          target.push_back(h);
        }
      }
      auto const covers = minimal_coverings(t, target, max_cover);
      if (covers.exceeded) {
        raise(ErrorCode::BoundExceeded,
              "minimal covering " + format_set(t, *covers.exceeded) + " of D("
                  + t.name(v) + ") has more than " + std::to_string(max_cover)
                  + " members");
      }
      for (auto const& H : covers.coverings) {
        ++report.coverings;
        auto j = join_of(rep, H);
        if (!(j == rep.P(v)) && report.tight) {
          report.tight   = false;
          report.witness = CategoryTightnessWitness{v, H, j, rep.P(v)};
        }
      }
    }
    if (full_max_fg) {
      auto full          = check_tight(rep, *full_max_fg, max_cover);
      report.full_tight  = full.tight;
      report.agrees      = full.tight == report.tight;
    }
    return report;
  }

  std::optional<std::vector<Word>> prefix_partition_sum_check(
      Representation const&   rep,
      MarkovTruncation const& mk,
      Letter                  x,
      std::size_t             max_len) {
    if (max_len > mk.max_len) {
      raise(ErrorCode::InvalidArgument, "partitions would leave the truncation");
    }
    auto const px = rep.P(mk.id_of({x}));
    for (auto const& H : enumerate_prefix_partitions(*mk.matrix, x, max_len)) {
      auto acc = RationalMatrix::zero(rep.dim());
      for (auto const& h : H) {
        acc = acc + rep.P(mk.id_of(h));
      }
      if (!(acc == px)) {
        return H;
      }
    }
    return std::nullopt;
  }

}  // namespace sgpd
