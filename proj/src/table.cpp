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

#include "sgpd/table.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sgpd/error.hpp"

namespace sgpd {

  ElementId ExtElement::element() const {
    if (!_id) {
      raise(ErrorCode::InvalidArgument, "the unit is not an element");
    }
    return *_id;
  }

  std::uint32_t RawTable::index_of(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      raise(ErrorCode::UnknownElement, std::string(name));
    }
    return static_cast<std::uint32_t>(it - names.begin());
  }

  void RawTable::add(std::string_view f, std::string_view g, std::string_view fg) {
    products.push_back({index_of(f), index_of(g), index_of(fg)});
  }

  namespace {

    bool fits(Window const& w, std::initializer_list<std::uint32_t> elems) {
      for (std::size_t c = 0; c < w.bound.size(); ++c) {
        std::uint64_t total = 0;
        for (auto e : elems) {
          total += w.weights[e][c];
        }
        if (total > w.bound[c]) {
          return false;
        }
      }
      return true;
    }

    void check_window_shape(RawTable const& raw) {
      if (!raw.window) {
        return;
      }
      auto const& w = *raw.window;
      auto const  n = raw.names.size();
      if (w.weights.size() != n || w.boundary.size() != n || w.open.size() != n) {
        raise(ErrorCode::MalformedTable, "window data does not match the carrier");
      }
      for (auto const& d : w.weights) {
        if (d.size() != w.bound.size()) {
          raise(ErrorCode::MalformedTable, "weight of wrong rank");
        }
      }
    }

    // Dense n*n product array, -1 where not composable.
    std::vector<std::int32_t> dense_products(RawTable const& raw) {
      auto const n = raw.names.size();
      std::vector<std::int32_t> prod(n * n, -1);
      for (auto const& c : raw.products) {
        if (c.left >= n || c.right >= n || c.product >= n) {
          raise(ErrorCode::MalformedTable,
                "product refers to an unknown element");
        }
        auto& slot = prod[c.left * n + c.right];
        if (slot >= 0 && slot != static_cast<std::int32_t>(c.product)) {
          raise(ErrorCode::MalformedTable,
                "pair (" + raw.names[c.left] + "," + raw.names[c.right]
                    + ") has two products");
        }
        slot = static_cast<std::int32_t>(c.product);
      }
      return prod;
    }

  }  // namespace

  ValidationReport validate_associativity(RawTable const& raw) {
    check_window_shape(raw);
    auto const n    = raw.names.size();
    auto const prod = dense_products(raw);
    auto P = [&](std::int64_t a, std::int64_t b) -> std::int32_t {
      if (a < 0 || b < 0) {
        return -1;
      }
      return prod[a * n + b];
    };

    std::vector<std::vector<std::uint32_t>> right(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (prod[a * n + b] >= 0) {
          right[a].push_back(b);
        }
      }
    }

    ValidationReport report;
    auto check = [&](std::uint32_t f, std::uint32_t g, std::uint32_t h) -> bool {
      auto const fg = P(f, g);
      auto const gh = P(g, h);
      bool const p1 = fg >= 0 && gh >= 0;
      bool const p2 = fg >= 0 && P(fg, h) >= 0;
      bool const p3 = gh >= 0 && P(f, gh) >= 0;
      if (!(p1 || p2 || p3)) {
        return false;
      }
      if (raw.window && !fits(*raw.window, {f, g, h})) {
        ++report.skipped_triples;
        return false;
      }
      ++report.checked_triples;
      AssociativityViolation v{ElementId{f},
                               ElementId{g},
                               ElementId{h},
                               p1 ? AssociativityCase::I
                                  : (p2 ? AssociativityCase::II
                                        : AssociativityCase::III),
                               AssociativityViolation::Kind::MissingPair,
                               {},
                               {},
                               {}};
      auto missing = [&](std::int64_t a, std::int64_t b) {
        v.missing = {ElementId{static_cast<std::uint32_t>(a)},
                     ElementId{static_cast<std::uint32_t>(b)}};
        report.violation = v;
        return true;
      };
      if (fg < 0) {
        return missing(f, g);
      }
      if (gh < 0) {
        return missing(g, h);
      }
      auto const left  = P(fg, h);
      auto const right_ = P(f, gh);
      if (left < 0) {
        return missing(fg, h);
      }
      if (right_ < 0) {
        return missing(f, gh);
      }
      if (left != right_) {
        v.kind          = AssociativityViolation::Kind::ProductMismatch;
        v.left_product  = ElementId{static_cast<std::uint32_t>(left)};
        v.right_product = ElementId{static_cast<std::uint32_t>(right_)};
        report.violation = v;
        return true;
      }
      return false;
    };

    for (std::uint32_t f = 0; f < n; ++f) {
      for (std::uint32_t g = 0; g < n; ++g) {
        if (prod[f * n + g] >= 0) {
          for (std::uint32_t h = 0; h < n; ++h) {
            if (check(f, g, h)) {
              return report;
            }
          }
        } else {
          // Only case (iii) can apply, and it needs (g, h) composable.
          for (auto h : right[g]) {
            if (check(f, g, h)) {
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  std::string describe(AssociativityViolation const& v, RawTable const& raw) {
    auto nm = [&](ElementId x) { return raw.names.at(x.value); };
    std::ostringstream os;
    os << "triple (" << nm(v.f) << "," << nm(v.g) << "," << nm(v.h)
       << ") case "
       << (v.premise == AssociativityCase::I
               ? "i"
               : (v.premise == AssociativityCase::II ? "ii" : "iii"));
    if (v.kind == AssociativityViolation::Kind::MissingPair) {
      os << ": pair (" << nm(v.missing.first) << "," << nm(v.missing.second)
         << ") is not composable";
    } else {
      os << ": (fg)h=" << nm(v.left_product) << " but f(gh)="
         << nm(v.right_product);
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupoidTable
  ////////////////////////////////////////////////////////////////////////

  SemigroupoidTable SemigroupoidTable::from_raw(RawTable raw) {
    auto report = validate_associativity(raw);
    if (!report.ok()) {
      raise(ErrorCode::MalformedTable,
            "associativity fails: " + describe(*report.violation, raw));
    }
    SemigroupoidTable t;
    auto const        n = raw.names.size();
    for (std::uint32_t i = 0; i < n; ++i) {
      auto const& nm = raw.names[i];
      if (nm.empty() || nm.front() == '@') {
        raise(ErrorCode::MalformedTable, "invalid element name '" + nm + "'");
      }
      if (!t._index.emplace(nm, i).second) {
        raise(ErrorCode::MalformedTable, "duplicate element '" + nm + "'");
      }
    }
    t._product = dense_products(raw);
    t._right.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (t._product[a * n + b] >= 0) {
          t._right[a].push_back(ElementId{b});
        }
      }
    }
    t._raw = std::move(raw);

    auto const w = t.words();
    t._multiples.assign(n * w, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      auto* row = &t._multiples[a * w];
      row[a / 64] |= std::uint64_t{1} << (a % 64);
      for (auto b : t._right[a]) {
        auto const m = static_cast<std::uint32_t>(t._product[a * n + b.value]);
        row[m / 64] |= std::uint64_t{1} << (m % 64);
      }
    }
    return t;
  }

  std::string const& SemigroupoidTable::name(ElementId f) const {
    return _raw.names.at(f.value);
  }

  std::string SemigroupoidTable::name(ExtElement f) const {
    return f.is_unit() ? std::string(unit_token) : name(f.element());
  }

  std::optional<ElementId> SemigroupoidTable::find(std::string_view nm) const {
    auto it = _index.find(std::string(nm));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return ElementId{it->second};
  }

  ElementId SemigroupoidTable::at(std::string_view nm) const {
    auto id = find(nm);
    if (!id) {
      raise(ErrorCode::UnknownElement, "'" + std::string(nm) + "'");
    }
    return *id;
  }

  ExtElement SemigroupoidTable::resolve(std::string_view token) const {
    if (token == unit_token) {
      return ExtElement::unit();
    }
    return at(token);
  }

  bool SemigroupoidTable::composable(ElementId f, ElementId g) const {
    return product(f, g).has_value();
  }

  std::optional<ElementId> SemigroupoidTable::product(ElementId f,
                                                      ElementId g) const {
    auto const n = size();
    if (f.value >= n || g.value >= n) {
      raise(ErrorCode::UnknownElement, "element index out of range");
    }
    auto p = _product[f.value * n + g.value];
    if (p < 0) {
      return std::nullopt;
    }
    return ElementId{static_cast<std::uint32_t>(p)};
  }

  ElementSet const& SemigroupoidTable::right_set(ElementId f) const {
    return _right.at(f.value);
  }

  bool SemigroupoidTable::decided(ElementId f, ElementId g) const {
    if (!_raw.window) {
      return true;
    }
    return fits(*_raw.window, {f.value, g.value});
  }

  bool SemigroupoidTable::boundary(ElementId f) const {
    return _raw.window && _raw.window->boundary.at(f.value);
  }

  bool SemigroupoidTable::open(ElementId f) const {
    return _raw.window && _raw.window->open.at(f.value);
  }

  Degree const* SemigroupoidTable::weight(ElementId f) const {
    return _raw.window ? &_raw.window->weights.at(f.value) : nullptr;
  }

  bool SemigroupoidTable::divides(ElementId f, ElementId g) const {
    auto const* row = &_multiples.at(f.value * words());
    return (row[g.value / 64] >> (g.value % 64)) & 1U;
  }

  std::optional<ElementId> SemigroupoidTable::common_multiple(ElementId f,
                                                              ElementId g) const {
    auto const  w = words();
    auto const* a = &_multiples.at(f.value * w);
    auto const* b = &_multiples.at(g.value * w);
    for (std::size_t i = 0; i < w; ++i) {
      if (auto both = a[i] & b[i]; both != 0) {
        return ElementId{static_cast<std::uint32_t>(i * 64 + std::countr_zero(both))};
      }
    }
    return std::nullopt;
  }

  std::vector<std::pair<ElementId, ElementId>>
  SemigroupoidTable::composable_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (std::uint32_t a = 0; a < size(); ++a) {
      for (auto b : _right[a]) {
        out.emplace_back(ElementId{a}, b);
      }
    }
    return out;
  }

  ElementSet SemigroupoidTable::all() const {
    ElementSet out(size());
    for (std::uint32_t a = 0; a < size(); ++a) {
      out[a] = ElementId{a};
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitive relations
  ////////////////////////////////////////////////////////////////////////

  ExtElement compose(SemigroupoidTable const& table, ExtElement f, ExtElement g) {
    if (f.is_unit()) {
      return g;
    }
    if (g.is_unit()) {
      return f;
    }
    auto p = table.product(f.element(), g.element());
    if (!p) {
      raise(ErrorCode::NotComposable,
            "(" + table.name(f) + "," + table.name(g) + ")");
    }
    return *p;
  }

  DSet d_set(SemigroupoidTable const& table, ExtElement f) {
    if (f.is_unit()) {
      return {f, table.all()};
    }
    if (f.element().value >= table.size()) {
      raise(ErrorCode::UnknownElement, "element index out of range");
    }
    return {f, table.right_set(f.element())};
  }

  namespace {
    void check_known(SemigroupoidTable const& table,
                     std::initializer_list<ElementId> ids) {
      for (auto id : ids) {
        if (id.value >= table.size()) {
          raise(ErrorCode::UnknownElement, "element index out of range");
        }
      }
    }
  }  // namespace

  bool divides(SemigroupoidTable const& table, ElementId f, ElementId g) {
    check_known(table, {f, g});
    return table.divides(f, g);
  }

  bool equivalent(SemigroupoidTable const& table, ElementId f, ElementId g) {
    return divides(table, f, g) && divides(table, g, f);
  }

  Intersection intersects(SemigroupoidTable const& table,
                          ElementId                f,
                          ElementId                g) {
    check_known(table, {f, g});
    return {table.common_multiple(f, g), !table.has_window()};
  }

  std::optional<std::pair<ElementId, ElementId>>
  is_monic(SemigroupoidTable const& table, ElementId f) {
    check_known(table, {f});
    auto const& right = table.right_set(f);
    for (std::size_t i = 0; i < right.size(); ++i) {
      auto const a = *table.product(f, right[i]);
      for (std::size_t j = i + 1; j < right.size(); ++j) {
        if (*table.product(f, right[j]) == a) {
          return std::make_pair(right[i], right[j]);
        }
      }
    }
    return std::nullopt;
  }

  ElementSet lambda_fg(SemigroupoidTable const&       table,
                       std::vector<ExtElement> const& F,
                       std::vector<ExtElement> const& G) {
    std::vector<bool> keep(table.size(), true);
    for (auto f : F) {
      if (f.is_unit()) {
        continue;
      }
      check_known(table, {f.element()});
      std::vector<bool> in(table.size(), false);
      for (auto h : table.right_set(f.element())) {
        in[h.value] = true;
      }
      for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = keep[i] && in[i];
      }
    }
    for (auto g : G) {
      if (g.is_unit()) {
        return {};
      }
      check_known(table, {g.element()});
      for (auto h : table.right_set(g.element())) {
        keep[h.value] = false;
      }
    }
    ElementSet out;
    for (std::uint32_t i = 0; i < keep.size(); ++i) {
      if (keep[i]) {
        out.push_back(ElementId{i});
      }
    }
    return out;
  }

  std::string join_names(SemigroupoidTable const& table,
                         ElementSet const&        set,
                         std::string_view         sep) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != 0) {
        out += sep;
      }
      out += table.name(set[i]);
    }
    return out;
  }

}  // namespace sgpd
