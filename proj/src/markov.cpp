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

#include "sgpd/markov.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sgpd/error.hpp"

namespace sgpd {

  Matrix01::Matrix01(std::vector<std::vector<int>> const& rows,
                     std::vector<std::string>             labels)
      : _labels(std::move(labels)) {
    auto const n = rows.size();
    if (n == 0) {
      raise(ErrorCode::EmptyAlphabet, "the matrix has no rows");
    }
    if (_labels.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        _labels.push_back(std::to_string(i + 1));
      }
    }
    if (_labels.size() != n) {
      raise(ErrorCode::InvalidArgument, "label count differs from matrix size");
    }
    for (auto const& l : _labels) {
      if (l.empty() || l.front() == '@'
          || l.find_first_of(" \t\r\n.#") != std::string::npos) {
        raise(ErrorCode::InvalidArgument, "invalid letter label '" + l + "'");
      }
      if (std::count(_labels.begin(), _labels.end(), l) != 1) {
        raise(ErrorCode::InvalidArgument, "duplicate letter label '" + l + "'");
      }
    }
    _a.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        raise(ErrorCode::InvalidArgument, "the matrix is not square");
      }
      for (int v : row) {
        if (v != 0 && v != 1) {
          raise(ErrorCode::InvalidArgument, "matrix entries must be 0 or 1");
        }
        _a.push_back(static_cast<std::uint8_t>(v));
      }
    }
  }

  Letter Matrix01::letter(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      raise(ErrorCode::UnknownLetter, "'" + std::string(label) + "'");
    }
    return static_cast<Letter>(it - _labels.begin());
  }

  bool Matrix01::row_is_zero(Letter i) const {
    for (Letter j = 0; j < size(); ++j) {
      if ((*this)(i, j)) {
        return false;
      }
    }
    return true;
  }

  bool Matrix01::has_zero_rows() const {
    for (Letter i = 0; i < size(); ++i) {
      if (row_is_zero(i)) {
        return true;
      }
    }
    return false;
  }

  namespace {
    bool dotted(std::vector<std::string> const& labels) {
      return std::any_of(labels.begin(), labels.end(),
                         [](auto const& l) { return l.size() > 1; });
    }
  }  // namespace

  std::string Matrix01::word_name(Word const& w) const {
    std::string out;
    bool const  dots = dotted(_labels);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (dots && i != 0) {
        out += '.';
      }
      out += label(w[i]);
    }
    return out;
  }

  Word Matrix01::parse_word(std::string_view text) const {
    Word w;
    if (dotted(_labels)) {
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find('.', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        w.push_back(letter(text.substr(start, end - start)));
        start = end + 1;
      }
    } else {
      for (char c : text) {
        w.push_back(letter(std::string_view(&c, 1)));
      }
    }
    if (!admissible(w)) {
      raise(ErrorCode::InadmissibleWord, "'" + std::string(text) + "'");
    }
    return w;
  }

  bool Matrix01::admissible(Word const& w) const {
    if (w.empty()) {
      return false;
    }
    for (auto l : w) {
      if (l >= size()) {
        return false;
      }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!(*this)(w[i], w[i + 1])) {
        return false;
      }
    }
    return true;
  }

  ElementId MarkovTruncation::id_of(Word const& w) const {
    auto it = std::find(words.begin(), words.end(), w);
    if (it == words.end()) {
      raise(ErrorCode::UnknownElement,
            "'" + matrix->word_name(w) + "' is not in the truncation");
    }
    return ElementId{static_cast<std::uint32_t>(it - words.begin())};
  }

  namespace {

    // Admissible words of length 1..max_len starting with the given
    // letters, by length then lexicographically.
    std::vector<Word> words_from(Matrix01 const&            m,
                                 std::vector<Letter> const& first,
                                 std::size_t                max_len) {
      std::vector<Word> out;
      std::vector<Word> level;
      for (auto l : first) {
        level.push_back({l});
      }
      for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<Word> next;
        for (auto const& w : level) {
          for (Letter j = 0; j < m.size(); ++j) {
            if (m(w.back(), j)) {
              auto x = w;
              x.push_back(j);
              next.push_back(std::move(x));
            }
          }
        }
        level = std::move(next);
      }
      return out;
    }

    bool is_prefix(Word const& a, Word const& b) {
      return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
    }

    bool comparable(Word const& a, Word const& b) {
      return is_prefix(a, b) || is_prefix(b, a);
    }

    bool word_less(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }

  }  // namespace

  MarkovTruncation build_markov(Matrix01 const& matrix, std::size_t max_len) {
    if (max_len == 0) {
      raise(ErrorCode::InvalidArgument, "max_len must be positive");
    }
    MarkovTruncation out;
    out.matrix  = std::make_shared<Matrix01 const>(matrix);
    out.max_len = max_len;
    std::vector<Letter> all(matrix.size());
    std::iota(all.begin(), all.end(), 0U);
    out.words = words_from(matrix, all, max_len);

    std::map<Word, std::uint32_t> index;
    RawTable                      raw;
    Window                        window;
    window.bound = {static_cast<std::uint32_t>(max_len)};
    for (std::uint32_t i = 0; i < out.words.size(); ++i) {
      auto const& w = out.words[i];
      index.emplace(w, i);
      raw.names.push_back(matrix.word_name(w));
      window.weights.push_back({static_cast<std::uint32_t>(w.size())});
      bool const boundary = w.size() == max_len;
      window.boundary.push_back(boundary);
      window.open.push_back(boundary && !matrix.row_is_zero(w.back()));
    }
    for (std::uint32_t a = 0; a < out.words.size(); ++a) {
      auto const& x = out.words[a];
      for (std::uint32_t b = 0; b < out.words.size(); ++b) {
        auto const& y = out.words[b];
        if (x.size() + y.size() > max_len || !matrix(x.back(), y.front())) {
          continue;
        }
        auto xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        raw.products.push_back({a, b, index.at(xy)});
      }
    }
    raw.window = std::move(window);
    out.table  = std::make_shared<SemigroupoidTable const>(
        SemigroupoidTable::from_raw(std::move(raw)));
    return out;
  }

  std::uint64_t admissible_word_count(Matrix01 const& matrix, std::size_t max_len) {
    auto const                 n = matrix.size();
    std::vector<std::uint64_t> ends(n, 1);  // words of the current length ending in j
    std::uint64_t              total = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      total += std::accumulate(ends.begin(), ends.end(), std::uint64_t{0});
      std::vector<std::uint64_t> next(n, 0);
      for (Letter i = 0; i < n; ++i) {
        for (Letter j = 0; j < n; ++j) {
          if (matrix(i, j)) {
            next[j] += ends[i];
          }
        }
      }
      ends = std::move(next);
    }
    return total;
  }

  bool word_disjoint(Matrix01 const& matrix, Word const& a, Word const& b) {
    for (auto const* w : {&a, &b}) {
      for (auto l : *w) {
        if (l >= matrix.size()) {
          raise(ErrorCode::UnknownLetter, std::to_string(l));
        }
      }
      if (!matrix.admissible(*w)) {
        raise(ErrorCode::InadmissibleWord, matrix.word_name(*w));
      }
    }
    return !comparable(a, b);
  }

  int a_xyj(Matrix01 const&            matrix,
            std::vector<Letter> const& X,
            std::vector<Letter> const& Y,
            Letter                     j) {
    auto check = [&](Letter l) {
      if (l >= matrix.size()) {
        raise(ErrorCode::UnknownLetter, std::to_string(l));
      }
    };
    check(j);
    int v = 1;
    for (auto x : X) {
      check(x);
      v *= matrix(x, j) ? 1 : 0;
    }
    for (auto y : Y) {
      check(y);
      v *= matrix(y, j) ? 0 : 1;
    }
    return v;
  }

  std::vector<Letter> letters_of_lambda_fg(Matrix01 const&            matrix,
                                           std::vector<Letter> const& X,
                                           std::vector<Letter> const& Y) {
    std::vector<Letter> out;
    for (Letter j = 0; j < matrix.size(); ++j) {
      if (a_xyj(matrix, X, Y, j) != 0) {
        out.push_back(j);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphability
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool realizes(Matrix01 const& m, GraphRealization const& r) {
      for (Letter i = 0; i < m.size(); ++i) {
        for (Letter j = 0; j < m.size(); ++j) {
          if (m(i, j) != (r.source[i] == r.range[j])) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::optional<GraphRealization> graphable_by_search(Matrix01 const& matrix) {
    auto const n = matrix.size();
    // Slots 0..n-1 hold sources, n..2n-1 ranges; enumerate set partitions of
    // the slots as restricted growth strings.
    std::vector<std::uint32_t> block(2 * n, 0);
    std::vector<std::uint32_t> maxima(2 * n, 0);
    while (true) {
      GraphRealization r;
      r.source.assign(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(n));
      r.range.assign(block.begin() + static_cast<std::ptrdiff_t>(n), block.end());
      r.vertices = *std::max_element(block.begin(), block.end()) + 1;
      if (realizes(matrix, r)) {
        return r;
      }
      std::size_t k = 2 * n - 1;
      while (k > 0 && block[k] == maxima[k - 1] + 1) {
        --k;
      }
      if (k == 0) {
        return std::nullopt;
      }
      ++block[k];
      for (std::size_t t = k + 1; t < 2 * n; ++t) {
        block[t] = 0;
      }
      for (std::size_t t = k; t < 2 * n; ++t) {
        maxima[t] = std::max(maxima[t - 1], block[t]);
      }
    }
  }

  GraphabilityResult graphable(Matrix01 const& matrix) {
    auto const         n = matrix.size();
    GraphabilityResult out;
    for (Letter i = 0; i < n && !out.obstruction; ++i) {
      for (Letter j = 0; j < n && !out.obstruction; ++j) {
        if (!matrix(i, j)) {
          continue;
        }
        for (Letter i2 = 0; i2 < n && !out.obstruction; ++i2) {
          if (!matrix(i2, j)) {
            continue;
          }
          for (Letter j2 = 0; j2 < n; ++j2) {
            if (matrix(i2, j2) && !matrix(i, j2)) {
              out.obstruction = GraphObstruction{i, j, i2, j2};
              break;
            }
          }
        }
      }
    }
    if (!out.obstruction) {
      // One vertex per connected component of the row/column incidence
      // graph; isolated rows and columns get their own vertex.
      std::vector<std::uint32_t> parent(2 * n);
      std::iota(parent.begin(), parent.end(), 0U);
      std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (Letter i = 0; i < n; ++i) {
        for (Letter j = 0; j < n; ++j) {
          if (matrix(i, j)) {
            parent[find(i)] = find(static_cast<std::uint32_t>(n + j));
          }
        }
      }
      std::map<std::uint32_t, std::uint32_t> vertex;
      GraphRealization                       r;
      for (std::uint32_t s = 0; s < 2 * n; ++s) {
        auto v = vertex.emplace(find(s), vertex.size()).first->second;
        (s < n ? r.source : r.range).push_back(v);
      }
      r.vertices = vertex.size();
      if (!realizes(matrix, r)) {
        throw std::logic_error("block realization does not realize the matrix");
      }
      out.graphable   = true;
      out.realization = std::move(r);
    }
    if (graphable_by_search(matrix).has_value() != out.graphable) {
      throw std::logic_error("graphability criteria disagree");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions of the words beginning with a letter
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<Word>> enumerate_prefix_partitions(Matrix01 const& matrix,
                                                             Letter          x,
                                                             std::size_t max_len) {
    if (x >= matrix.size()) {
      raise(ErrorCode::UnknownLetter, std::to_string(x));
    }
    std::function<std::vector<std::vector<Word>>(Word const&)> rec =
        [&](Word const& w) {
          std::vector<std::vector<Word>> out{{w}};
          if (w.size() >= max_len || matrix.row_is_zero(w.back())) {
            return out;
          }
          std::vector<std::vector<Word>> acc{{}};
          for (Letter j = 0; j < matrix.size(); ++j) {
            if (!matrix(w.back(), j)) {
              continue;
            }
            auto wj   = w;
            wj.push_back(j);
            auto subs = rec(wj);
            std::vector<std::vector<Word>> next;
            for (auto const& a : acc) {
              for (auto const& s : subs) {
                auto merged = a;
                merged.insert(merged.end(), s.begin(), s.end());
                next.push_back(std::move(merged));
              }
            }
            acc = std::move(next);
          }
          out.insert(out.end(), acc.begin(), acc.end());
          return out;
        };
    auto all = rec(Word{x});
    for (auto& p : all) {
      std::sort(p.begin(), p.end(), word_less);
    }
    std::sort(all.begin(), all.end(), [](auto const& a, auto const& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          word_less);
    });
    return all;
  }

  PrefixPartitionCheck is_prefix_partition(Matrix01 const&          matrix,
                                           Letter                   x,
                                           std::vector<Word> const& H_in) {
    auto H = H_in;
    for (auto const& h : H) {
      if (!matrix.admissible(h)) {
        raise(ErrorCode::InadmissibleWord, matrix.word_name(h));
      }
      if (h.front() != x) {
        raise(ErrorCode::InvalidArgument,
              "'" + matrix.word_name(h) + "' does not begin with "
                  + matrix.label(x));
      }
    }
    std::sort(H.begin(), H.end(), word_less);
    PrefixPartitionCheck out;
    for (std::size_t i = 0; i < H.size(); ++i) {
      for (std::size_t j = i + 1; j < H.size(); ++j) {
        if (comparable(H[i], H[j])) {
          out.ok           = false;
          out.intersecting = std::make_pair(H[i], H[j]);
          return out;
        }
      }
    }
    std::size_t depth = 1;
    for (auto const& h : H) {
      depth = std::max(depth, h.size());
    }
    for (auto const& w : words_from(matrix, {x}, depth)) {
      bool hit = std::any_of(H.begin(), H.end(),
                             [&](Word const& h) { return comparable(h, w); });
      if (!hit) {
        out.ok        = false;
        out.uncovered = w;
        return out;
      }
    }
    return out;
  }

  std::optional<LemmaWitness> check_first_letter_decomposition(
      Matrix01 const&          matrix,
      Letter                   x,
      std::vector<Word> const& H) {
    auto fail = [&](std::string reason) {
      return std::optional<LemmaWitness>(LemmaWitness{H, std::move(reason), {}});
    };
    auto pc = is_prefix_partition(matrix, x, H);
    if (!pc.ok) {
      auto w = fail(pc.intersecting ? "members intersect" : "not a covering");
      w->intersecting = pc.intersecting;
      return w;
    }
    if (H.size() == 1 && H.front() == Word{x}) {
      return std::nullopt;
    }
    for (auto const& h : H) {
      if (h.size() < 2) {
        return fail("a member of length one coexists with longer members");
      }
    }
    for (Letter j = 0; j < matrix.size(); ++j) {
      std::vector<Word> stripped;
      for (auto const& h : H) {
        if (h[1] == j) {
          stripped.emplace_back(h.begin() + 1, h.end());
        }
      }
      if (!matrix(x, j)) {
        if (!stripped.empty()) {
          return fail("a member continues with a forbidden letter");
        }
        continue;
      }
      if (stripped.empty()) {
        return fail("no member continues with " + matrix.label(j));
      }
      if (!is_prefix_partition(matrix, j, stripped).ok) {
        return fail("stripped members continuing with " + matrix.label(j)
                    + " do not partition");
      }
    }
    return std::nullopt;
  }

  std::optional<LemmaWitness> first_letter_partition_lemma_check(
      Matrix01 const& matrix,
      Letter          x,
      std::size_t     max_len) {
    if (x >= matrix.size()) {
      raise(ErrorCode::UnknownLetter, std::to_string(x));
    }
    if (matrix.row_is_zero(x)) {
      raise(ErrorCode::SpringRow, "row " + matrix.label(x) + " is zero");
    }
    for (auto const& H : enumerate_prefix_partitions(matrix, x, max_len)) {
      if (auto w = check_first_letter_decomposition(matrix, x, H)) {
        return w;
      }
    }
    return std::nullopt;
  }

  std::string format_words(Matrix01 const& matrix, std::vector<Word> const& ws) {
    std::string out = "{";
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += matrix.word_name(ws[i]);
    }
    return out + "}";
  }

}  // namespace sgpd
