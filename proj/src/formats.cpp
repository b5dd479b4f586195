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

#include "sgpd/formats.hpp"

#include <fstream>
#include <sstream>

#include "sgpd/error.hpp"

namespace sgpd {

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      raise(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
      std::string              text;  // comment-stripped
    };

    std::vector<Line> lines_of(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       start  = 0;
      while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string line(text.substr(start, end - start));
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        std::istringstream       is(line);
        std::vector<std::string> tokens;
        for (std::string tok; is >> tok;) {
          tokens.push_back(tok);
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens), line});
        }
        start = end + 1;
      }
      return out;
    }

    [[noreturn]] void fail(Line const& l, std::string const& what) {
      raise(ErrorCode::Parse, "line " + std::to_string(l.number) + ": " + what);
    }

    std::uint32_t to_uint(Line const& l, std::string const& tok) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoul(tok, &used);
        if (used != tok.size()) {
          fail(l, "expected a number, got '" + tok + "'");
        }
        return static_cast<std::uint32_t>(v);
      } catch (std::logic_error const&) {
        fail(l, "expected a number, got '" + tok + "'");
      }
    }

  }  // namespace

  RawTable parse_sgpd(std::string_view text) {
    RawTable raw;
    std::vector<Line> pending;
    for (auto const& l : lines_of(text)) {
      auto const& t = l.tokens;
      if (t[0] == "elements:") {
        raw.names.insert(raw.names.end(), t.begin() + 1, t.end());
      } else if (t[0] == "compose:") {
        pending.push_back(l);
      } else {
        fail(l, "unknown directive '" + t[0] + "'");
      }
    }
    for (auto const& l : pending) {
      auto const& t = l.tokens;
      if (t.size() != 5 || t[3] != "->") {
        fail(l, "expected 'compose: f g -> h'");
      }
      try {
        raw.add(t[1], t[2], t[4]);
      } catch (Error const& e) {
        fail(l, e.what());
      }
    }
    return raw;
  }

  std::string write_sgpd(SemigroupoidTable const& table) {
    std::ostringstream os;
    os << "elements:";
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      os << " " << table.name(ElementId{i});
    }
    os << "\n";
    for (auto [f, g] : table.composable_pairs()) {
      os << "compose: " << table.name(f) << " " << table.name(g) << " -> "
         << table.name(*table.product(f, g)) << "\n";
    }
    return os.str();
  }

  Matrix01 parse_mat01(std::string_view text) {
    auto const lines = lines_of(text);
    if (lines.empty()) {
      raise(ErrorCode::Parse, "empty matrix file");
    }
    auto const& head = lines.front();
    if (head.tokens.size() != 1) {
      fail(head, "expected the matrix size");
    }
    auto const               n = to_uint(head, head.tokens[0]);
    std::size_t              i = 1;
    std::vector<std::string> labels;
    if (i < lines.size() && lines[i].tokens[0] == "labels:") {
      labels.assign(lines[i].tokens.begin() + 1, lines[i].tokens.end());
      ++i;
    }
    std::vector<std::vector<int>> rows;
    for (; i < lines.size(); ++i) {
      std::vector<int> row;
      for (auto const& tok : lines[i].tokens) {
        if (tok != "0" && tok != "1") {
          fail(lines[i], "entries must be 0 or 1");
        }
        row.push_back(tok == "1" ? 1 : 0);
      }
      if (row.size() != n) {
        fail(lines[i], "expected " + std::to_string(n) + " entries");
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() != n) {
      raise(ErrorCode::Parse, "expected " + std::to_string(n) + " rows, found "
                                  + std::to_string(rows.size()));
    }
    return Matrix01(rows, labels);
  }

  KGraphSkeleton parse_kgr(std::string_view text) {
    KGraphSkeleton sk;
    bool           have_k = false;
    auto           object = [&](Line const& l, std::string const& name) {
      for (std::uint32_t v = 0; v < sk.objects.size(); ++v) {
        if (sk.objects[v] == name) {
          return v;
        }
      }
      fail(l, "unknown object '" + name + "'");
    };
    for (auto const& l : lines_of(text)) {
      auto const& t = l.tokens;
      if (t[0] == "k:") {
        if (t.size() != 2) {
          fail(l, "expected 'k: n'");
        }
        sk.k   = to_uint(l, t[1]);
        have_k = true;
      } else if (t[0] == "objects:") {
        sk.objects.insert(sk.objects.end(), t.begin() + 1, t.end());
      } else if (t[0] == "edge:") {
        if (t.size() != 5) {
          fail(l, "expected 'edge: name colour src dst'");
        }
        sk.edges.push_back({t[1], to_uint(l, t[2]), object(l, t[3]), object(l, t[4])});
      } else if (t[0] == "square:") {
        if (t.size() != 6 || t[3] != "=") {
          fail(l, "expected 'square: e f = f2 e2'");
        }
        sk.squares.push_back({t[1], t[2], t[4], t[5]});
      } else {
        fail(l, "unknown directive '" + t[0] + "'");
      }
    }
    if (!have_k) {
      raise(ErrorCode::Parse, "missing 'k:' line");
    }
    return sk;
  }

  RepFile parse_rep(std::string_view text) {
    RepFile out;
    for (auto const& l : lines_of(text)) {
      auto const& t = l.tokens;
      if (t[0] == "dim:") {
        if (t.size() != 2) {
          fail(l, "expected 'dim: n'");
        }
        out.dim = to_uint(l, t[1]);
        continue;
      }
      auto eq = l.text.find('=');
      if (eq == std::string::npos) {
        fail(l, "expected 'name = [[...]]'");
      }
      std::istringstream is(l.text.substr(0, eq));
      std::string        name, extra;
      is >> name;
      if (name.empty() || (is >> extra)) {
        fail(l, "expected a single element name before '='");
      }
      try {
        out.matrices.emplace_back(name, RationalMatrix::parse(l.text.substr(eq + 1)));
      } catch (Error const& e) {
        fail(l, e.what());
      }
    }
    if (out.dim == 0) {
      raise(ErrorCode::Parse, "missing or zero 'dim:'");
    }
    return out;
  }

  Degree parse_degree(std::string_view text) {
    Degree      d;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string tok(text.substr(start, end - start));
      try {
        std::size_t used = 0;
        auto        v    = std::stoul(tok, &used);
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
        d.push_back(static_cast<std::uint32_t>(v));
      } catch (std::logic_error const&) {
        raise(ErrorCode::Parse, "bad degree '" + std::string(text) + "'");
      }
      start = end + 1;
    }
    return d;
  }

}  // namespace sgpd
