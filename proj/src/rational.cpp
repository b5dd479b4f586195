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

#include "sgpd/rational.hpp"

#include <cctype>

#include "sgpd/error.hpp"

namespace sgpd {

  RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _e(rows * cols) {}

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  RationalMatrix
  RationalMatrix::from_rows(std::vector<std::vector<mpq_class>> const& rows) {
    if (rows.empty() || rows.front().empty()) {
      raise(ErrorCode::DimensionMismatch, "empty matrix");
    }
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m._cols) {
        raise(ErrorCode::DimensionMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < m._cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  namespace {

    class Scanner {
     public:
      explicit Scanner(std::string_view s) : _s(s) {}

      void skip() {
        while (_p < _s.size() && std::isspace(static_cast<unsigned char>(_s[_p]))) {
          ++_p;
        }
      }

      bool accept(char c) {
        skip();
        if (_p < _s.size() && _s[_p] == c) {
          ++_p;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          raise(ErrorCode::Parse, std::string("expected '") + c + "' in matrix '"
                                      + std::string(_s) + "'");
        }
      }

      mpq_class number() {
        skip();
        auto start = _p;
        while (_p < _s.size()
               && (std::isdigit(static_cast<unsigned char>(_s[_p])) || _s[_p] == '-'
                   || _s[_p] == '+' || _s[_p] == '/')) {
          ++_p;
        }
        std::string text(_s.substr(start, _p - start));
        if (!text.empty() && text.front() == '+') {
          text.erase(0, 1);
        }
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
          raise(ErrorCode::Parse, "bad rational '" + text + "'");
        }
        q.canonicalize();
        return q;
      }

      bool done() {
        skip();
        return _p == _s.size();
      }

     private:
      std::string_view _s;
      std::size_t      _p = 0;
    };

  }  // namespace

  RationalMatrix RationalMatrix::parse(std::string_view text) {
    Scanner                             sc(text);
    std::vector<std::vector<mpq_class>> rows;
    sc.expect('[');
    do {
      sc.expect('[');
      std::vector<mpq_class> row;
      do {
        row.push_back(sc.number());
      } while (sc.accept(','));
      sc.expect(']');
      rows.push_back(std::move(row));
    } while (sc.accept(','));
    sc.expect(']');
    if (!sc.done()) {
      raise(ErrorCode::Parse, "trailing text after matrix");
    }
    return from_rows(rows);
  }

  RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool RationalMatrix::is_zero() const {
    for (auto const& x : _e) {
      if (sgn(x) != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t RationalMatrix::rank() const {
    auto        m    = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < _cols && rank < _rows; ++c) {
      std::size_t pivot = rank;
      while (pivot < _rows && sgn(m(pivot, c)) == 0) {
        ++pivot;
      }
      if (pivot == _rows) {
        continue;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap(m(pivot, j), m(rank, j));
      }
      for (std::size_t i = rank + 1; i < _rows; ++i) {
        if (sgn(m(i, c)) == 0) {
          continue;
        }
        mpq_class factor = m(i, c) / m(rank, c);
        for (std::size_t j = c; j < _cols; ++j) {
          m(i, j) -= factor * m(rank, j);
        }
      }
      ++rank;
    }
    return rank;
  }

  RationalMatrix RationalMatrix::hconcat(RationalMatrix const& other) const {
    if (other._rows != _rows) {
      raise(ErrorCode::DimensionMismatch, "row counts differ");
    }
    RationalMatrix out(_rows, _cols + other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out(i, j) = (*this)(i, j);
      }
      for (std::size_t j = 0; j < other._cols; ++j) {
        out(i, _cols + j) = other(i, j);
      }
    }
    return out;
  }

  std::string RationalMatrix::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      out += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < _cols; ++j) {
        if (j != 0) {
          out += ",";
        }
        out += (*this)(i, j).get_str();
      }
      out += "]";
    }
    return out + "]";
  }

  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._cols != b._rows) {
      raise(ErrorCode::DimensionMismatch, "cannot multiply matrices");
    }
    RationalMatrix out(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& x = a(i, k);
        if (sgn(x) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  RationalMatrix operator+(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      raise(ErrorCode::DimensionMismatch, "cannot add matrices");
    }
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out._e.size(); ++i) {
      out._e[i] += b._e[i];
    }
    return out;
  }

  RationalMatrix operator-(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      raise(ErrorCode::DimensionMismatch, "cannot subtract matrices");
    }
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out._e.size(); ++i) {
      out._e[i] -= b._e[i];
    }
    return out;
  }

  bool operator==(RationalMatrix const& a, RationalMatrix const& b) {
    return a._rows == b._rows && a._cols == b._cols && a._e == b._e;
  }

  RationalMatrix join(RationalMatrix const& p, RationalMatrix const& q) {
    return p + q - p * q;
  }

}  // namespace sgpd
