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

// Dense matrices over the rationals, exact.

#ifndef SGPD_RATIONAL_HPP_
#define SGPD_RATIONAL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sgpd {

  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t n) {
      return RationalMatrix(n, n);
    }
    // Throws DimensionMismatch on ragged input.
    static RationalMatrix from_rows(std::vector<std::vector<mpq_class>> const& rows);
    // "[[1,0],[-1/2,3]]"; throws Parse.
    static RationalMatrix parse(std::string_view text);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    mpq_class& operator()(std::size_t i, std::size_t j) {
      return _e[i * _cols + j];
    }
    mpq_class const& operator()(std::size_t i, std::size_t j) const {
      return _e[i * _cols + j];
    }

    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool           is_zero() const;
    [[nodiscard]] std::size_t    rank() const;
    // Columns of this followed by the columns of other.
    [[nodiscard]] RationalMatrix hconcat(RationalMatrix const& other) const;
    [[nodiscard]] std::string    str() const;

    friend RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b);
    friend RationalMatrix operator+(RationalMatrix const& a, RationalMatrix const& b);
    friend RationalMatrix operator-(RationalMatrix const& a, RationalMatrix const& b);
    friend bool operator==(RationalMatrix const& a, RationalMatrix const& b);

   private:
    std::size_t            _rows = 0;
    std::size_t            _cols = 0;
    std::vector<mpq_class> _e;
  };

  // Adjoint; entries are real.
  inline RationalMatrix adj(RationalMatrix const& a) {
    return a.transpose();
  }

  // P + Q - PQ.
  RationalMatrix join(RationalMatrix const& p, RationalMatrix const& q);

}  // namespace sgpd

#endif  // SGPD_RATIONAL_HPP_
