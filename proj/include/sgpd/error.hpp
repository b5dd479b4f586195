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

#ifndef SGPD_ERROR_HPP_
#define SGPD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgpd {

  // Input and precondition failures.  Verdicts about the mathematics (an
  // associativity violation, a non-tight representation, ...) are returned
  // as values, never thrown.
  enum class ErrorCode {
    Parse,
    InvalidArgument,
    MalformedTable,
    UnknownElement,
    NotComposable,
    CandidateNotSubset,
    NotACovering,
    BoundExceeded,
    EmptyAlphabet,
    InadmissibleWord,
    UnknownLetter,
    SpringRow,
    InconsistentSquares,
    BadSplit,
    DegreeOutOfRange,
    DimensionMismatch,
    PreconditionUnmet,
    NotACategory,
    DegenerateRepresentation,
    SourcesPresent,
    IncompatibleGenerators,
    BoundaryElement,
  };

  std::string_view error_code_name(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] void raise(ErrorCode code, std::string const& what);

}  // namespace sgpd

#endif  // SGPD_ERROR_HPP_
