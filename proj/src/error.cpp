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

#include "sgpd/error.hpp"

namespace sgpd {

  std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::Parse: return "Parse";
      case ErrorCode::InvalidArgument: return "InvalidArgument";
      case ErrorCode::MalformedTable: return "MalformedTable";
      case ErrorCode::UnknownElement: return "UnknownElement";
      case ErrorCode::NotComposable: return "NotComposable";
      case ErrorCode::CandidateNotSubset: return "CandidateNotSubset";
      case ErrorCode::NotACovering: return "NotACovering";
      case ErrorCode::BoundExceeded: return "BoundExceeded";
      case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
      case ErrorCode::InadmissibleWord: return "InadmissibleWord";
      case ErrorCode::UnknownLetter: return "UnknownLetter";
      case ErrorCode::SpringRow: return "SpringRow";
      case ErrorCode::InconsistentSquares: return "InconsistentSquares";
      case ErrorCode::BadSplit: return "BadSplit";
      case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
      case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
      case ErrorCode::NotACategory: return "NotACategory";
      case ErrorCode::DegenerateRepresentation: return "DegenerateRepresentation";
      case ErrorCode::SourcesPresent: return "SourcesPresent";
      case ErrorCode::IncompatibleGenerators: return "IncompatibleGenerators";
      case ErrorCode::BoundaryElement: return "BoundaryElement";
    }
    return "Unknown";
  }

  void raise(ErrorCode code, std::string const& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
  }

}  // namespace sgpd
