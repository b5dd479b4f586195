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

// Text formats.
//
//   .sgpd   elements: a b c          (repeatable)
//           compose: f g -> h        (one per composable pair)
//   .mat01  n, then optionally "labels: a b ...", then n rows of 0/1
//   .kgr    k: 2 / objects: u v / edge: name colour src dst /
//           square: e f = f2 e2
//   .rep    dim: n / name = [[p/q, ...], ...]
//
// '#' starts a comment everywhere.  Errors carry the line number.

#ifndef SGPD_FORMATS_HPP_
#define SGPD_FORMATS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgpd/kgraph.hpp"
#include "sgpd/markov.hpp"
#include "sgpd/rational.hpp"
#include "sgpd/table.hpp"

namespace sgpd {

  // Throws InvalidArgument when the file cannot be read.
  std::string read_file(std::string const& path);

  RawTable    parse_sgpd(std::string_view text);
  std::string write_sgpd(SemigroupoidTable const& table);

  Matrix01 parse_mat01(std::string_view text);

  KGraphSkeleton parse_kgr(std::string_view text);

  struct RepFile {
    std::size_t                                         dim = 0;
    std::vector<std::pair<std::string, RationalMatrix>> matrices;
  };

  RepFile parse_rep(std::string_view text);

  // "2,2" or "3".
  Degree parse_degree(std::string_view text);

}  // namespace sgpd

#endif  // SGPD_FORMATS_HPP_
