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

// The verbs behind the command-line tool, as report-producing functions.

#ifndef SGPD_COMMANDS_HPP_
#define SGPD_COMMANDS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgpd/formats.hpp"
#include "sgpd/kgraph.hpp"
#include "sgpd/markov.hpp"
#include "sgpd/report.hpp"
#include "sgpd/springs.hpp"
#include "sgpd/table.hpp"

namespace sgpd {

  // A table together with the structure it was built from, if any.
  struct LoadedTable {
    std::shared_ptr<SemigroupoidTable const> table;
    std::optional<MarkovTruncation>          markov;
    std::optional<KGraph>                    kgraph;
  };

  LoadedTable load_table(RawTable raw);
  LoadedTable load_markov(Matrix01 const& matrix, std::size_t max_len);
  LoadedTable load_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree);

  struct Bounds {
    std::size_t max_fg    = 2;
    std::size_t max_cover = 6;
  };

  Report cmd_validate(RawTable const& raw);
  Report cmd_analyze(LoadedTable const& src);
  Report cmd_despring(LoadedTable const& src, DespringMode mode);
  Report cmd_markov(Matrix01 const& matrix, std::size_t max_len, bool graphable);
  Report cmd_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree);
  Report cmd_covers(LoadedTable const&              src,
                    std::vector<std::string> const& F,
                    std::vector<std::string> const& G,
                    std::size_t                     max_size);
  Report cmd_rep_check(LoadedTable const& src,
                       RepFile const&     rep,
                       bool               tight,
                       Bounds             bounds);
  // style: "generic", "ck" or "kp".
  Report cmd_relations(LoadedTable const&            src,
                       std::string const&            style,
                       bool                          toeplitz,
                       Bounds                        bounds,
                       std::optional<RepFile> const& check);

}  // namespace sgpd

#endif  // SGPD_COMMANDS_HPP_
