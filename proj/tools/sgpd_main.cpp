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

// Command-line front end over the C API.  Exit codes: 0 pass, 1 violation
// found, 2 input error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgpd/sgpd.h"

namespace {

  constexpr int kInputError = 2;

  struct InputError {
    std::string what;
  };

  void check(sgpd_status s) {
    if (s != SGPD_OK) {
      throw InputError{sgpd_last_error()};
    }
  }

  std::string slurp(std::string const& path) {
    char* buf = nullptr;
    check(sgpd_read_file(path.c_str(), &buf));
    std::string text(buf);
    sgpd_string_free(buf);
    return text;
  }

  using SourcePtr = std::unique_ptr<sgpd_source, decltype(&sgpd_source_free)>;
  using ReportPtr = std::unique_ptr<sgpd_report, decltype(&sgpd_report_free)>;

  // Where the semigroupoid comes from: a .sgpd file, a Markov truncation or a
  // k-graph truncation.
  struct SourceOptions {
    std::string matrix;
    std::size_t max_len = 4;
    std::string kgraph;
    std::string max_degree;

    void attach(CLI::App* app) {
      app->add_option("--matrix", matrix, "0-1 matrix file (.mat01)");
      app->add_option("--maxlen", max_len, "maximum word length")->capture_default_str();
      app->add_option("--kgraph", kgraph, "k-graph skeleton file (.kgr)");
      app->add_option("--maxdeg", max_degree, "degree bound, as in 2,2");
    }

    // Consumes the table path from positional arguments when no other source
    // was given.
    SourcePtr load(std::vector<std::string>& positional) const {
      sgpd_source* out   = nullptr;
      int          given = (matrix.empty() ? 0 : 1) + (kgraph.empty() ? 0 : 1);
      if (given > 1) {
        throw InputError{"give at most one of --matrix and --kgraph"};
      }
      if (!matrix.empty()) {
        check(sgpd_source_from_mat01(slurp(matrix).c_str(), max_len, &out));
      } else if (!kgraph.empty()) {
        if (max_degree.empty()) {
          throw InputError{"--kgraph needs --maxdeg"};
        }
        check(sgpd_source_from_kgr(slurp(kgraph).c_str(), max_degree.c_str(), &out));
      } else {
        if (positional.empty()) {
          throw InputError{"missing table file"};
        }
        auto const path = positional.front();
        positional.erase(positional.begin());
        check(sgpd_source_from_sgpd(slurp(path).c_str(), &out));
      }
      return {out, &sgpd_source_free};
    }

    // As load, for verbs whose only positional argument is the table.
    SourcePtr load_only(std::vector<std::string>& positional) const {
      auto src = load(positional);
      if (!positional.empty()) {
        throw InputError{"unexpected argument '" + positional.front() + "'"};
      }
      return src;
    }
  };

  std::vector<std::string> split_set(std::string const& s) {
    std::vector<std::string> out;
    if (s.empty() || s == "-" || s == "{}") {
      return out;
    }
    std::string body = s;
    if (body.front() == '{' && body.back() == '}') {
      body = body.substr(1, body.size() - 2);
    }
    std::stringstream ss(body);
    for (std::string tok; std::getline(ss, tok, ',');) {
      if (tok.empty()) {
        throw InputError{"empty element name in '" + s + "'"};
      }
      out.push_back(tok);
    }
    return out;
  }

  std::vector<char const*> c_strs(std::vector<std::string> const& xs) {
    std::vector<char const*> out;
    for (auto const& x : xs) {
      out.push_back(x.c_str());
    }
    return out;
  }

  int print(ReportPtr const& r, bool json) {
    if (json) {
      std::fputs(sgpd_report_json(r.get()), stdout);
    } else {
      std::fputs(sgpd_report_machine(r.get()), stdout);
      std::string const human = sgpd_report_human(r.get());
      if (!human.empty()) {
        std::fputs("\n", stdout);
        std::fputs(human.c_str(), stdout);
      }
    }
    return sgpd_report_exit_code(r.get());
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroupoid analysis: tables, Markov and k-graph truncations, "
               "representations and presentations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sgpd_version());
  bool json = false;
  app.add_flag("--json", json, "emit the machine section as JSON only");
  app.fallthrough();

  std::size_t max_fg    = 2;
  std::size_t max_cover = 6;

  // validate
  auto*       validate = app.add_subcommand("validate", "check a .sgpd table");
  std::string validate_file;
  validate->add_option("table", validate_file, ".sgpd file")->required();

  // analyze
  auto*                    analyze = app.add_subcommand("analyze", "springs, division and D sets");
  SourceOptions            analyze_src;
  std::vector<std::string> analyze_pos;
  analyze_src.attach(analyze);
  analyze->add_option("table", analyze_pos, ".sgpd file");

  // despring
  auto*                    desp = app.add_subcommand("despring", "adjoin idempotents to springs");
  SourceOptions            desp_src;
  std::vector<std::string> desp_pos;
  std::string              desp_mode = "finest";
  std::string              desp_out;
  desp_src.attach(desp);
  desp->add_option("table", desp_pos, ".sgpd file");
  desp->add_option("--mode", desp_mode, "finest or universal")
      ->check(CLI::IsMember({"finest", "universal"}))
      ->capture_default_str();
  desp->add_option("--out", desp_out, "write the extended table here");

  // markov
  auto*       markov = app.add_subcommand("markov", "Markov truncation of a 0-1 matrix");
  std::string markov_matrix;
  std::size_t markov_len = 4;
  bool        markov_graph = false;
  markov->add_option("--matrix", markov_matrix, ".mat01 file")->required();
  markov->add_option("--maxlen", markov_len, "maximum word length")->capture_default_str();
  markov->add_flag("--graphable", markov_graph, "decide whether A is an edge matrix");

  // kgraph check
  auto* kgraph = app.add_subcommand("kgraph", "k-graph truncations");
  kgraph->require_subcommand(1);
  auto*       kcheck = kgraph->add_subcommand("check", "validate a .kgr skeleton");
  std::string kgraph_file;
  std::string kgraph_deg;
  kcheck->add_option("file", kgraph_file, ".kgr file")->required();
  kcheck->add_option("--maxdeg", kgraph_deg, "degree bound, as in 2,2")->required();

  // covers
  auto*                    covers = app.add_subcommand("covers", "minimal coverings of a target");
  SourceOptions            covers_src;
  std::vector<std::string> covers_pos;
  std::vector<std::string> covers_fg;
  std::size_t              covers_max = 6;
  covers_src.attach(covers);
  covers->add_option("table", covers_pos, ".sgpd file");
  covers->add_option("--target-fg", covers_fg, "F and G as comma lists; - for empty")
      ->expected(2)
      ->required();
  covers->add_option("--max-size", covers_max, "largest covering to report")
      ->capture_default_str();

  // rep check
  auto* rep = app.add_subcommand("rep", "representations");
  rep->require_subcommand(1);
  auto*                    rcheck = rep->add_subcommand("check", "check a .rep file");
  SourceOptions            rep_src;
  std::vector<std::string> rep_pos;
  bool                     rep_tight = false;
  rep_src.attach(rcheck);
  rcheck->add_option("files", rep_pos, "[table.sgpd] rep.rep")->required();
  rcheck->add_flag("--tight", rep_tight, "also check tightness");
  rcheck->add_option("--max-fg", max_fg, "largest F and G")->capture_default_str();
  rcheck->add_option("--max-cover", max_cover, "largest covering")->capture_default_str();

  // relations
  auto*       rel = app.add_subcommand("relations", "emit a presentation");
  SourceOptions            rel_src;
  std::vector<std::string> rel_pos;
  std::string              rel_style = "generic";
  bool                     rel_toeplitz = false;
  std::string              rel_check;
  rel_src.attach(rel);
  rel->add_option("table", rel_pos, ".sgpd file");
  rel->add_option("--style", rel_style, "generic, ck or kp")
      ->check(CLI::IsMember({"generic", "ck", "kp"}))
      ->capture_default_str();
  rel->add_flag("--toeplitz", rel_toeplitz, "omit the tightness relations");
  rel->add_option("--check", rel_check, "evaluate on this .rep file");
  rel->add_option("--max-fg", max_fg, "largest F and G")->capture_default_str();
  rel->add_option("--max-cover", max_cover, "largest covering")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    sgpd_report* raw = nullptr;
    if (validate->parsed()) {
      check(sgpd_run_validate(slurp(validate_file).c_str(), &raw));
    } else if (analyze->parsed()) {
      auto src = analyze_src.load_only(analyze_pos);
      check(sgpd_run_analyze(src.get(), &raw));
    } else if (desp->parsed()) {
      auto src = desp_src.load_only(desp_pos);
      check(sgpd_run_despring(src.get(),
                              desp_mode == "finest" ? SGPD_DESPRING_FINEST
                                                    : SGPD_DESPRING_UNIVERSAL,
                              &raw));
      if (!desp_out.empty()) {
        std::FILE* f = std::fopen(desp_out.c_str(), "w");
        if (f == nullptr) {
          sgpd_report_free(raw);
          throw InputError{"cannot write '" + desp_out + "'"};
        }
        std::fputs(sgpd_report_human(raw), f);
        std::fclose(f);
      }
    } else if (markov->parsed()) {
      check(sgpd_run_markov(slurp(markov_matrix).c_str(), markov_len, markov_graph ? 1 : 0,
                            &raw));
    } else if (kgraph->parsed()) {
      check(sgpd_run_kgraph(slurp(kgraph_file).c_str(), kgraph_deg.c_str(), &raw));
    } else if (covers->parsed()) {
      auto       src = covers_src.load_only(covers_pos);
      auto const F   = split_set(covers_fg.at(0));
      auto const G   = split_set(covers_fg.at(1));
      auto const cF  = c_strs(F);
      auto const cG  = c_strs(G);
      check(sgpd_run_covers(src.get(), cF.data(), cF.size(), cG.data(), cG.size(),
                            covers_max, &raw));
    } else if (rcheck->parsed()) {
      auto src = rep_src.load(rep_pos);
      if (rep_pos.size() != 1) {
        throw InputError{"expected exactly one .rep file"};
      }
      check(sgpd_run_rep_check(src.get(), slurp(rep_pos.front()).c_str(), rep_tight ? 1 : 0,
                               max_fg, max_cover, &raw));
    } else if (rel->parsed()) {
      auto                       src = rel_src.load_only(rel_pos);
      std::optional<std::string> text;
      if (!rel_check.empty()) {
        text = slurp(rel_check);
      }
      check(sgpd_run_relations(src.get(), rel_style.c_str(), rel_toeplitz ? 1 : 0, max_fg,
                               max_cover, text ? text->c_str() : nullptr, &raw));
    }
    if (raw == nullptr) {
      throw InputError{"no command"};
    }
    ReportPtr report(raw, &sgpd_report_free);
    return print(report, json);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what << "\n";
    return kInputError;
  }
}
