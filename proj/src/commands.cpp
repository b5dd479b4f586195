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

#include "sgpd/commands.hpp"

#include <algorithm>

#include "sgpd/covers.hpp"
#include "sgpd/error.hpp"
#include "sgpd/relations.hpp"
#include "sgpd/reps.hpp"

namespace sgpd {

  LoadedTable load_table(RawTable raw) {
    LoadedTable out;
    out.table = std::make_shared<SemigroupoidTable const>(
        SemigroupoidTable::from_raw(std::move(raw)));
    return out;
  }

  LoadedTable load_markov(Matrix01 const& matrix, std::size_t max_len) {
    LoadedTable out;
    out.markov = build_markov(matrix, max_len);
    out.table  = out.markov->table;
    return out;
  }

  LoadedTable load_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree) {
    LoadedTable out;
    out.kgraph = build_kgraph(skeleton, max_degree);
    out.table  = out.kgraph->table;
    return out;
  }

  namespace {

    std::string triple(SemigroupoidTable const& t, ElementId a, ElementId b) {
      return "(" + t.name(a) + "," + t.name(b) + ")";
    }

    std::string case_name(AssociativityCase c) {
      switch (c) {
        case AssociativityCase::I: return "i";
        case AssociativityCase::II: return "ii";
        case AssociativityCase::III: return "iii";
      }
      return "?";
    }

    void window_keys(Report& r, SemigroupoidTable const& t) {
      if (!t.has_window()) {
        r.set("window", std::string("none"));
        return;
      }
      r.set("window", format_degree(t.window()->bound));
      std::size_t boundary = 0;
      for (std::uint32_t i = 0; i < t.size(); ++i) {
        boundary += t.boundary(ElementId{i}) ? 1 : 0;
      }
      r.set("boundary_elements", boundary);
    }

    std::vector<ExtElement> resolve_all(SemigroupoidTable const&        t,
                                        std::vector<std::string> const& names) {
      std::vector<ExtElement> out;
      for (auto const& n : names) {
        out.push_back(t.resolve(n));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    std::optional<CategoryView> category_of(LoadedTable const& src) {
      if (src.kgraph) {
        return category_view(*src.kgraph);
      }
      try {
        return detect_category(*src.table);
      } catch (Error const& e) {
        if (e.code() != ErrorCode::NotACategory) {
          throw;
        }
        return std::nullopt;
      }
    }

  }  // namespace

  Report cmd_validate(RawTable const& raw) {
    Report r("validate");
    r.set("elements", raw.names.size());
    r.set("composable_pairs", raw.products.size());
    auto const v = validate_associativity(raw);
    r.set("checked_triples", v.checked_triples);
    r.set("skipped_triples", v.skipped_triples);
    r.set("associative", v.ok());
    if (v.violation) {
      auto const& w  = *v.violation;
      auto        nm = [&](ElementId x) { return raw.names[x.value]; };
      r.set("violation_triple", "(" + nm(w.f) + "," + nm(w.g) + "," + nm(w.h) + ")");
      r.set("violation_case", case_name(w.premise));
      if (w.kind == AssociativityViolation::Kind::MissingPair) {
        r.set("violation_kind", std::string("missing_pair"));
        r.set("violation_pair",
              "(" + nm(w.missing.first) + "," + nm(w.missing.second) + ")");
      } else {
        r.set("violation_kind", std::string("product_mismatch"));
        r.set("violation_products", nm(w.left_product) + "," + nm(w.right_product));
      }
      r.note("associativity fails at " + describe(w, raw));
      r.raise_exit(1);
      return r;
    }
    // Also rejects bad or duplicate names.
    (void) SemigroupoidTable::from_raw(raw);
    r.note("the table is a semigroupoid");
    return r;
  }

  Report cmd_analyze(LoadedTable const& src) {
    auto const& t = *src.table;
    Report      r("analyze");
    r.set("elements", t.size());
    r.set("composable_pairs", t.composable_pairs().size());
    window_keys(r, t);
    auto const springs = find_springs(t);
    r.set("springs", format_set(t, springs.springs));
    r.set("derived_dead", format_set(t, springs.derived_dead));
    r.set("boundary_artifacts", format_set(t, springs.boundary_artifacts));

    ElementSet  non_monic;
    std::string monic_witness;
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      if (auto w = is_monic(t, ElementId{i})) {
        non_monic.push_back(ElementId{i});
        if (monic_witness.empty()) {
          monic_witness = t.name(ElementId{i}) + ":" + triple(t, w->first, w->second);
        }
      }
    }
    r.set("non_monic", format_set(t, non_monic));
    if (!monic_witness.empty()) {
      r.set("non_monic_witness", monic_witness);
    }

    // Equivalence classes of size > 1.
    std::vector<bool>        done(t.size(), false);
    std::vector<std::string> classes;
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      if (done[i]) {
        continue;
      }
      ElementSet cls{ElementId{i}};
      for (std::uint32_t j = i + 1; j < t.size(); ++j) {
        if (equivalent(t, ElementId{i}, ElementId{j})) {
          cls.push_back(ElementId{j});
          done[j] = true;
        }
      }
      if (cls.size() > 1) {
        classes.push_back(format_set(t, cls));
      }
    }
    std::string joined;
    for (auto const& c : classes) {
      joined += (joined.empty() ? "" : ";") + c;
    }
    r.set("equivalence_classes", joined.empty() ? std::string("none") : joined);
    r.set("category", category_of(src).has_value());

    for (std::uint32_t i = 0; i < t.size(); ++i) {
      ElementId f{i};
      std::string line = "D(" + t.name(f) + ") = " + format_set(t, t.right_set(f));
      if (t.boundary(f)) {
        line += "  [boundary]";
      }
      r.note(line);
    }
    return r;
  }

  Report cmd_despring(LoadedTable const& src, DespringMode mode) {
    Report r("despring");
    r.set("mode", std::string(mode_name(mode)));
    auto const ext = despring(src.table, mode);
    r.set("no_springs", ext.no_springs);
    r.set("classes", ext.classes.size());
    for (auto const& c : ext.classes) {
      r.set("idempotent." + ext.extended->name(c.unit), format_set(*ext.base, c.springs));
    }
    r.set("elements", ext.extended->size());
    r.set("extended_springs", find_springs(*ext.extended).springs.size());
    r.note(write_sgpd(*ext.extended));
    return r;
  }

  Report cmd_markov(Matrix01 const& matrix, std::size_t max_len, bool want_graph) {
    Report     r("markov");
    auto const mk = build_markov(matrix, max_len);
    auto const& t = *mk.table;
    r.set("letters", matrix.size());
    r.set("max_len", max_len);
    r.set("words", mk.words.size());
    r.set("oracle_words", static_cast<std::size_t>(admissible_word_count(matrix, max_len)));
    auto const v = validate_associativity(t.raw());
    r.set("associative", v.ok());
    r.set("checked_triples", v.checked_triples);
    r.set("skipped_triples", v.skipped_triples);
    std::string zero;
    for (Letter i = 0; i < matrix.size(); ++i) {
      if (matrix.row_is_zero(i)) {
        zero += (zero.empty() ? "" : ",") + matrix.label(i);
      }
    }
    r.set("zero_rows", "{" + zero + "}");
    auto const springs = find_springs(t);
    r.set("springs", format_set(t, springs.springs));
    r.set("boundary_artifacts", springs.boundary_artifacts.size());

    if (want_graph) {
      auto const g = graphable(matrix);
      r.set("graphable", g.graphable);
      if (g.obstruction) {
        auto const& o = *g.obstruction;
        auto        L = [&](Letter x) { return matrix.label(x); };
        r.set("obstruction", "i=" + L(o.i) + ",j=" + L(o.j) + ",i2=" + L(o.i2)
                                 + ",j2=" + L(o.j2));
        r.note("A(" + L(o.i) + "," + L(o.j) + ")=1, A(" + L(o.i2) + "," + L(o.j)
               + ")=1, A(" + L(o.i2) + "," + L(o.j2) + ")=1 force s(" + L(o.i)
               + ") = r(" + L(o.j) + ") = s(" + L(o.i2) + ") = r(" + L(o.j2)
               + "), but A(" + L(o.i) + "," + L(o.j2) + ")=0");
        r.raise_exit(1);
      } else {
        auto const& re = *g.realization;
        r.set("vertices", re.vertices);
        for (Letter i = 0; i < matrix.size(); ++i) {
          r.note("edge " + matrix.label(i) + ": v" + std::to_string(re.source[i])
                 + " -> v" + std::to_string(re.range[i]));
        }
      }
    }
    for (Letter x = 0; x < matrix.size(); ++x) {
      auto key = "partition_lemma." + matrix.label(x);
      if (matrix.row_is_zero(x)) {
        r.set(key, std::string("skipped"));
        continue;
      }
      if (auto w = first_letter_partition_lemma_check(matrix, x, max_len)) {
        r.set(key, "fail:" + format_words(matrix, w->partition) + ":" + w->reason);
        r.raise_exit(1);
      } else {
        r.set(key, std::string("pass"));
      }
    }
    std::string words;
    for (auto const& w : mk.words) {
      words += (words.empty() ? "" : " ") + matrix.word_name(w);
    }
    r.note("words: " + words);
    return r;
  }

  Report cmd_kgraph(KGraphSkeleton const& skeleton, Degree const& max_degree) {
    Report r("kgraph");
    r.set("k", static_cast<std::size_t>(skeleton.k));
    r.set("max_degree", format_degree(max_degree));
    std::optional<KGraph> kg;
    try {
      kg = build_kgraph(skeleton, max_degree);
    } catch (Error const& e) {
      if (e.code() != ErrorCode::InconsistentSquares) {
        throw;
      }
      r.set("consistent", false);
      r.set("inconsistency", std::string(e.what()));
      r.note(e.what());
      r.raise_exit(1);
      return r;
    }
    r.set("consistent", true);
    auto const& t = *kg->table;
    r.set("morphisms", t.size());
    window_keys(r, t);

    std::vector<Degree> degrees;
    for (auto const& m : kg->morphisms) {
      degrees.push_back(m.degree);
    }
    auto const df = validate_degree_function(t, degrees, max_degree);
    r.set("additive", df.additive);
    bool const unique = df.positive_splits_unique && df.zero_splits_unique;
    r.set("unique_factorization", unique);
    if (!df.additive || !unique) {
      r.set("factorization_witness",
            df.additivity_witness.value_or(
                df.positive_split_witness.value_or(df.zero_split_witness.value_or(""))));
      r.raise_exit(1);
    }
    (void) detect_category(t);
    r.set("category", true);

    auto const rfns = rfns_check(*kg);
    r.set("rfns", !rfns.has_value());
    if (rfns) {
      r.set("rfns_witness",
            skeleton.objects[rfns->v] + "," + format_degree(rfns->n));
      r.set("slice_partitions", std::string("skipped"));
    } else {
      std::string verdict = "pass";
      for (std::uint32_t v = 0; v < skeleton.objects.size() && verdict == "pass"; ++v) {
        for (auto const& n : degrees_up_to(max_degree)) {
          if (auto w = slice_partition_check(*kg, v, n)) {
            verdict = "fail:" + skeleton.objects[v] + "," + format_degree(n) + ":"
                      + (w->intersecting
                             ? triple(t, w->intersecting->first, w->intersecting->second)
                             : t.name(*w->uncovered));
            r.raise_exit(1);
            break;
          }
        }
      }
      r.set("slice_partitions", verdict);
    }
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      ElementId f{i};
      r.note(t.name(f) + " : " + skeleton.objects[kg->source(f)] + " -> "
             + skeleton.objects[kg->range(f)] + "  d=" + format_degree(kg->degree(f)));
    }
    return r;
  }

  Report cmd_covers(LoadedTable const&              src,
                    std::vector<std::string> const& F_names,
                    std::vector<std::string> const& G_names,
                    std::size_t                     max_size) {
    auto const& t = *src.table;
    Report      r("covers");
    auto const  F = resolve_all(t, F_names);
    auto const  G = resolve_all(t, G_names);
    r.set("F", format_set(t, F));
    r.set("G", format_set(t, G));
    auto const target = tightness_target(t, F, G);
    r.set("target", format_set(t, target));
    r.set("max_size", max_size);
    auto const e = minimal_coverings(t, target, max_size);
    r.set("coverings", e.coverings.size());
    for (std::size_t i = 0; i < e.coverings.size(); ++i) {
      auto const& H = e.coverings[i];
      r.set("covering." + std::to_string(i + 1), format_set(t, H));
      r.note(format_set(t, H) + (is_partition(t, {target, H}).ok ? "  partition" : ""));
    }
    if (e.exceeded) {
      r.set("bound_exceeded", format_set(t, *e.exceeded));
      r.note("BoundExceeded: the minimal covering " + format_set(t, *e.exceeded)
             + " has more than " + std::to_string(max_size) + " members");
      r.raise_exit(2);
    }
    return r;
  }

  namespace {

    void axiom_keys(Report& r, SemigroupoidTable const& t, AxiomReport const& a) {
      r.set("axioms", std::string(a.ok ? "pass" : "fail"));
      r.set("rederivation", std::string(a.rederivation_consistent ? "consistent"
                                                                  : "inconsistent"));
      if (a.witness) {
        r.set("axioms_clause", a.witness->clause);
        r.set("axioms_elements", format_set(t, a.witness->elements));
        for (auto const& [label, m] : a.witness->matrices) {
          r.set("axioms_matrix." + label, m.str());
        }
      }
    }

  }  // namespace

  Report cmd_rep_check(LoadedTable const& src,
                       RepFile const&     file,
                       bool               tight,
                       Bounds             bounds) {
    auto const& t = *src.table;
    Report      r("rep");
    auto const  rep = Representation::from_named(src.table, file.dim, file.matrices);
    r.set("dim", rep.dim());
    auto const axioms = check_axioms(rep);
    axiom_keys(r, t, axioms);
    if (!axioms.ok) {
      r.raise_exit(1);
      r.note("axiom " + axioms.witness->clause + " fails at "
             + format_set(t, axioms.witness->elements));
    }

    auto const vanish = spring_vanishing_check(rep);
    r.set("springs_vanish",
          vanish.ok ? std::string("pass") : "fail:" + t.name(*vanish.witness));
    auto const monic = monic_collapse_check(rep);
    r.set("monic_collapse", monic ? "fail:" + t.name(monic->f) + ":"
                                        + triple(t, monic->g, monic->h) + ":"
                                        + monic->identity
                                  : std::string("pass"));

    std::optional<TightnessReport> tr;
    if (tight) {
      tr = check_tight(rep, bounds.max_fg, bounds.max_cover);
      r.set("tight", tr->tight);
      r.set("tight_instances", tr->instances);
      r.set("tight_coverings", tr->coverings);
      r.set("partition_sums", std::string(tr->partition_sums_agree ? "agree" : "differ"));
      if (tr->witness) {
        auto const& w = *tr->witness;
        r.set("witness_F", format_set(t, w.F));
        r.set("witness_G", format_set(t, w.G));
        r.set("witness_H", format_set(t, w.H));
        r.set("witness_join", w.join.str());
        r.set("witness_product", w.product.str());
        r.note("not tight: for F=" + format_set(t, w.F) + ", G=" + format_set(t, w.G)
               + " the covering H=" + format_set(t, w.H) + " has join " + w.join.str()
               + " but the product side is " + w.product.str());
        r.raise_exit(1);
      }
    }

    if (auto view = category_of(src)) {
      r.set("category", true);
      auto const facts = category_facts_check(rep, *view);
      r.set("category_facts",
            facts ? "fail:" + facts->clause + ":" + format_set(t, facts->elements)
                  : std::string("pass"));
      bool const nondeg = nondegenerate(rep);
      r.set("nondegenerate", nondeg);
      if (nondeg) {
        auto const ct = category_tightness(rep, *view, bounds.max_cover,
                                           tight ? std::optional(bounds.max_fg)
                                                 : std::nullopt);
        r.set("object_coverings", std::string(ct.tight ? "pass" : "fail"));
        if (ct.witness) {
          r.set("object_coverings_witness",
                t.name(ct.witness->v) + ":" + format_set(t, ct.witness->H));
        }
        if (ct.agrees) {
          r.set("object_coverings_agree", *ct.agrees);
        }
      }
    } else {
      r.set("category", false);
    }
    if (r.exit_code() == 0) {
      r.note(tight ? "the representation satisfies the axioms and is tight"
                   : "the representation satisfies the axioms");
    }
    return r;
  }

  Report cmd_relations(LoadedTable const&            src,
                       std::string const&            style,
                       bool                          toeplitz,
                       Bounds                        bounds,
                       std::optional<RepFile> const& check) {
    auto const& t = *src.table;
    Report      r("relations");
    Presentation pres;
    if (style == "generic") {
      pres = emit_generic(t, !toeplitz, bounds.max_fg, bounds.max_cover);
    } else if (style == "ck") {
      if (!src.markov) {
        raise(ErrorCode::InvalidArgument, "style ck needs --matrix");
      }
      pres = emit_cuntz_krieger(*src.markov->matrix);
    } else if (style == "kp") {
      if (!src.kgraph) {
        raise(ErrorCode::InvalidArgument, "style kp needs --kgraph");
      }
      pres = emit_kumjian_pask(*src.kgraph, bounds.max_cover);
    } else {
      raise(ErrorCode::InvalidArgument, "unknown style '" + style + "'");
    }
    r.set("style", pres.style);
    r.set("generators", pres.generators.size());
    r.set("relations", pres.relations.size());
    for (int f = 0; f <= static_cast<int>(Family::KPCOV); ++f) {
      auto const fam = static_cast<Family>(f);
      if (auto c = pres.count(fam); c != 0) {
        r.set(std::string("family.") + family_name(fam), c);
      }
    }
    r.note(pres.serialize());

    if (check) {
      auto const rep = Representation::from_named(src.table, check->dim, check->matrices);
      Assignment assign;
      if (style == "ck") {
        for (auto const& g : pres.generators) {
          assign.emplace(g, rep.S(t.at(g)));
        }
      } else {
        for (std::uint32_t i = 0; i < t.size(); ++i) {
          assign.emplace(t.name(ElementId{i}), rep.S(ElementId{i}));
        }
      }
      auto const ev = evaluate(pres, assign);
      r.set("satisfied", ev.satisfied);
      if (ev.first_failure) {
        r.set("first_failure", ev.first_failure->str());
        r.raise_exit(1);
      }
      if (style != "generic") {
        auto const generic = emit_generic(t, true, bounds.max_fg, bounds.max_cover);
        auto const tr      = style == "ck" ? word_translation(*src.markov)
                                           : identity_translation(generic);
        auto const cc      = cross_check(pres, generic, assign, tr);
        r.set("generic_tight_satisfied", cc.b.satisfied);
        if (cc.b.first_failure) {
          r.set("generic_first_failure", cc.b.first_failure->str());
        }
        r.set("discrepancy", cc.discrepancy);
        if (cc.discrepancy) {
          r.raise_exit(1);
        }
      }
    }
    return r;
  }

}  // namespace sgpd
