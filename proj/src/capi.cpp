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

#include "sgpd/sgpd.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "sgpd/commands.hpp"
#include "sgpd/error.hpp"

struct sgpd_source {
  sgpd::LoadedTable loaded;
};

struct sgpd_report {
  sgpd::Report report;
  std::string  machine;
  std::string  human;
  std::string  json;
};

namespace {

  thread_local std::string last_error;

  sgpd_status status_of(sgpd::ErrorCode code) {
    return static_cast<sgpd_status>(static_cast<int>(code) + 1);
  }

  // Runs body, translating exceptions into a status and last_error.
  template <class Body>
  sgpd_status guarded(Body&& body) {
    try {
      last_error.clear();
      body();
      return SGPD_OK;
    } catch (sgpd::Error const& e) {
      last_error = e.what();
      return status_of(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return SGPD_E_INTERNAL;
    } catch (std::exception const& e) {
      last_error = std::string("internal: ") + e.what();
      return SGPD_E_INTERNAL;
    }
  }

  sgpd_status null_argument() {
    last_error = "null argument";
    return SGPD_E_NULL_ARGUMENT;
  }

  sgpd_status emit(sgpd::Report report, sgpd_report** out) {
    auto* r    = new sgpd_report{std::move(report), {}, {}, {}};
    r->machine = r->report.machine();
    r->human   = r->report.human();
    r->json    = r->report.json();
    *out       = r;
    return SGPD_OK;
  }

  std::vector<std::string> names_of(const char* const* xs, size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
      if (xs[i] == nullptr) {
        sgpd::raise(sgpd::ErrorCode::InvalidArgument, "null element name");
      }
      out.emplace_back(xs[i]);
    }
    return out;
  }

  sgpd::Bounds bounds_of(size_t max_fg, size_t max_cover) {
    return sgpd::Bounds{max_fg, max_cover};
  }

}  // namespace

extern "C" {

const char* sgpd_version(void) {
  return "0.1.0";
}

const char* sgpd_status_name(sgpd_status status) {
  static thread_local std::string name;
  switch (status) {
    case SGPD_OK: return "OK";
    case SGPD_E_NULL_ARGUMENT: return "NullArgument";
    case SGPD_E_INTERNAL: return "Internal";
    default: break;
  }
  int const code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(sgpd::ErrorCode::BoundaryElement)) {
    return "Unknown";
  }
  name = sgpd::error_code_name(static_cast<sgpd::ErrorCode>(code));
  return name.c_str();
}

const char* sgpd_last_error(void) {
  return last_error.c_str();
}

sgpd_status sgpd_read_file(const char* path, char** out) {
  if (path == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const text = sgpd::read_file(path);
    auto*      buf  = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void sgpd_string_free(char* s) {
  std::free(s);
}

sgpd_status sgpd_source_from_sgpd(const char* text, sgpd_source** out) {
  if (text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new sgpd_source{sgpd::load_table(sgpd::parse_sgpd(text))};
  });
}

sgpd_status sgpd_source_from_mat01(const char* text, size_t max_len, sgpd_source** out) {
  if (text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new sgpd_source{sgpd::load_markov(sgpd::parse_mat01(text), max_len)};
  });
}

sgpd_status sgpd_source_from_kgr(const char* text, const char* max_degree, sgpd_source** out) {
  if (text == nullptr || max_degree == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    *out = new sgpd_source{
        sgpd::load_kgraph(sgpd::parse_kgr(text), sgpd::parse_degree(max_degree))};
  });
}

void sgpd_source_free(sgpd_source* src) {
  delete src;
}

size_t sgpd_source_size(const sgpd_source* src) {
  return src == nullptr ? 0 : src->loaded.table->size();
}

const char* sgpd_source_name(const sgpd_source* src, size_t i) {
  if (src == nullptr || i >= src->loaded.table->size()) {
    return nullptr;
  }
  return src->loaded.table->name(sgpd::ElementId{static_cast<std::uint32_t>(i)}).c_str();
}

sgpd_status sgpd_source_find(const sgpd_source* src, const char* name, size_t* out) {
  if (src == nullptr || name == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] { *out = src->loaded.table->at(name).value; });
}

sgpd_status sgpd_source_compose(const sgpd_source* src, size_t f, size_t g, size_t* out) {
  if (src == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    auto const& t = *src->loaded.table;
    if (f >= t.size() || g >= t.size()) {
      sgpd::raise(sgpd::ErrorCode::UnknownElement, "element index out of range");
    }
    auto const p = t.product(sgpd::ElementId{static_cast<std::uint32_t>(f)},
                             sgpd::ElementId{static_cast<std::uint32_t>(g)});
    if (!p) {
      sgpd::raise(sgpd::ErrorCode::NotComposable,
                  "(" + t.name(sgpd::ElementId{static_cast<std::uint32_t>(f)}) + ","
                      + t.name(sgpd::ElementId{static_cast<std::uint32_t>(g)})
                      + ") is not composable");
    }
    *out = p->value;
  });
}

sgpd_status sgpd_run_validate(const char* sgpd_text, sgpd_report** out) {
  if (sgpd_text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] { emit(sgpd::cmd_validate(sgpd::parse_sgpd(sgpd_text)), out); });
}

sgpd_status sgpd_run_analyze(const sgpd_source* src, sgpd_report** out) {
  if (src == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] { emit(sgpd::cmd_analyze(src->loaded), out); });
}

sgpd_status sgpd_run_despring(const sgpd_source* src,
                              sgpd_despring_mode mode,
                              sgpd_report**      out) {
  if (src == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    if (mode != SGPD_DESPRING_FINEST && mode != SGPD_DESPRING_UNIVERSAL) {
      sgpd::raise(sgpd::ErrorCode::InvalidArgument, "unknown despring mode");
    }
    emit(sgpd::cmd_despring(src->loaded, mode == SGPD_DESPRING_FINEST
                                             ? sgpd::DespringMode::Finest
                                             : sgpd::DespringMode::Universal),
         out);
  });
}

sgpd_status sgpd_run_markov(const char*   mat01_text,
                            size_t        max_len,
                            int           graphable,
                            sgpd_report** out) {
  if (mat01_text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    emit(sgpd::cmd_markov(sgpd::parse_mat01(mat01_text), max_len, graphable != 0), out);
  });
}

sgpd_status sgpd_run_kgraph(const char* kgr_text, const char* max_degree, sgpd_report** out) {
  if (kgr_text == nullptr || max_degree == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    emit(sgpd::cmd_kgraph(sgpd::parse_kgr(kgr_text), sgpd::parse_degree(max_degree)), out);
  });
}

sgpd_status sgpd_run_covers(const sgpd_source* src,
                            const char* const* F,
                            size_t             nF,
                            const char* const* G,
                            size_t             nG,
                            size_t             max_size,
                            sgpd_report**      out) {
  if (src == nullptr || out == nullptr || (nF > 0 && F == nullptr)
      || (nG > 0 && G == nullptr)) {
    return null_argument();
  }
  return guarded([&] {
    emit(sgpd::cmd_covers(src->loaded, names_of(F, nF), names_of(G, nG), max_size), out);
  });
}

sgpd_status sgpd_run_rep_check(const sgpd_source* src,
                               const char*        rep_text,
                               int                tight,
                               size_t             max_fg,
                               size_t             max_cover,
                               sgpd_report**      out) {
  if (src == nullptr || rep_text == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    emit(sgpd::cmd_rep_check(src->loaded, sgpd::parse_rep(rep_text), tight != 0,
                             bounds_of(max_fg, max_cover)),
         out);
  });
}

sgpd_status sgpd_run_relations(const sgpd_source* src,
                               const char*        style,
                               int                toeplitz,
                               size_t             max_fg,
                               size_t             max_cover,
                               const char*        rep_text,
                               sgpd_report**      out) {
  if (src == nullptr || style == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    std::optional<sgpd::RepFile> rep;
    if (rep_text != nullptr) {
      rep = sgpd::parse_rep(rep_text);
    }
    emit(sgpd::cmd_relations(src->loaded, style, toeplitz != 0,
                             bounds_of(max_fg, max_cover), rep),
         out);
  });
}

int sgpd_report_exit_code(const sgpd_report* r) {
  return r == nullptr ? 2 : r->report.exit_code();
}

const char* sgpd_report_machine(const sgpd_report* r) {
  return r == nullptr ? nullptr : r->machine.c_str();
}

const char* sgpd_report_human(const sgpd_report* r) {
  return r == nullptr ? nullptr : r->human.c_str();
}

const char* sgpd_report_json(const sgpd_report* r) {
  return r == nullptr ? nullptr : r->json.c_str();
}

const char* sgpd_report_get(const sgpd_report* r, const char* key) {
  if (r == nullptr || key == nullptr) {
    return nullptr;
  }
  auto const* v = r->report.find(key);
  return v == nullptr ? nullptr : v->c_str();
}

void sgpd_report_free(sgpd_report* r) {
  delete r;
}

}  // extern "C"
