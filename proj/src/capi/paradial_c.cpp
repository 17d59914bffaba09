// capi/paradial_c.cpp

// Copyright 2026  The paradial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "paradial/paradial.h"

#include <exception>
#include <new>
#include <string>

#include "paradial/config.hpp"
#include "paradial/errors.hpp"
#include "paradial/metrics.hpp"
#include "paradial/pipeline.hpp"
#include "paradial/response_parser.hpp"

struct pdl_session {
  paradial::RunConfig config;
  paradial::pipeline::CommandResult result;
  std::string document;
  std::string config_text;
};

namespace {

thread_local std::string last_error;

template <class F>
pdl_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return PDL_OK;
  } catch (const paradial::UsageError& e) {
    last_error = e.what();
    return PDL_ERR_USAGE;
  } catch (const paradial::ValidationError& e) {
    last_error = e.what();
    return PDL_ERR_VALIDATION;
  } catch (const paradial::IoError& e) {
    last_error = e.what();
    return PDL_ERR_IO;
  } catch (const paradial::FormatError& e) {
    last_error = e.what();
    return PDL_ERR_FORMAT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PDL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PDL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PDL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr)
    throw paradial::UsageError(std::string(what) + " is NULL");
}

paradial::WordSet to_set(const size_t* v, size_t n) {
  paradial::WordSet s;
  for (size_t i = 0; i < n; ++i) s.insert(v[i]);
  return s;
}

}  // namespace

extern "C" {

PDL_API const char* pdl_version(void) { return "0.1.0"; }

PDL_API const char* pdl_status_string(pdl_status status) {
  switch (status) {
    case PDL_OK: return "ok";
    case PDL_ERR_USAGE: return "usage error";
    case PDL_ERR_VALIDATION: return "validation error";
    case PDL_ERR_IO: return "i/o error";
    case PDL_ERR_FORMAT: return "format error";
    case PDL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

PDL_API const char* pdl_last_error(void) { return last_error.c_str(); }

PDL_API size_t pdl_command_count(void) {
  return std::size(paradial::pipeline::kCommands);
}

PDL_API const char* pdl_command_name(size_t i) {
  if (i >= std::size(paradial::pipeline::kCommands)) return nullptr;
  return paradial::pipeline::kCommands[i].data();
}

PDL_API pdl_session* pdl_session_create(void) {
  return new (std::nothrow) pdl_session();
}

PDL_API void pdl_session_destroy(pdl_session* s) { delete s; }

PDL_API pdl_status pdl_session_load_config_file(pdl_session* s,
                                                const char* path) {
  return guarded([&] {
    require(s, "session");
    require(path, "path");
    paradial::RunConfig c = s->config;
    try {
      paradial::apply_config_json(c, paradial::io::read_json(path));
    } catch (const paradial::UsageError& e) {
      throw paradial::UsageError(std::string(path) + ": " + e.what());
    }
    s->config = std::move(c);
  });
}

PDL_API pdl_status pdl_session_load_config_json(pdl_session* s,
                                                const char* json) {
  return guarded([&] {
    require(s, "session");
    require(json, "json");
    paradial::RunConfig c = s->config;
    paradial::apply_config_json(c, paradial::io::parse_json(json, "config"));
    s->config = std::move(c);
  });
}

PDL_API pdl_status pdl_session_set_option(pdl_session* s, const char* name,
                                          const char* value) {
  return guarded([&] {
    require(s, "session");
    require(name, "name");
    require(value, "value");
    paradial::set_option(s->config, name, value);
  });
}

PDL_API pdl_status pdl_session_set_path(pdl_session* s, const char* role,
                                        const char* path) {
  return guarded([&] {
    require(s, "session");
    require(role, "role");
    if (!paradial::is_path_role(role))
      throw paradial::UsageError("unknown path role '" + std::string(role) +
                                 "'");
    if (path == nullptr || *path == '\0') s->config.paths.erase(role);
    else s->config.paths[role] = path;
  });
}

PDL_API pdl_status pdl_session_add_strategy(pdl_session* s, const char* spec) {
  return guarded([&] {
    require(s, "session");
    require(spec, "spec");
    paradial::allocation::parse_strategy(spec);
    s->config.strategies.emplace_back(spec);
  });
}

PDL_API void pdl_session_clear_strategies(pdl_session* s) {
  if (s != nullptr) s->config.strategies.clear();
}

PDL_API const char* pdl_session_config_json(pdl_session* s) {
  if (s == nullptr) return "";
  const pdl_status st = guarded([&] {
    s->config_text = paradial::io::dump_document(
        paradial::config_json(s->config));
  });
  if (st != PDL_OK) s->config_text.clear();
  return s->config_text.c_str();
}

PDL_API pdl_status pdl_run(pdl_session* s, const char* command) {
  return guarded([&] {
    require(s, "session");
    require(command, "command");
    auto result = paradial::pipeline::run(command, s->config);
    s->document = paradial::io::dump_document(result.document);
    s->result = std::move(result);
  });
}

PDL_API const char* pdl_result_summary(const pdl_session* s) {
  return s == nullptr ? "" : s->result.summary.c_str();
}

PDL_API const char* pdl_result_document(const pdl_session* s) {
  return s == nullptr ? "" : s->document.c_str();
}

PDL_API const char* pdl_result_stdout(const pdl_session* s) {
  return s == nullptr ? "" : s->result.stdout_payload.c_str();
}

PDL_API size_t pdl_result_warning_count(const pdl_session* s) {
  return s == nullptr ? 0 : s->result.warnings.size();
}

PDL_API const char* pdl_result_warning(const pdl_session* s, size_t i) {
  if (s == nullptr || i >= s->result.warnings.size()) return nullptr;
  return s->result.warnings[i].c_str();
}

PDL_API size_t pdl_result_written_count(const pdl_session* s) {
  return s == nullptr ? 0 : s->result.written.size();
}

PDL_API const char* pdl_result_written(const pdl_session* s, size_t i) {
  if (s == nullptr || i >= s->result.written.size()) return nullptr;
  return s->result.written[i].c_str();
}

PDL_API pdl_status pdl_jaccard(const size_t* a, size_t na, const size_t* b,
                               size_t nb, double* out) {
  return guarded([&] {
    if (na > 0) require(a, "a");
    if (nb > 0) require(b, "b");
    require(out, "out");
    *out = paradial::metrics::jaccard(to_set(a, na), to_set(b, nb));
  });
}

PDL_API pdl_status pdl_entropy_binary(size_t positive, size_t total,
                                      double* out) {
  return guarded([&] {
    require(out, "out");
    if (total == 0 || positive > total)
      throw paradial::UsageError("need 0 <= positive <= total and total >= 1");
    *out = paradial::metrics::entropy_binary(positive, total);
  });
}

PDL_API pdl_status pdl_alpha_nominal(const int* cells, size_t n_items,
                                     size_t n_raters, double* out,
                                     int* defined) {
  return guarded([&] {
    require(out, "out");
    require(defined, "defined");
    if (n_items * n_raters > 0) require(cells, "cells");
    std::vector<std::string> items, raters;
    for (size_t i = 0; i < n_items; ++i) items.push_back(std::to_string(i));
    for (size_t r = 0; r < n_raters; ++r) raters.push_back(std::to_string(r));
    paradial::metrics::LabelMatrix m(std::move(items), std::move(raters));
    for (size_t i = 0; i < n_items; ++i) {
      for (size_t r = 0; r < n_raters; ++r) {
        const int v = cells[i * n_raters + r];
        if (v == -1) continue;
        if (v != 0 && v != 1)
          throw paradial::UsageError("cells must be -1, 0 or 1");
        m.set(i, r, v == 1);
      }
    }
    const auto alpha = paradial::metrics::alpha_nominal(m);
    *defined = alpha.has_value() ? 1 : 0;
    *out = alpha.value_or(0.0);
  });
}

PDL_API pdl_status pdl_match_quote(const char* quote, const char* source,
                                   size_t max_gap, double min_coverage,
                                   size_t* indices, size_t capacity,
                                   size_t* n_out, int* matched) {
  return guarded([&] {
    require(quote, "quote");
    require(source, "source");
    require(n_out, "n_out");
    require(matched, "matched");
    if (capacity > 0) require(indices, "indices");
    const auto m = paradial::response::match_quote(
        quote, source, paradial::response::MatchOptions{max_gap, min_coverage});
    *matched = m.has_value() ? 1 : 0;
    *n_out = m ? m->size() : 0;
    if (m) {
      size_t k = 0;
      for (auto it = m->begin(); it != m->end() && k < capacity; ++it)
        indices[k++] = *it;
    }
  });
}

}  // extern "C"
