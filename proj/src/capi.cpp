//  Copyright 2026 The lgroup Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "lgroup/lgroup.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "lgroup/commands.hpp"
#include "lgroup/error.hpp"
#include "lgroup/workspace.hpp"

struct lg_workspace {
  lgroup::Workspace ws;
};

namespace {

thread_local std::string last_error;

lg_status fail(lg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lgroup::commands::Format format_of(lg_format f) {
  return f == LG_FORMAT_JSON ? lgroup::commands::Format::kJson
                             : lgroup::commands::Format::kTable;
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

// Runs a command body, translating exceptions into status codes.
template <typename F>
lg_status guarded(char** out, F&& body) {
  if (!out) return fail(LG_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  last_error.clear();
  try {
    const lgroup::commands::Output result = body();
    *out = copy_out(result.text);
    if (!*out) return fail(LG_INTERNAL, "out of memory");
    if (result.ok) return LG_OK;
    last_error = "check failed";
    return LG_CHECK_FAILED;
  } catch (const lgroup::Error& e) {
    return fail(static_cast<lg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LG_INTERNAL, e.what());
  }
}

lg_status need(const lg_workspace* ws, std::initializer_list<const char*> args) {
  if (!ws) return fail(LG_INVALID_ARGUMENT, "workspace is NULL");
  for (const char* a : args)
    if (!a) return fail(LG_INVALID_ARGUMENT, "required argument is NULL");
  return LG_OK;
}

}  // namespace

extern "C" {

void lg_verify_options_init(lg_verify_options* options) {
  if (!options) return;
  const lgroup::verify::Bounds bounds;
  const lgroup::verify::RunOptions run;
  options->suite = "all";
  options->seeds = 100;
  options->seed_base = 0;
  options->max_group_order = static_cast<uint32_t>(bounds.max_group_order);
  options->max_lattice_size = static_cast<uint32_t>(bounds.max_lattice_size);
  options->chains_only = 0;
  options->enforce_hypotheses = run.enforce_hypotheses ? 1 : 0;
  options->jobs = run.jobs;
  options->maximal_search_cap = run.maximal_search_cap;
  options->include_timing = 0;
}

lg_status lg_workspace_parse(const char* document, size_t length, lg_workspace** out) {
  if (!out) return fail(LG_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  if (!document) return fail(LG_INVALID_ARGUMENT, "document is NULL");
  try {
    auto* ws = new lg_workspace{lgroup::parse_workspace(std::string_view(document, length))};
    *out = ws;
    return LG_OK;
  } catch (const lgroup::Error& e) {
    return fail(static_cast<lg_status>(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(LG_INTERNAL, e.what());
  }
}

lg_status lg_workspace_load(const char* path, lg_workspace** out) {
  if (!out) return fail(LG_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  if (!path) return fail(LG_INVALID_ARGUMENT, "path is NULL");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(LG_PARSE_ERROR, std::string("cannot read ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return lg_workspace_parse(text.data(), text.size(), out);
}

void lg_workspace_free(lg_workspace* ws) { delete ws; }

const char* lg_last_error(void) { return last_error.c_str(); }

const char* lg_status_name(lg_status status) {
  return lgroup::code_name(static_cast<lgroup::ErrorCode>(status)).data();
}

void lg_string_free(char* s) { std::free(s); }

lg_status lg_validate(const lg_workspace* ws, lg_format format, char** out) {
  if (lg_status s = need(ws, {}); s != LG_OK) return s;
  return guarded(out, [&] { return lgroup::commands::validate(ws->ws, format_of(format)); });
}

lg_status lg_eval(const lg_workspace* ws, const char* subject, const char* element,
                  lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, element}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::eval(ws->ws, subject, element, format_of(format));
  });
}

lg_status lg_level(const lg_workspace* ws, const char* subject, const char* value,
                   lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, value}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::level(ws->ws, subject, value, format_of(format));
  });
}

lg_status lg_product(const lg_workspace* ws, const char* left, const char* right,
                     lg_format format, char** out) {
  if (lg_status s = need(ws, {left, right}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::product(ws->ws, left, right, format_of(format));
  });
}

lg_status lg_conjugate(const lg_workspace* ws, const char* subject, const char* point,
                       const char* by_subset, const char* ambient, lg_format format,
                       char** out) {
  if (lg_status s = need(ws, {subject}); s != LG_OK) return s;
  return guarded(out, [&] {
    lgroup::commands::ConjugateRequest req;
    req.subject = subject;
    if (point) req.point = point;
    if (by_subset) req.by_subset = by_subset;
    if (ambient) req.ambient = ambient;
    return lgroup::commands::conjugate(ws->ws, req, format_of(format));
  });
}

lg_status lg_generated(const lg_workspace* ws, const char* subject, const char* ambient,
                       lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, ambient}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::generated(ws->ws, subject, ambient, format_of(format));
  });
}

lg_status lg_is_normal(const lg_workspace* ws, const char* subject, const char* ambient,
                       lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, ambient}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::is_normal(ws->ws, subject, ambient, format_of(format));
  });
}

lg_status lg_normalizer(const lg_workspace* ws, const char* subject, const char* ambient,
                        lg_normalizer_method method, lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, ambient}); s != LG_OK) return s;
  using M = lgroup::commands::NormalizerMethod;
  M m;
  switch (method) {
    case LG_NORMALIZER_SETPRODUCT: m = M::kSetProduct; break;
    case LG_NORMALIZER_CONJUGACY: m = M::kConjugacy; break;
    case LG_NORMALIZER_BOTH: m = M::kBoth; break;
    default: return fail(LG_INVALID_ARGUMENT, "unknown normalizer method");
  }
  return guarded(out, [&] {
    return lgroup::commands::normalizer(ws->ws, subject, ambient, m, format_of(format));
  });
}

lg_status lg_is_maximal(const lg_workspace* ws, const char* subject, const char* ambient,
                        uint64_t search_cap, lg_format format, char** out) {
  if (lg_status s = need(ws, {subject, ambient}); s != LG_OK) return s;
  return guarded(out, [&] {
    return lgroup::commands::is_maximal(ws->ws, subject, ambient, search_cap,
                                        format_of(format));
  });
}

lg_status lg_verify(const lg_verify_options* options, lg_format format, char** out) {
  if (!options) return fail(LG_INVALID_ARGUMENT, "options are NULL");
  return guarded(out, [&] {
    lgroup::commands::VerifyRequest req;
    req.suite = str(options->suite ? options->suite : "all");
    req.seeds = options->seeds;
    req.seed_base = options->seed_base;
    req.bounds.max_group_order = options->max_group_order;
    req.bounds.max_lattice_size = options->max_lattice_size;
    req.bounds.lattice_kind = options->chains_only ? lgroup::verify::LatticeKind::kChain
                                                   : lgroup::verify::LatticeKind::kAny;
    req.options.enforce_hypotheses = options->enforce_hypotheses != 0;
    req.options.jobs = options->jobs;
    req.options.maximal_search_cap = options->maximal_search_cap;
    req.include_timing = options->include_timing != 0;
    return lgroup::commands::run_verify(req, format_of(format));
  });
}

}  // extern "C"
