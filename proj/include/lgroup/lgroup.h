/*
 * Copyright 2026 The lgroup Authors
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

/*
 * C interface to the lgroup engine.
 *
 * Every call returns an lg_status. On LG_OK and LG_CHECK_FAILED the output
 * string (when the call has one) is set and must be released with
 * lg_string_free; LG_CHECK_FAILED means the command ran but the property it
 * tests does not hold. On any other status the output is NULL and
 * lg_last_error() describes the problem for the calling thread.
 */

#ifndef LGROUP_LGROUP_H_
#define LGROUP_LGROUP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LGROUP_API __declspec(dllexport)
#else
#define LGROUP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lg_status {
  LG_OK = 0,
  LG_NOT_A_PARTIAL_ORDER = 1,
  LG_NOT_A_LATTICE = 2,
  LG_DUPLICATE_LABEL = 3,
  LG_INVALID_TABLE = 4,
  LG_CLOSURE_TOO_LARGE = 5,
  LG_NOT_A_SUBGROUP = 6,
  LG_NOT_A_HOMOMORPHISM = 7,
  LG_ILL_DEFINED_ON_GENERATORS = 8,
  LG_MIXED_CARRIERS = 9,
  LG_NOT_AN_L_SUBGROUP = 10,
  LG_NOT_CONTAINED = 11,
  LG_POINT_NOT_IN_AMBIENT = 12,
  LG_TIP_MISMATCH = 13,
  LG_NOT_PROPER = 14,
  LG_SEARCH_SPACE_TOO_LARGE = 15,
  LG_NOT_A_CHAIN = 16,
  LG_NOT_DISTRIBUTIVE = 17,
  LG_NOT_MAXIMAL = 18,
  LG_BOUNDS_EXCEEDED = 19,
  LG_UNKNOWN_SUITE = 20,
  LG_PARSE_ERROR = 21,
  LG_SCHEMA_ERROR = 22,
  LG_UNKNOWN_NAME = 23,
  LG_INVALID_ARGUMENT = 24,
  LG_CHECK_FAILED = 25,
  LG_INTERNAL = 26
} lg_status;

typedef enum lg_format { LG_FORMAT_TABLE = 0, LG_FORMAT_JSON = 1 } lg_format;

typedef enum lg_normalizer_method {
  LG_NORMALIZER_SETPRODUCT = 0,
  LG_NORMALIZER_CONJUGACY = 1,
  LG_NORMALIZER_BOTH = 2
} lg_normalizer_method;

typedef struct lg_workspace lg_workspace;

typedef struct lg_verify_options {
  const char* suite;            /* suite id or "all" */
  uint64_t seeds;
  uint64_t seed_base;
  uint32_t max_group_order;     /* at most 24 */
  uint32_t max_lattice_size;    /* at most 10 */
  int chains_only;
  int enforce_hypotheses;
  uint32_t jobs;
  uint64_t maximal_search_cap;
  int include_timing;
} lg_verify_options;

/* Fills the options with the library defaults. */
LGROUP_API void lg_verify_options_init(lg_verify_options* options);

LGROUP_API lg_status lg_workspace_parse(const char* document, size_t length,
                                        lg_workspace** out);
LGROUP_API lg_status lg_workspace_load(const char* path, lg_workspace** out);
LGROUP_API void lg_workspace_free(lg_workspace* ws);

LGROUP_API const char* lg_last_error(void);
LGROUP_API const char* lg_status_name(lg_status status);
LGROUP_API void lg_string_free(char* s);

LGROUP_API lg_status lg_validate(const lg_workspace* ws, lg_format format, char** out);
LGROUP_API lg_status lg_eval(const lg_workspace* ws, const char* subject, const char* element,
                             lg_format format, char** out);
LGROUP_API lg_status lg_level(const lg_workspace* ws, const char* subject, const char* value,
                              lg_format format, char** out);
LGROUP_API lg_status lg_product(const lg_workspace* ws, const char* left, const char* right,
                                lg_format format, char** out);
/* Exactly one of point and by_subset is non-NULL; ambient may be NULL. */
LGROUP_API lg_status lg_conjugate(const lg_workspace* ws, const char* subject,
                                  const char* point, const char* by_subset,
                                  const char* ambient, lg_format format, char** out);
LGROUP_API lg_status lg_generated(const lg_workspace* ws, const char* subject,
                                  const char* ambient, lg_format format, char** out);
LGROUP_API lg_status lg_is_normal(const lg_workspace* ws, const char* subject,
                                  const char* ambient, lg_format format, char** out);
LGROUP_API lg_status lg_normalizer(const lg_workspace* ws, const char* subject,
                                   const char* ambient, lg_normalizer_method method,
                                   lg_format format, char** out);
LGROUP_API lg_status lg_is_maximal(const lg_workspace* ws, const char* subject,
                                   const char* ambient, uint64_t search_cap, lg_format format,
                                   char** out);
LGROUP_API lg_status lg_verify(const lg_verify_options* options, lg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LGROUP_LGROUP_H_ */
