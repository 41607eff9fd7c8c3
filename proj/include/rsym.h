// Copyright 2026 The rsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the rsym library: R-symbols of (pre)modular categories
 * from modular data, with integrality, bound and parity certificates.
 *
 * Handles are opaque. Every function returning rsym_status leaves a
 * thread-local message retrievable with rsym_last_error() on failure.
 * Strings returned through char** must be released with rsym_string_free.
 */
#ifndef RSYM_H
#define RSYM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RSYM_BUILDING_LIBRARY)
#    define RSYM_API __declspec(dllexport)
#  else
#    define RSYM_API __declspec(dllimport)
#  endif
#else
#  define RSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsym_status {
    RSYM_OK = 0,
    RSYM_ERR_IO = 1,
    RSYM_ERR_PARSE = 2,
    RSYM_ERR_VALIDATION = 3,
    RSYM_ERR_NON_SQUARE_INPUT = 4,
    RSYM_ERR_RANK_MISMATCH = 5,
    RSYM_ERR_NON_INTEGER_FUSION = 6,
    RSYM_ERR_NEGATIVE_FUSION = 7,
    RSYM_ERR_NON_INTEGER_CERTIFICATE = 8,
    RSYM_ERR_BOUND_VIOLATION = 9,
    RSYM_ERR_PARITY_VIOLATION = 10,
    RSYM_ERR_TRACE_MISMATCH = 11,
    RSYM_ERR_MISSING_IOTA = 12,
    RSYM_ERR_INVALID_ARGUMENT = 13,
    RSYM_ERR_NOT_FOUND = 14,
    RSYM_ERR_INTERNAL = 15
} rsym_status;

typedef enum rsym_command {
    RSYM_COMMAND_VALIDATE = 0,
    RSYM_COMMAND_FUSION = 1,
    RSYM_COMMAND_INDICATORS = 2,
    RSYM_COMMAND_RSYMBOLS = 3,
    RSYM_COMMAND_Y_TABLE = 4,
    RSYM_COMMAND_REPORT = 5,
    RSYM_COMMAND_CATALOG_LIST = 6
} rsym_command;

typedef enum rsym_format {
    RSYM_FORMAT_TEXT = 0,
    RSYM_FORMAT_CSV = 1,
    RSYM_FORMAT_JSON = 2
} rsym_format;

typedef enum rsym_block_case {
    RSYM_BLOCK_ABOVE = 0,    /* a > b */
    RSYM_BLOCK_BELOW = 1,    /* a < b */
    RSYM_BLOCK_DIAGONAL = 2  /* a = b */
} rsym_block_case;

typedef struct rsym_category rsym_category;
typedef struct rsym_options rsym_options;

RSYM_API const char *rsym_version(void);
RSYM_API const char *rsym_status_name(rsym_status status);
/* Nonzero for integrality, bound, parity and trace certificate failures. */
RSYM_API int rsym_status_is_certificate(rsym_status status);
RSYM_API const char *rsym_last_error(void);
RSYM_API void rsym_string_free(char *s);

RSYM_API size_t rsym_builtin_count(void);
RSYM_API const char *rsym_builtin_name(size_t index);

/* Parses a builtin name or a JSON file. Shapes are checked here; the
 * invariants are checked by the computations that need them. */
RSYM_API rsym_status rsym_category_load(const char *path_or_builtin, rsym_category **out);
RSYM_API rsym_status rsym_category_load_json(const char *json_text, rsym_category **out);
RSYM_API void rsym_category_free(rsym_category *category);

RSYM_API size_t rsym_category_rank(const rsym_category *category);
RSYM_API const char *rsym_category_name(const rsym_category *category);
RSYM_API const char *rsym_category_label(const rsym_category *category, size_t index);
RSYM_API rsym_status rsym_category_find_label(const rsym_category *category, const char *name, size_t *index);
/* Twist theta_a = exp(2 pi i num/den). */
RSYM_API rsym_status rsym_category_twist(const rsym_category *category, size_t index, long long *num, long long *den);

/* Default options: eps_matrix = 1e-9, eps_int = 1e-6, canonical branch. */
RSYM_API rsym_status rsym_options_create(rsym_options **out);
RSYM_API void rsym_options_free(rsym_options *options);
RSYM_API rsym_status rsym_options_set_tolerances(rsym_options *options, double eps_matrix, double eps_int);
/* Negates the chosen square root of theta for one label. */
RSYM_API rsym_status rsym_options_flip_sqrt(rsym_options *options, size_t label);

/* options may be NULL for defaults in all calls below. */
RSYM_API rsym_status rsym_fusion_coefficient(const rsym_category *category, const rsym_options *options, size_t a,
                                             size_t b, size_t c, int *out);
RSYM_API rsym_status rsym_indicator(const rsym_category *category, const rsym_options *options, size_t c, size_t a,
                                    double *re, double *im);
/* Diagonal of [R^c_{a,b}] as interleaved (re, im) pairs. *length receives
 * N^{a,b}_c; RSYM_ERR_NOT_FOUND when it is zero. d_plus/d_minus are set to
 * -1 outside the diagonal case and may be NULL. */
RSYM_API rsym_status rsym_r_block(const rsym_category *category, const rsym_options *options, size_t a, size_t b,
                                  size_t c, rsym_block_case *kind, int *d_plus, int *d_minus, double *diag,
                                  size_t capacity, size_t *length);
RSYM_API rsym_status rsym_y_value(const rsym_category *category, const rsym_options *options, size_t a, size_t b,
                                  size_t c, long long *y, int *triple_dim);

/* Renders a command's document. For RSYM_COMMAND_VALIDATE the document is
 * produced even when a check fails, and RSYM_ERR_VALIDATION is returned. */
RSYM_API rsym_status rsym_render(const rsym_category *category, const rsym_options *options, rsym_command command,
                                 rsym_format format, char **document);

#ifdef __cplusplus
}
#endif

#endif
