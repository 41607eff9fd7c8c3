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

#include "rsym.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "catalog.hpp"
#include "error.hpp"
#include "pipeline.hpp"
#include "render.hpp"
#include "rsymbols.hpp"

struct rsym_category {
    rsym::CatalogEntry entry;
};

struct rsym_options {
    rsym::PipelineOptions pipeline;
};

namespace {

thread_local std::string last_error;

rsym_status to_status(rsym::ErrorCode code) {
    using rsym::ErrorCode;
    switch (code) {
        case ErrorCode::IoError: return RSYM_ERR_IO;
        case ErrorCode::ParseError: return RSYM_ERR_PARSE;
        case ErrorCode::ValidationError: return RSYM_ERR_VALIDATION;
        case ErrorCode::NonSquareInput: return RSYM_ERR_NON_SQUARE_INPUT;
        case ErrorCode::RankMismatch: return RSYM_ERR_RANK_MISMATCH;
        case ErrorCode::NonIntegerFusion: return RSYM_ERR_NON_INTEGER_FUSION;
        case ErrorCode::NegativeFusion: return RSYM_ERR_NEGATIVE_FUSION;
        case ErrorCode::NonIntegerCertificate: return RSYM_ERR_NON_INTEGER_CERTIFICATE;
        case ErrorCode::BoundViolation: return RSYM_ERR_BOUND_VIOLATION;
        case ErrorCode::ParityViolation: return RSYM_ERR_PARITY_VIOLATION;
        case ErrorCode::TraceMismatch: return RSYM_ERR_TRACE_MISMATCH;
        case ErrorCode::MissingIota: return RSYM_ERR_MISSING_IOTA;
        case ErrorCode::InvalidArgument: return RSYM_ERR_INVALID_ARGUMENT;
    }
    return RSYM_ERR_INTERNAL;
}

rsym_status fail(rsym_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
rsym_status guarded(F &&body) {
    try {
        last_error.clear();
        return body();
    } catch (const rsym::Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(RSYM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(RSYM_ERR_INTERNAL, e.what());
    }
}

const rsym::PipelineOptions &options_of(const rsym_options *options) {
    static const rsym::PipelineOptions defaults;
    return options ? options->pipeline : defaults;
}

rsym_status check_labels(const rsym_category *category, std::initializer_list<size_t> labels) {
    for (size_t l : labels) {
        if (l >= category->entry.rank()) {
            return fail(RSYM_ERR_INVALID_ARGUMENT, "label index " + std::to_string(l) + " out of range");
        }
    }
    return RSYM_OK;
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char *rsym_version(void) {
    return "0.1.0";
}

const char *rsym_status_name(rsym_status status) {
    switch (status) {
        case RSYM_OK: return "Ok";
        case RSYM_ERR_IO: return "IoError";
        case RSYM_ERR_PARSE: return "ParseError";
        case RSYM_ERR_VALIDATION: return "ValidationError";
        case RSYM_ERR_NON_SQUARE_INPUT: return "NonSquareInput";
        case RSYM_ERR_RANK_MISMATCH: return "RankMismatch";
        case RSYM_ERR_NON_INTEGER_FUSION: return "NonIntegerFusion";
        case RSYM_ERR_NEGATIVE_FUSION: return "NegativeFusion";
        case RSYM_ERR_NON_INTEGER_CERTIFICATE: return "NonIntegerCertificate";
        case RSYM_ERR_BOUND_VIOLATION: return "BoundViolation";
        case RSYM_ERR_PARITY_VIOLATION: return "ParityViolation";
        case RSYM_ERR_TRACE_MISMATCH: return "TraceMismatch";
        case RSYM_ERR_MISSING_IOTA: return "MissingIota";
        case RSYM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case RSYM_ERR_NOT_FOUND: return "NotFound";
        case RSYM_ERR_INTERNAL: return "InternalError";
    }
    return "Unknown";
}

int rsym_status_is_certificate(rsym_status status) {
    return status == RSYM_ERR_NON_INTEGER_CERTIFICATE || status == RSYM_ERR_BOUND_VIOLATION ||
           status == RSYM_ERR_PARITY_VIOLATION || status == RSYM_ERR_TRACE_MISMATCH;
}

const char *rsym_last_error(void) {
    return last_error.c_str();
}

void rsym_string_free(char *s) {
    std::free(s);
}

size_t rsym_builtin_count(void) {
    return rsym::builtin_names().size();
}

const char *rsym_builtin_name(size_t index) {
    const auto &names = rsym::builtin_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

rsym_status rsym_category_load(const char *path_or_builtin, rsym_category **out) {
    if (!path_or_builtin || !out) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = new rsym_category{rsym::read_entry(path_or_builtin)};
        return RSYM_OK;
    });
}

rsym_status rsym_category_load_json(const char *json_text, rsym_category **out) {
    if (!json_text || !out) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = new rsym_category{rsym::parse_entry_text(json_text)};
        return RSYM_OK;
    });
}

void rsym_category_free(rsym_category *category) {
    delete category;
}

size_t rsym_category_rank(const rsym_category *category) {
    return category ? category->entry.rank() : 0;
}

const char *rsym_category_name(const rsym_category *category) {
    return category ? category->entry.name.c_str() : nullptr;
}

const char *rsym_category_label(const rsym_category *category, size_t index) {
    if (!category || index >= category->entry.rank()) {
        return nullptr;
    }
    return category->entry.labels[index].name.c_str();
}

rsym_status rsym_category_find_label(const rsym_category *category, const char *name, size_t *index) {
    if (!category || !name || !index) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto found = category->entry.find_label(name)) {
        *index = *found;
        return RSYM_OK;
    }
    return fail(RSYM_ERR_NOT_FOUND, std::string("no label named '") + name + "'");
}

rsym_status rsym_category_twist(const rsym_category *category, size_t index, long long *num, long long *den) {
    if (!category || !num || !den) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto s = check_labels(category, {index}); s != RSYM_OK) {
        return s;
    }
    const auto &t = category->entry.twists[index];
    *num = t.numerator();
    *den = t.denominator();
    return RSYM_OK;
}

rsym_status rsym_options_create(rsym_options **out) {
    if (!out) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = new rsym_options{};
        return RSYM_OK;
    });
}

void rsym_options_free(rsym_options *options) {
    delete options;
}

rsym_status rsym_options_set_tolerances(rsym_options *options, double eps_matrix, double eps_int) {
    if (!options) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (!(eps_matrix > 0) || !(eps_int > 0) || !(eps_int < 0.5)) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "tolerances must be positive and eps_int below 0.5");
    }
    options->pipeline.tol = {eps_matrix, eps_int};
    return RSYM_OK;
}

rsym_status rsym_options_flip_sqrt(rsym_options *options, size_t label) {
    if (!options) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        options->pipeline.sqrt_flips.push_back(label);
        return RSYM_OK;
    });
}

rsym_status rsym_fusion_coefficient(const rsym_category *category, const rsym_options *options, size_t a, size_t b,
                                    size_t c, int *out) {
    if (!category || !out) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto s = check_labels(category, {a, b, c}); s != RSYM_OK) {
        return s;
    }
    return guarded([&] {
        const auto &tol = options_of(options).tol;
        auto route = rsym::resolve_route(category->entry, tol);
        *out = rsym::compute_fusion(category->entry, route, tol)(a, b, c);
        return RSYM_OK;
    });
}

rsym_status rsym_indicator(const rsym_category *category, const rsym_options *options, size_t c, size_t a,
                           double *re, double *im) {
    if (!category || !re || !im) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto s = check_labels(category, {a, c}); s != RSYM_OK) {
        return s;
    }
    return guarded([&] {
        const auto &tol = options_of(options).tol;
        const auto &entry = category->entry;
        auto route = rsym::resolve_route(entry, tol);
        auto data = rsym::build_premodular(entry, route, rsym::compute_fusion(entry, route, tol), tol);
        rsym::Complex v = (*data.nu)(c, a);
        *re = v.real();
        *im = v.imag();
        return RSYM_OK;
    });
}

rsym_status rsym_r_block(const rsym_category *category, const rsym_options *options, size_t a, size_t b, size_t c,
                         rsym_block_case *kind, int *d_plus, int *d_minus, double *diag, size_t capacity,
                         size_t *length) {
    if (!category || !length || (capacity > 0 && !diag)) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto s = check_labels(category, {a, b, c}); s != RSYM_OK) {
        return s;
    }
    return guarded([&] {
        auto result = rsym::run_pipeline(category->entry, options_of(options));
        const rsym::RBlock *block = result.rtable.find(a, b, c);
        if (!block) {
            *length = 0;
            return fail(RSYM_ERR_NOT_FOUND, "N^{a,b}_c is zero for this triple");
        }
        *length = block->diag.size();
        if (kind) {
            *kind = block->kind == rsym::BlockCase::Above   ? RSYM_BLOCK_ABOVE
                    : block->kind == rsym::BlockCase::Below ? RSYM_BLOCK_BELOW
                                                            : RSYM_BLOCK_DIAGONAL;
        }
        if (d_plus) {
            *d_plus = block->multiplicities ? block->multiplicities->plus : -1;
        }
        if (d_minus) {
            *d_minus = block->multiplicities ? block->multiplicities->minus : -1;
        }
        auto values = block->diag_values();
        if (capacity < values.size()) {
            return fail(RSYM_ERR_INVALID_ARGUMENT, "diag buffer holds " + std::to_string(capacity) + " of " +
                                                       std::to_string(values.size()) + " entries");
        }
        for (size_t i = 0; i < values.size(); i++) {
            diag[2 * i] = values[i].real();
            diag[2 * i + 1] = values[i].imag();
        }
        return RSYM_OK;
    });
}

rsym_status rsym_y_value(const rsym_category *category, const rsym_options *options, size_t a, size_t b, size_t c,
                         long long *y, int *triple_dim) {
    if (!category || !y) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (auto s = check_labels(category, {a, b, c}); s != RSYM_OK) {
        return s;
    }
    return guarded([&] {
        const auto &tol = options_of(options).tol;
        const auto &entry = category->entry;
        if (rsym::resolve_route(entry, tol) != rsym::Route::Modular) {
            return fail(RSYM_ERR_INVALID_ARGUMENT, "the Y-table needs modular data");
        }
        auto fusion = rsym::compute_fusion(entry, rsym::Route::Modular, tol);
        auto value = rsym::compute_Y(*entry.modular, fusion, a, b, c, tol);
        *y = value.integer;
        if (triple_dim) {
            *triple_dim = value.triple_dim;
        }
        return RSYM_OK;
    });
}

rsym_status rsym_render(const rsym_category *category, const rsym_options *options, rsym_command command,
                        rsym_format format, char **document) {
    if (!document || (!category && command != RSYM_COMMAND_CATALOG_LIST)) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (command < RSYM_COMMAND_VALIDATE || command > RSYM_COMMAND_CATALOG_LIST || format < RSYM_FORMAT_TEXT ||
        format > RSYM_FORMAT_JSON) {
        return fail(RSYM_ERR_INVALID_ARGUMENT, "unknown command or format");
    }
    *document = nullptr;
    return guarded([&] {
        auto cmd = static_cast<rsym::Command>(command);
        auto fmt = static_cast<rsym::Format>(format);
        if (cmd == rsym::Command::CatalogList) {
            *document = copy_string(rsym::render_catalog_list(fmt));
            return RSYM_OK;
        }
        const auto &opts = options_of(options);
        for (size_t c : opts.sqrt_flips) {
            if (c >= category->entry.rank()) {
                return fail(RSYM_ERR_INVALID_ARGUMENT, "square-root flip names label #" + std::to_string(c));
            }
        }
        auto rendered = rsym::render_command(category->entry, cmd, fmt, opts);
        *document = copy_string(rendered.document);
        if (!rendered.ok) {
            return fail(RSYM_ERR_VALIDATION, "validation failed");
        }
        return RSYM_OK;
    });
}

}  // extern "C"
