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

// Command-line front end. Talks to the library only through rsym.h.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsym.h"

namespace {

struct Config {
    std::string input;
    std::string input_flag;
    std::string format = "text";
    std::vector<std::string> sqrt_flips;
    double eps_matrix = 1e-9;
    double eps_int = 1e-6;
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCertificate = 2;

int report_failure(rsym_status status) {
    std::fprintf(stderr, "rsym: %s\n", rsym_last_error());
    return rsym_status_is_certificate(status) ? kExitCertificate : kExitError;
}

rsym_format format_of(const std::string &name) {
    if (name == "csv") {
        return RSYM_FORMAT_CSV;
    }
    if (name == "json") {
        return RSYM_FORMAT_JSON;
    }
    return RSYM_FORMAT_TEXT;
}

int emit(char *document) {
    if (document) {
        std::fputs(document, stdout);
        rsym_string_free(document);
    }
    return std::fflush(stdout) == 0 ? kExitOk : kExitError;
}

int run(rsym_command command, const Config &cfg) {
    rsym_format format = format_of(cfg.format);
    char *document = nullptr;
    if (command == RSYM_COMMAND_CATALOG_LIST) {
        rsym_status s = rsym_render(nullptr, nullptr, command, format, &document);
        return s == RSYM_OK ? emit(document) : report_failure(s);
    }

    std::string input = !cfg.input_flag.empty() ? cfg.input_flag : cfg.input;
    if (input.empty()) {
        std::fprintf(stderr, "rsym: an input (builtin name or JSON file) is required\n");
        return kExitError;
    }
    if (!cfg.input_flag.empty() && !cfg.input.empty() && cfg.input != cfg.input_flag) {
        std::fprintf(stderr, "rsym: conflicting inputs '%s' and '%s'\n", cfg.input.c_str(), cfg.input_flag.c_str());
        return kExitError;
    }

    rsym_category *raw_cat = nullptr;
    if (rsym_status s = rsym_category_load(input.c_str(), &raw_cat); s != RSYM_OK) {
        return report_failure(s);
    }
    std::unique_ptr<rsym_category, decltype(&rsym_category_free)> cat(raw_cat, rsym_category_free);

    rsym_options *raw_opts = nullptr;
    if (rsym_status s = rsym_options_create(&raw_opts); s != RSYM_OK) {
        return report_failure(s);
    }
    std::unique_ptr<rsym_options, decltype(&rsym_options_free)> opts(raw_opts, rsym_options_free);
    if (rsym_status s = rsym_options_set_tolerances(opts.get(), cfg.eps_matrix, cfg.eps_int); s != RSYM_OK) {
        return report_failure(s);
    }
    for (const auto &label : cfg.sqrt_flips) {
        size_t index = 0;
        if (rsym_status s = rsym_category_find_label(cat.get(), label.c_str(), &index); s != RSYM_OK) {
            std::fprintf(stderr, "rsym: --sqrt-flip: %s\n", rsym_last_error());
            return kExitError;
        }
        rsym_options_flip_sqrt(opts.get(), index);
    }

    rsym_status s = rsym_render(cat.get(), opts.get(), command, format, &document);
    if (s == RSYM_ERR_VALIDATION && document) {
        // validate still prints its report; the failing checks are in it.
        emit(document);
        std::fprintf(stderr, "rsym: %s: validation failed\n", input.c_str());
        return kExitError;
    }
    if (s != RSYM_OK) {
        return report_failure(s);
    }
    return emit(document);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Reconstruct and certify R-symbols from modular data"};
    app.set_version_flag("--version", std::string(rsym_version()));
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--sqrt-flip", cfg.sqrt_flips, "Negate the square root of theta for a label (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--eps-matrix", cfg.eps_matrix, "Tolerance for matrix identities")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--eps-int", cfg.eps_int, "Tolerance for integer rounding")
        ->check(CLI::Range(0.0, 0.5))
        ->capture_default_str();
    app.add_option("--input", cfg.input_flag, "Builtin name or JSON file");

    struct Sub {
        const char *name;
        rsym_command command;
        const char *help;
    };
    const Sub subs[] = {
        {"validate", RSYM_COMMAND_VALIDATE, "Check the input invariants"},
        {"fusion", RSYM_COMMAND_FUSION, "Fusion coefficients"},
        {"indicators", RSYM_COMMAND_INDICATORS, "Indicator table nu_{c,a}"},
        {"rsymbols", RSYM_COMMAND_RSYMBOLS, "R-symbol blocks"},
        {"y-table", RSYM_COMMAND_Y_TABLE, "Certified Y values for all triples"},
        {"report", RSYM_COMMAND_REPORT, "Everything above in one document"},
        {"catalog-list", RSYM_COMMAND_CATALOG_LIST, "List builtin examples"},
    };
    rsym_command chosen = RSYM_COMMAND_VALIDATE;
    for (const auto &sub : subs) {
        CLI::App *cmd = app.add_subcommand(sub.name, sub.help);
        cmd->fallthrough();
        if (sub.command != RSYM_COMMAND_CATALOG_LIST) {
            cmd->add_option("input", cfg.input, "Builtin name or JSON file");
        }
        rsym_command command = sub.command;
        cmd->callback([&chosen, command] { chosen = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitError;
    }
    return run(chosen, cfg);
}
