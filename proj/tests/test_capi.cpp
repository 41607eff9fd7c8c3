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

#include <cmath>
#include <cstring>
#include <memory>
#include <numbers>
#include <string>

#include <catch_amalgamated.hpp>

#include "rsym.h"

namespace {

using Category = std::unique_ptr<rsym_category, decltype(&rsym_category_free)>;
using Options = std::unique_ptr<rsym_options, decltype(&rsym_options_free)>;

Category load(const std::string &input) {
    rsym_category *raw = nullptr;
    rsym_status s = rsym_category_load(input.c_str(), &raw);
    INFO(rsym_last_error());
    REQUIRE(s == RSYM_OK);
    return Category(raw, rsym_category_free);
}

Options options() {
    rsym_options *raw = nullptr;
    REQUIRE(rsym_options_create(&raw) == RSYM_OK);
    return Options(raw, rsym_options_free);
}

std::string data_file(const char *name) {
    return std::string(RSYM_DATA_DIR) + "/" + name;
}

std::string render(const rsym_category *cat, const rsym_options *opts, rsym_command cmd, rsym_format fmt,
                   rsym_status expected = RSYM_OK) {
    char *doc = nullptr;
    REQUIRE(rsym_render(cat, opts, cmd, fmt, &doc) == expected);
    REQUIRE(doc);
    std::string out(doc);
    rsym_string_free(doc);
    return out;
}

}  // namespace

TEST_CASE("library metadata") {
    CHECK(std::strcmp(rsym_version(), "0.1.0") == 0);
    CHECK(std::strcmp(rsym_status_name(RSYM_ERR_PARITY_VIOLATION), "ParityViolation") == 0);
    CHECK(rsym_status_is_certificate(RSYM_ERR_NON_INTEGER_CERTIFICATE));
    CHECK_FALSE(rsym_status_is_certificate(RSYM_ERR_IO));
    REQUIRE(rsym_builtin_count() >= 5);
    CHECK(std::strcmp(rsym_builtin_name(0), "trivial") == 0);
    CHECK(rsym_builtin_name(rsym_builtin_count()) == nullptr);
}

TEST_CASE("category accessors") {
    Category semion = load("semion");
    CHECK(rsym_category_rank(semion.get()) == 2);
    CHECK(std::strcmp(rsym_category_name(semion.get()), "semion") == 0);
    CHECK(std::strcmp(rsym_category_label(semion.get(), 1), "s") == 0);
    CHECK(rsym_category_label(semion.get(), 2) == nullptr);
    size_t index = 9;
    CHECK(rsym_category_find_label(semion.get(), "s", &index) == RSYM_OK);
    CHECK(index == 1);
    CHECK(rsym_category_find_label(semion.get(), "q", &index) == RSYM_ERR_NOT_FOUND);
    long long num = 0, den = 0;
    CHECK(rsym_category_twist(semion.get(), 1, &num, &den) == RSYM_OK);
    CHECK((num == 1 && den == 4));
}

TEST_CASE("fusion, indicators and R-blocks") {
    Category fib = load("fibonacci");
    int n = -1;
    CHECK(rsym_fusion_coefficient(fib.get(), nullptr, 1, 1, 1, &n) == RSYM_OK);
    CHECK(n == 1);

    Category semion = load("semion");
    double re = 0, im = 0;
    REQUIRE(rsym_indicator(semion.get(), nullptr, 0, 1, &re, &im) == RSYM_OK);
    CHECK(std::abs(re + 1) < 1e-9);
    CHECK(std::abs(im) < 1e-9);

    rsym_block_case kind = RSYM_BLOCK_ABOVE;
    int dp = -2, dm = -2;
    double diag[2] = {0, 0};
    size_t len = 0;
    REQUIRE(rsym_r_block(semion.get(), nullptr, 1, 1, 0, &kind, &dp, &dm, diag, 1, &len) == RSYM_OK);
    CHECK(kind == RSYM_BLOCK_DIAGONAL);
    CHECK((dp == 0 && dm == 1 && len == 1));
    CHECK(diag[0] == 0.0);
    CHECK(diag[1] == 1.0);

    REQUIRE(rsym_r_block(semion.get(), nullptr, 1, 0, 1, &kind, &dp, &dm, diag, 1, &len) == RSYM_OK);
    CHECK(kind == RSYM_BLOCK_ABOVE);
    CHECK(dp == -1);
    CHECK(rsym_r_block(semion.get(), nullptr, 1, 1, 1, &kind, nullptr, nullptr, diag, 1, &len) == RSYM_ERR_NOT_FOUND);
    CHECK(len == 0);

    long long y = 0;
    int td = 0;
    CHECK(rsym_y_value(fib.get(), nullptr, 1, 1, 1, &y, &td) == RSYM_OK);
    CHECK((y == 0 && td == 2));
}

TEST_CASE("multiplicity-2 block needs room") {
    Category a4 = load(data_file("rep_a4.json"));
    double diag[4];
    size_t len = 0;
    CHECK(rsym_r_block(a4.get(), nullptr, 3, 3, 3, nullptr, nullptr, nullptr, diag, 1, &len) ==
          RSYM_ERR_INVALID_ARGUMENT);
    CHECK(len == 2);
    REQUIRE(rsym_r_block(a4.get(), nullptr, 3, 3, 3, nullptr, nullptr, nullptr, diag, 2, &len) == RSYM_OK);
    CHECK(diag[0] == 1.0);
    CHECK(diag[2] == -1.0);
}

TEST_CASE("options") {
    Category ising = load("ising");
    Options opts = options();
    CHECK(rsym_options_set_tolerances(opts.get(), 0, 1e-6) == RSYM_ERR_INVALID_ARGUMENT);
    CHECK(rsym_options_set_tolerances(opts.get(), 1e-10, 1e-7) == RSYM_OK);
    REQUIRE(rsym_options_flip_sqrt(opts.get(), 2) == RSYM_OK);
    int dp = 0, dm = 0;
    double diag[2];
    size_t len = 0;
    REQUIRE(rsym_r_block(ising.get(), opts.get(), 1, 1, 2, nullptr, &dp, &dm, diag, 1, &len) == RSYM_OK);
    CHECK((dp == 0 && dm == 1));
    double angle = 3 * std::numbers::pi / 8;
    CHECK(std::abs(diag[0] - std::cos(angle)) < 1e-9);
    CHECK(std::abs(diag[1] - std::sin(angle)) < 1e-9);

    Options bad = options();
    rsym_options_flip_sqrt(bad.get(), 7);
    char *doc = nullptr;
    CHECK(rsym_render(ising.get(), bad.get(), RSYM_COMMAND_RSYMBOLS, RSYM_FORMAT_TEXT, &doc) ==
          RSYM_ERR_INVALID_ARGUMENT);
    CHECK(doc == nullptr);
}

TEST_CASE("rendering") {
    Category semion = load("semion");
    std::string json = render(semion.get(), nullptr, RSYM_COMMAND_RSYMBOLS, RSYM_FORMAT_JSON);
    CHECK(json.find("\"sqrt_branch\"") != std::string::npos);
    std::string list = render(nullptr, nullptr, RSYM_COMMAND_CATALOG_LIST, RSYM_FORMAT_TEXT);
    CHECK(list.find("fibonacci") != std::string::npos);

    Category bad = load(data_file("semion_corrupted.json"));
    std::string report = render(bad.get(), nullptr, RSYM_COMMAND_VALIDATE, RSYM_FORMAT_TEXT, RSYM_ERR_VALIDATION);
    CHECK(report.find("FAIL") != std::string::npos);
}

TEST_CASE("errors carry status and message") {
    rsym_category *cat = nullptr;
    CHECK(rsym_category_load("/nonexistent/file.json", &cat) == RSYM_ERR_IO);
    CHECK(cat == nullptr);
    CHECK(std::strlen(rsym_last_error()) > 0);
    CHECK(rsym_category_load_json("{\"name\": 3}", &cat) == RSYM_ERR_PARSE);
    CHECK(rsym_category_load(nullptr, &cat) == RSYM_ERR_INVALID_ARGUMENT);

    Category semion = load("semion");
    int n = 0;
    CHECK(rsym_fusion_coefficient(semion.get(), nullptr, 0, 0, 5, &n) == RSYM_ERR_INVALID_ARGUMENT);

    Category corrupted = load(data_file("semion_corrupted.json"));
    char *doc = nullptr;
    rsym_status s = rsym_render(corrupted.get(), nullptr, RSYM_COMMAND_RSYMBOLS, RSYM_FORMAT_TEXT, &doc);
    CHECK(rsym_status_is_certificate(s));
    CHECK(std::string(rsym_last_error()).find("(a,c)=(s,1)") != std::string::npos);

    Category svec = load(data_file("svec.json"));
    long long y = 0;
    CHECK(rsym_y_value(svec.get(), nullptr, 0, 0, 0, &y, nullptr) == RSYM_ERR_INVALID_ARGUMENT);
}
