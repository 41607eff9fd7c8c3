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

#ifndef RSYM_TESTS_SUPPORT_HPP
#define RSYM_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "catalog.hpp"
#include "error.hpp"

namespace rsym::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = 1e-9;

inline std::string data_file(const std::string &name) {
    return std::string(RSYM_DATA_DIR) + "/" + name;
}

inline bool near(std::complex<double> x, std::complex<double> y, double eps = kEps) {
    return std::abs(x - y) < eps;
}

inline std::complex<double> cis(double angle) {
    return std::polar(1.0, angle);
}

inline std::size_t label(const CatalogEntry &entry, const std::string &name) {
    auto index = entry.find_label(name);
    REQUIRE(index.has_value());
    return *index;
}

/// The code of the rsym::Error thrown by `body`, failing if none is thrown.
template <typename F>
ErrorCode error_code_of(F &&body) {
    try {
        body();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected rsym::Error");
    return ErrorCode::InvalidArgument;
}

inline const std::vector<std::string> &modular_builtins() {
    return builtin_names();
}

}  // namespace rsym::testing

#endif
