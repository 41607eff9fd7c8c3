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

#include "phase.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace rsym {

namespace {

__extension__ using Wide = __int128;

ExactPhase from_wide(Wide num, Wide den) {
    if (den <= 0) {
        throw std::invalid_argument("phase denominator must be positive");
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    Wide a = num, b = den;
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    // a == gcd(num, den), and gcd(0, den) == den.
    num /= a;
    den /= a;
    constexpr Wide limit = INT64_MAX;
    if (den > limit) {
        throw std::overflow_error("phase denominator overflows 64 bits");
    }
    return ExactPhase(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

ExactPhase::ExactPhase(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0) {
        throw std::invalid_argument("phase denominator must be positive");
    }
    std::int64_t n = numerator % denominator;
    if (n < 0) {
        n += denominator;
    }
    std::int64_t g = std::gcd(n, denominator);
    num_ = n / g;
    den_ = denominator / g;
}

ExactPhase ExactPhase::operator*(const ExactPhase &other) const {
    Wide l = std::lcm(den_, other.den_);
    return from_wide(Wide(num_) * (l / den_) + Wide(other.num_) * (l / other.den_), l);
}

ExactPhase ExactPhase::inverse() const {
    return ExactPhase(den_ - num_, den_);
}

ExactPhase ExactPhase::pow(std::int64_t exponent) const {
    return from_wide(Wide(num_) * exponent, den_);
}

ExactPhase ExactPhase::halve() const {
    return from_wide(num_, Wide(den_) * 2);
}

std::complex<double> ExactPhase::to_complex() const {
    // Quarter turns are returned exactly so that 1, i, -1, -i carry no
    // rounding noise into serialized output.
    if ((4 * num_) % den_ == 0) {
        switch ((4 * num_) / den_) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return std::polar(1.0, angle);
}

std::string ExactPhase::to_string() const {
    return "e^(2pi i " + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace rsym
