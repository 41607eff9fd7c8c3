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

#ifndef RSYM_PHASE_HPP
#define RSYM_PHASE_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace rsym {

/// A root of unity e^{2 pi i num/den}, held as a reduced rational exponent
/// with 0 <= num < den.
class ExactPhase {
public:
    constexpr ExactPhase() = default;
    ExactPhase(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    ExactPhase operator*(const ExactPhase &other) const;
    ExactPhase operator/(const ExactPhase &other) const { return *this * other.inverse(); }
    ExactPhase &operator*=(const ExactPhase &other) { return *this = *this * other; }

    ExactPhase inverse() const;
    ExactPhase pow(std::int64_t exponent) const;

    /// Canonical square root: exponent num/(2 den), so the result lies in the
    /// upper half plane (or is 1).
    ExactPhase halve() const;

    /// Multiplication by -1.
    ExactPhase negated() const { return *this * ExactPhase(1, 2); }

    bool is_one() const noexcept { return num_ == 0; }

    std::complex<double> to_complex() const;
    std::string to_string() const;

    friend bool operator==(const ExactPhase &, const ExactPhase &) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace rsym

#endif
