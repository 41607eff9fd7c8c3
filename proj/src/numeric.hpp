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

#ifndef RSYM_NUMERIC_HPP
#define RSYM_NUMERIC_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace rsym {

using Complex = std::complex<double>;

/// Residual thresholds. `matrix` bounds identity residuals (unitarity,
/// trace relation); `integer` bounds the distance to the nearest integer.
struct Tolerances {
    double matrix = 1e-9;
    double integer = 1e-6;
};

/// Returns round(z) if |Im z| < eps and |Re z - round(Re z)| < eps.
std::optional<long long> round_to_integer(Complex z, double eps);

/// Distance from z to the nearest integer, combining both parts.
double integer_residual(Complex z);

/// Small dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    /// Largest entry modulus.
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

}  // namespace rsym

#endif
