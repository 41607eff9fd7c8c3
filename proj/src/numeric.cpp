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

#include "numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace rsym {

std::optional<long long> round_to_integer(Complex z, double eps) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return std::nullopt;
    }
    double r = std::round(z.real());
    if (std::abs(z.imag()) < eps && std::abs(z.real() - r) < eps) {
        return static_cast<long long>(r);
    }
    return std::nullopt;
}

double integer_residual(Complex z) {
    return std::max(std::abs(z.imag()), std::abs(z.real() - std::round(z.real())));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex v = (*this)(i, k);
            for (std::size_t j = 0; j < rhs.cols_; j++) {
                out(i, j) += v * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out = *this;
    for (auto &v : out.data_) {
        v *= scalar;
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); i++) {
        out.data_[i] -= rhs.data_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace rsym
