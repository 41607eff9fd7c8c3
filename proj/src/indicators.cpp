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

#include "indicators.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace rsym {

Complex evaluate_nu_modular(const ModularData &data, const FusionTensor &n, std::size_t c, std::size_t a) {
    const std::size_t r = data.rank();
    const ComplexMatrix s = data.s_unnormalized();
    const auto &t = data.twists();
    Complex total = 0;
    for (std::size_t k = 0; k < r; k++) {
        for (std::size_t l = 0; l < r; l++) {
            int mult = n(k, l, a);
            if (mult == 0) {
                continue;
            }
            Complex phase = (t[k].pow(2) / t[l].pow(2)).to_complex();
            total += data.dims()[k] * std::conj(s(c, l)) * static_cast<double>(mult) * phase;
        }
    }
    return total / data.global_dimension();
}

Complex nu_modular(const ModularData &data, const FusionTensor &n, std::size_t c, std::size_t a,
                   const Tolerances &tol) {
    Complex nu = evaluate_nu_modular(data, n, c, a);
    indicator_certificate(nu, n(a, a, c), data.twists()[c].halve(), tol,
                          describe_labels(data.labels(), "ac", {a, c}));
    return nu;
}

Complex evaluate_nu_center(const CenterData &center, std::size_t c, std::size_t a) {
    if (c >= center.iota.size() || !center.iota[c]) {
        throw Error(ErrorCode::MissingIota, "no center object is identified with base label #" + std::to_string(c));
    }
    const ModularData &z = center.modular;
    const std::size_t x0 = *center.iota[c];
    const ComplexMatrix s = z.s_unnormalized();
    const double dim_c = std::sqrt(z.global_dimension());
    Complex total = 0;
    for (std::size_t x = 0; x < z.rank(); x++) {
        int mult = center.forgetful[x][a];
        if (mult == 0) {
            continue;
        }
        Complex phase = z.twists()[x].pow(2).inverse().to_complex();
        total += static_cast<double>(mult) * std::conj(s(x0, x)) * phase;
    }
    return total / dim_c;
}

Complex nu_center(const CenterData &center, const PremodularData &base, std::size_t c, std::size_t a,
                  const Tolerances &tol) {
    std::string where = describe_labels(base.labels, "ac", {a, c});
    Complex nu;
    try {
        nu = evaluate_nu_center(center, c, a);
    } catch (const Error &e) {
        throw Error(e.code(), where + ": " + e.detail());
    }
    indicator_certificate(nu, base.fusion(a, a, c), base.twists[c].halve(), tol, where);
    return nu;
}

long long indicator_certificate(Complex nu, int n_aac, const ExactPhase &sqrt_tc, const Tolerances &tol,
                                const std::string &where) {
    Complex ratio = nu * std::conj(sqrt_tc.to_complex());
    auto m = round_to_integer(ratio, tol.integer);
    if (!m) {
        throw Error(ErrorCode::NonIntegerCertificate,
                    where + ": nu/sqrt(theta_c) = " + std::to_string(ratio.real()) + (ratio.imag() < 0 ? "" : "+") +
                        std::to_string(ratio.imag()) + "i is not an integer (residual " +
                        std::to_string(integer_residual(ratio)) + ")");
    }
    if ((static_cast<long long>(n_aac) - *m) % 2 != 0) {
        throw Error(ErrorCode::ParityViolation, where + ": nu/sqrt(theta_c) = " + std::to_string(*m) +
                                                    " has parity different from N^{a,a}_c = " +
                                                    std::to_string(n_aac));
    }
    if (std::llabs(*m) > n_aac) {
        throw Error(ErrorCode::BoundViolation, where + ": |nu/sqrt(theta_c)| = " + std::to_string(std::llabs(*m)) +
                                                   " exceeds N^{a,a}_c = " + std::to_string(n_aac));
    }
    return *m;
}

IndicatorTable indicator_table_modular(const ModularData &data, const FusionTensor &n, const Tolerances &tol) {
    IndicatorTable table{ComplexMatrix(data.rank(), data.rank()), IndicatorProvenance::FromModularFormula};
    for (std::size_t c = 0; c < data.rank(); c++) {
        for (std::size_t a = 0; a < data.rank(); a++) {
            table.values(c, a) = nu_modular(data, n, c, a, tol);
        }
    }
    return table;
}

IndicatorTable indicator_table_center(const CenterData &center, const PremodularData &base, const Tolerances &tol) {
    IndicatorTable table{ComplexMatrix(base.rank(), base.rank()), IndicatorProvenance::FromCenterFormula};
    for (std::size_t c = 0; c < base.rank(); c++) {
        for (std::size_t a = 0; a < base.rank(); a++) {
            table.values(c, a) = nu_center(center, base, c, a, tol);
        }
    }
    return table;
}

void certify_indicator_table(const IndicatorTable &table, const PremodularData &base, const Tolerances &tol) {
    for (std::size_t c = 0; c < base.rank(); c++) {
        for (std::size_t a = 0; a < base.rank(); a++) {
            indicator_certificate(table(c, a), base.fusion(a, a, c), base.twists[c].halve(), tol,
                                  describe_labels(base.labels, "ac", {a, c}));
        }
    }
}

double table_distance(const IndicatorTable &x, const IndicatorTable &y) {
    if (x.rank() != y.rank()) {
        return INFINITY;
    }
    return (x.values - y.values).max_abs();
}

TraceCheck trace_check(Complex nu, std::span<const Complex> r_diag, const ExactPhase &t_a, double eps) {
    Complex trace = 0;
    for (Complex v : r_diag) {
        trace += v;
    }
    double residual = std::abs(trace - t_a.inverse().to_complex() * nu);
    return {residual < eps, residual};
}

}  // namespace rsym
