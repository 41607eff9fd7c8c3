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

#ifndef RSYM_INDICATORS_HPP
#define RSYM_INDICATORS_HPP

#include <cstddef>
#include <span>

#include "model.hpp"
#include "numeric.hpp"
#include "phase.hpp"
#include "tables.hpp"

namespace rsym {

/// Raw value of (1/dim C) sum_{k,l} d_k conj(S~_{c,l}) N^{k,l}_a theta_k^2 / theta_l^2,
/// with S~ the unnormalized S-matrix. No certificate is applied.
Complex evaluate_nu_modular(const ModularData &data, const FusionTensor &n, std::size_t c, std::size_t a);

/// nu_{2,1}^{iota(c)}(a) from modular data, certified: nu / sqrt(theta_c) must
/// be an integer m with |m| <= N^{a,a}_c and m = N^{a,a}_c mod 2.
Complex nu_modular(const ModularData &data, const FusionTensor &n, std::size_t c, std::size_t a,
                   const Tolerances &tol = {});

/// Raw center-formula value, (1/dim C) sum_X [x:a] conj(S~_{iota(c),X}) conj(theta_X)^2
/// with dim C = sqrt(dim Z(C)). The conjugation matches center data whose
/// iota preserves twists. Throws MissingIota when iota(c) is unknown.
Complex evaluate_nu_center(const CenterData &center, std::size_t c, std::size_t a);

/// Certified center-formula value for base labels c, a.
Complex nu_center(const CenterData &center, const PremodularData &base, std::size_t c, std::size_t a,
                  const Tolerances &tol = {});

/// Checks the integrality, bound and parity certificate and returns
/// m = nu / sqrt(theta_c). `where` names the offending pair in diagnostics.
long long indicator_certificate(Complex nu, int n_aac, const ExactPhase &sqrt_tc, const Tolerances &tol,
                                const std::string &where);

IndicatorTable indicator_table_modular(const ModularData &data, const FusionTensor &n, const Tolerances &tol = {});
IndicatorTable indicator_table_center(const CenterData &center, const PremodularData &base,
                                      const Tolerances &tol = {});

/// Applies the certificate to every entry of a supplied table.
void certify_indicator_table(const IndicatorTable &table, const PremodularData &base, const Tolerances &tol = {});

/// Largest entrywise difference between two tables of equal rank.
double table_distance(const IndicatorTable &x, const IndicatorTable &y);

struct TraceCheck {
    bool passed = false;
    double residual = 0;
};

/// Tr[R^c_{a,a}] = theta_a^{-1} nu_{2,1}^{iota(c)}(a).
TraceCheck trace_check(Complex nu, std::span<const Complex> r_diag, const ExactPhase &t_a, double eps);

}  // namespace rsym

#endif
