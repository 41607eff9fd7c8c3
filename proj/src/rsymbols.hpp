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

#ifndef RSYM_RSYMBOLS_HPP
#define RSYM_RSYMBOLS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "model.hpp"
#include "numeric.hpp"
#include "phase.hpp"
#include "tables.hpp"

namespace rsym {

enum class BlockCase {
    Above,     ///< a > b: identity
    Below,     ///< a < b: theta_c / (theta_a theta_b)
    Diagonal,  ///< a = b: (sqrt(theta_c) / theta_a) diag(+1 x d+, -1 x d-)
};

std::string_view block_case_name(BlockCase kind);

struct Multiplicities {
    int plus = 0;
    int minus = 0;

    friend bool operator==(const Multiplicities &, const Multiplicities &) = default;
};

/// Diagonal matrix [R^c_{a,b}] in the canonical gauge. Every entry is a
/// root of unity, so the diagonal is kept exact.
struct RBlock {
    std::size_t a = 0, b = 0, c = 0;
    BlockCase kind = BlockCase::Above;
    std::vector<ExactPhase> diag;
    std::optional<Multiplicities> multiplicities;

    std::vector<Complex> diag_values() const;
};

using BlockKey = std::array<std::size_t, 3>;

struct RSymbolTable {
    /// Keyed (a, b, c); present iff N^{a,b}_c > 0.
    std::map<BlockKey, RBlock> blocks;
    std::vector<ExactPhase> sqrt_branch;

    const RBlock *find(std::size_t a, std::size_t b, std::size_t c) const;
};

/// d+- = (N^{a,a}_c +- nu / sqrt(theta_c)) / 2, with the indicator certificate.
Multiplicities compute_d_pm(int n_aac, Complex nu, const ExactPhase &sqrt_tc, const Tolerances &tol = {});

/// halve(t_c) for every label.
std::vector<ExactPhase> canonical_sqrt_branch(std::span<const ExactPhase> twists);

/// Canonical branch with the listed labels negated.
std::vector<ExactPhase> sqrt_branch_with_flips(std::span<const ExactPhase> twists, std::span<const std::size_t> flips);

/// Requires a populated indicator table. Diagonal blocks list the +
/// eigenvalues first and are checked against the trace relation.
RSymbolTable assemble_R(const PremodularData &data, std::span<const ExactPhase> sqrt_branch,
                        const Tolerances &tol = {});

struct YValue {
    Complex value;
    long long integer = 0;
    int triple_dim = 0;
};

/// Y^c_{a,b} = sqrt(theta_b) / (sqrt(theta_c) dim C)
///             * sum_{k,l} conj(S~_{b,k}) conj(S~_{c,l}) N^{k,l}_a theta_k^2 / theta_l^2,
/// certified integral with triple_dim +- Y nonnegative and even.
YValue compute_Y(const ModularData &data, const FusionTensor &n, std::size_t a, std::size_t b, std::size_t c,
                 const Tolerances &tol = {});

/// Uncertified value of the same sum.
Complex evaluate_Y(const ModularData &data, const FusionTensor &n, std::size_t a, std::size_t b, std::size_t c);

struct YEntry {
    std::size_t a = 0, b = 0, c = 0;
    YValue y;
};

/// All rank^3 entries in (a, b, c) lexicographic order.
std::vector<YEntry> y_table(const ModularData &data, const FusionTensor &n, const Tolerances &tol = {});

}  // namespace rsym

#endif
