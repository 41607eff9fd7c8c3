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

#include "rsymbols.hpp"

#include <cstdlib>
#include <string>

#include "error.hpp"
#include "fusion.hpp"
#include "indicators.hpp"

namespace rsym {

std::string_view block_case_name(BlockCase kind) {
    switch (kind) {
        case BlockCase::Above: return "above";
        case BlockCase::Below: return "below";
        case BlockCase::Diagonal: return "diag";
    }
    return "?";
}

std::vector<Complex> RBlock::diag_values() const {
    std::vector<Complex> out;
    out.reserve(diag.size());
    for (const auto &p : diag) {
        out.push_back(p.to_complex());
    }
    return out;
}

const RBlock *RSymbolTable::find(std::size_t a, std::size_t b, std::size_t c) const {
    auto it = blocks.find({a, b, c});
    return it == blocks.end() ? nullptr : &it->second;
}

Multiplicities compute_d_pm(int n_aac, Complex nu, const ExactPhase &sqrt_tc, const Tolerances &tol) {
    long long m = indicator_certificate(nu, n_aac, sqrt_tc, tol, "N=" + std::to_string(n_aac));
    return {static_cast<int>((n_aac + m) / 2), static_cast<int>((n_aac - m) / 2)};
}

std::vector<ExactPhase> canonical_sqrt_branch(std::span<const ExactPhase> twists) {
    std::vector<ExactPhase> out;
    out.reserve(twists.size());
    for (const auto &t : twists) {
        out.push_back(t.halve());
    }
    return out;
}

std::vector<ExactPhase> sqrt_branch_with_flips(std::span<const ExactPhase> twists,
                                               std::span<const std::size_t> flips) {
    auto out = canonical_sqrt_branch(twists);
    for (std::size_t c : flips) {
        if (c >= out.size()) {
            throw Error(ErrorCode::InvalidArgument, "square-root flip names label #" + std::to_string(c) +
                                                        " but the rank is " + std::to_string(out.size()));
        }
        out[c] = out[c].negated();
    }
    return out;
}

RSymbolTable assemble_R(const PremodularData &data, std::span<const ExactPhase> sqrt_branch,
                        const Tolerances &tol) {
    const std::size_t n = data.rank();
    if (!data.nu) {
        throw Error(ErrorCode::InvalidArgument, "indicator table is not populated");
    }
    if (sqrt_branch.size() != n) {
        throw Error(ErrorCode::RankMismatch, "square-root branch has " + std::to_string(sqrt_branch.size()) +
                                                 " entries for rank " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; c++) {
        if (sqrt_branch[c].pow(2) != data.twists[c]) {
            throw Error(ErrorCode::InvalidArgument,
                        "square-root branch for " + data.labels[c].name + " does not square to theta");
        }
    }

    RSymbolTable table;
    table.sqrt_branch.assign(sqrt_branch.begin(), sqrt_branch.end());
    const auto &t = data.twists;
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                int mult = data.fusion(a, b, c);
                if (mult <= 0) {
                    continue;
                }
                RBlock block{a, b, c, BlockCase::Above, {}, std::nullopt};
                if (a > b) {
                    block.diag.assign(mult, ExactPhase());
                } else if (a < b) {
                    block.kind = BlockCase::Below;
                    block.diag.assign(mult, t[c] / (t[a] * t[b]));
                } else {
                    block.kind = BlockCase::Diagonal;
                    std::string where = describe_labels(data.labels, "ac", {a, c});
                    Complex nu = (*data.nu)(c, a);
                    try {
                        block.multiplicities = compute_d_pm(mult, nu, sqrt_branch[c], tol);
                    } catch (const Error &e) {
                        throw Error(e.code(), where + " " + e.detail());
                    }
                    ExactPhase plus = sqrt_branch[c] / t[a];
                    block.diag.assign(block.multiplicities->plus, plus);
                    block.diag.insert(block.diag.end(), block.multiplicities->minus, plus.negated());

                    auto values = block.diag_values();
                    auto check = trace_check(nu, values, t[a], tol.matrix);
                    if (!check.passed) {
                        throw Error(ErrorCode::TraceMismatch, where + ": trace differs from nu/theta_a by " +
                                                                  std::to_string(check.residual));
                    }
                }
                table.blocks.emplace(BlockKey{a, b, c}, std::move(block));
            }
        }
    }
    return table;
}

Complex evaluate_Y(const ModularData &data, const FusionTensor &n, std::size_t a, std::size_t b, std::size_t c) {
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
            total += std::conj(s(b, k)) * std::conj(s(c, l)) * static_cast<double>(mult) * phase;
        }
    }
    Complex prefactor = (t[b].halve() / t[c].halve()).to_complex() / data.global_dimension();
    return prefactor * total;
}

YValue compute_Y(const ModularData &data, const FusionTensor &n, std::size_t a, std::size_t b, std::size_t c,
                 const Tolerances &tol) {
    const std::string where = describe_labels(data.labels(), "abc", {a, b, c});
    YValue out;
    out.value = evaluate_Y(data, n, a, b, c);
    out.triple_dim = triple_dim(n, c, a, b);
    auto y = round_to_integer(out.value, tol.integer);
    if (!y) {
        throw Error(ErrorCode::NonIntegerCertificate, where + ": Y = " + std::to_string(out.value.real()) +
                                                          (out.value.imag() < 0 ? "" : "+") +
                                                          std::to_string(out.value.imag()) + "i is not an integer");
    }
    out.integer = *y;
    if ((out.triple_dim + out.integer) % 2 != 0) {
        throw Error(ErrorCode::ParityViolation, where + ": dim C(c, a a b) = " + std::to_string(out.triple_dim) +
                                                    " and Y = " + std::to_string(out.integer) +
                                                    " differ in parity");
    }
    if (std::llabs(out.integer) > out.triple_dim) {
        throw Error(ErrorCode::BoundViolation, where + ": |Y| = " + std::to_string(std::llabs(out.integer)) +
                                                   " exceeds dim C(c, a a b) = " + std::to_string(out.triple_dim));
    }
    return out;
}

std::vector<YEntry> y_table(const ModularData &data, const FusionTensor &n, const Tolerances &tol) {
    std::vector<YEntry> out;
    const std::size_t r = data.rank();
    out.reserve(r * r * r);
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t b = 0; b < r; b++) {
            for (std::size_t c = 0; c < r; c++) {
                out.push_back({a, b, c, compute_Y(data, n, a, b, c, tol)});
            }
        }
    }
    return out;
}

}  // namespace rsym
