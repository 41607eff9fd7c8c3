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

#include "fusion.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace rsym {

FusionTensor verlinde(const ModularData &data, const Tolerances &tol) {
    const std::size_t n = data.rank();
    const ComplexMatrix &s = data.s();
    for (std::size_t x = 0; x < n; x++) {
        if (std::abs(s(0, x)) < tol.matrix) {
            throw Error(ErrorCode::ValidationError, "S_{0," + data.labels()[x].name + "} vanishes");
        }
    }

    FusionTensor out(n, FusionProvenance::FromVerlinde);
    double worst = 0;
    std::size_t wa = 0, wb = 0, wc = 0;
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = 0; b < n; b++) {
            for (std::size_t c = 0; c < n; c++) {
                Complex v = 0;
                for (std::size_t x = 0; x < n; x++) {
                    v += s(a, x) * s(b, x) * std::conj(s(c, x)) / s(0, x);
                }
                double r = integer_residual(v);
                if (r > worst) {
                    worst = r;
                    wa = a, wb = b, wc = c;
                }
                auto rounded = round_to_integer(v, tol.integer);
                if (rounded && *rounded < 0) {
                    throw Error(ErrorCode::NegativeFusion,
                                describe_labels(data.labels(), "abc", {a, b, c}) + " rounds to " +
                                    std::to_string(*rounded));
                }
                out.at(a, b, c) = rounded ? static_cast<int>(*rounded) : 0;
            }
        }
    }
    if (!(worst < tol.integer)) {
        throw Error(ErrorCode::NonIntegerFusion, "worst entry " + describe_labels(data.labels(), "abc", {wa, wb, wc}) +
                                                     " has residual " + std::to_string(worst));
    }
    return out;
}

int triple_dim(const FusionTensor &n, std::size_t c, std::size_t a, std::size_t b) {
    int total = 0;
    for (std::size_t e = 0; e < n.rank(); e++) {
        total += n(a, a, e) * n(e, b, c);
    }
    return total;
}

std::size_t unit_violations(const FusionTensor &n) {
    std::size_t bad = 0;
    for (std::size_t b = 0; b < n.rank(); b++) {
        for (std::size_t c = 0; c < n.rank(); c++) {
            int expected = b == c ? 1 : 0;
            bad += n(0, b, c) != expected;
            bad += n(b, 0, c) != expected;
        }
    }
    return bad;
}

std::size_t associativity_violations(const FusionTensor &n) {
    const std::size_t r = n.rank();
    std::size_t bad = 0;
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t b = 0; b < r; b++) {
            for (std::size_t c = 0; c < r; c++) {
                for (std::size_t d = 0; d < r; d++) {
                    long left = 0, right = 0;
                    for (std::size_t e = 0; e < r; e++) {
                        left += static_cast<long>(n(a, b, e)) * n(e, c, d);
                        right += static_cast<long>(n(b, c, e)) * n(a, e, d);
                    }
                    bad += left != right;
                }
            }
        }
    }
    return bad;
}

std::size_t commutativity_violations(const FusionTensor &n) {
    std::size_t bad = 0;
    for (std::size_t a = 0; a < n.rank(); a++) {
        for (std::size_t b = a + 1; b < n.rank(); b++) {
            for (std::size_t c = 0; c < n.rank(); c++) {
                bad += n(a, b, c) != n(b, a, c);
            }
        }
    }
    return bad;
}

std::size_t negativity_violations(const FusionTensor &n) {
    std::size_t bad = 0;
    for (std::size_t a = 0; a < n.rank(); a++) {
        for (std::size_t b = 0; b < n.rank(); b++) {
            for (std::size_t c = 0; c < n.rank(); c++) {
                bad += n(a, b, c) < 0;
            }
        }
    }
    return bad;
}

std::size_t frobenius_reciprocity_violations(const FusionTensor &n, std::span<const std::size_t> dual) {
    std::size_t bad = 0;
    for (std::size_t a = 0; a < n.rank(); a++) {
        for (std::size_t b = 0; b < n.rank(); b++) {
            for (std::size_t c = 0; c < n.rank(); c++) {
                int v = n(a, b, c);
                bad += v != n(b, dual[c], dual[a]);
                bad += v != n(dual[c], a, dual[b]);
            }
        }
    }
    return bad;
}

std::optional<std::vector<std::size_t>> fusion_duals(const FusionTensor &n) {
    std::vector<std::size_t> dual(n.rank());
    for (std::size_t a = 0; a < n.rank(); a++) {
        std::size_t found = 0;
        for (std::size_t b = 0; b < n.rank(); b++) {
            int v = n(a, b, 0);
            if (v == 1) {
                dual[a] = b;
                found++;
            } else if (v != 0) {
                return std::nullopt;
            }
        }
        if (found != 1) {
            return std::nullopt;
        }
    }
    return dual;
}

}  // namespace rsym
