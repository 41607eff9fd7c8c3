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

#ifndef RSYM_FUSION_HPP
#define RSYM_FUSION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "model.hpp"
#include "tables.hpp"

namespace rsym {

/// N^{a,b}_c = sum_x S_{a,x} S_{b,x} conj(S_{c,x}) / S_{0,x} with unitary S,
/// rounded entrywise. Throws NonIntegerFusion naming the worst triple, or
/// NegativeFusion.
FusionTensor verlinde(const ModularData &data, const Tolerances &tol = {});

/// dim C(c, a (x) a (x) b) = sum_e N^{a,a}_e N^{e,b}_c.
int triple_dim(const FusionTensor &n, std::size_t c, std::size_t a, std::size_t b);

// Axiom checks. Each returns the number of violated equations.
std::size_t unit_violations(const FusionTensor &n);
std::size_t associativity_violations(const FusionTensor &n);
std::size_t commutativity_violations(const FusionTensor &n);
std::size_t negativity_violations(const FusionTensor &n);
std::size_t frobenius_reciprocity_violations(const FusionTensor &n, std::span<const std::size_t> dual);

/// The dual permutation implied by N^{a,b}_0, if every a has exactly one b
/// with N^{a,b}_0 = 1 and all other N^{a,x}_0 vanish.
std::optional<std::vector<std::size_t>> fusion_duals(const FusionTensor &n);

}  // namespace rsym

#endif
