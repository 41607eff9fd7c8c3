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

#ifndef RSYM_MODEL_HPP
#define RSYM_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"
#include "phase.hpp"
#include "tables.hpp"

namespace rsym {

/// A simple object. Index 0 is always the unit, and the index order is the
/// total order used to pick the gauge.
struct Label {
    std::size_t index = 0;
    std::string name;
};

std::vector<Label> make_labels(const std::vector<std::string> &names);

/// Formats "(a,c)=(s,1)" style locations for diagnostics.
std::string describe_labels(std::span<const Label> labels, std::string_view roles,
                            std::initializer_list<std::size_t> indices);

enum class SConvention {
    Unitary,       ///< S_{0,0} = 1/sqrt(dim C)
    Unnormalized,  ///< S_{0,a} = d_a
};

/// Modular data (S, T). S is stored in the normalized unitary convention
/// regardless of how it was supplied.
class ModularData {
public:
    /// Checks shapes only; invariants are left to validate_modular.
    static ModularData create(std::vector<std::string> names, ComplexMatrix s, SConvention convention,
                              std::vector<ExactPhase> twists);

    std::size_t rank() const noexcept { return labels_.size(); }
    const std::vector<Label> &labels() const noexcept { return labels_; }
    const ComplexMatrix &s() const noexcept { return s_; }
    /// sqrt(dim C) * S, whose first row holds the dimensions.
    ComplexMatrix s_unnormalized() const { return s_ * Complex(std::sqrt(global_dim_)); }
    const std::vector<ExactPhase> &twists() const noexcept { return t_; }
    Complex theta(std::size_t a) const { return t_[a].to_complex(); }
    const std::vector<double> &dims() const noexcept { return dims_; }
    double global_dimension() const noexcept { return global_dim_; }
    /// Charge conjugation read off S^2 (nearest permutation).
    const std::vector<std::size_t> &dual() const noexcept { return dual_; }

private:
    std::vector<Label> labels_;
    ComplexMatrix s_;
    std::vector<ExactPhase> t_;
    std::vector<double> dims_;
    double global_dim_ = 1;
    std::vector<std::size_t> dual_;
};

struct ValidationCheck {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
    /// Structural checks are required before any computation runs; the
    /// others are reported but left to the certificates.
    bool structural = true;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool passed() const;
    bool structural_passed() const;
    double max_residual() const;
    const ValidationCheck *first_failure(bool structural_only) const;
};

ValidationReport validate_modular(const ModularData &data, const Tolerances &tol = {});

/// Throws ValidationError naming the first failing structural check.
void require_structurally_valid(const ValidationReport &report, std::string_view what);

std::size_t dual_of(const ModularData &data, std::size_t a);

/// General input: fusion rules, twists and (once known) the indicator table.
struct PremodularData {
    std::vector<Label> labels;
    FusionTensor fusion;
    std::vector<ExactPhase> twists;
    std::optional<IndicatorTable> nu;

    std::size_t rank() const noexcept { return labels.size(); }
};

ValidationReport validate_premodular(const PremodularData &data);

/// Modular data of the Drinfeld center together with the forgetful functor
/// multiplicities and the image of the base category.
struct CenterData {
    ModularData modular;
    /// forgetful[X][a] = [x : a], the multiplicity of a in the underlying object of X.
    std::vector<std::vector<int>> forgetful;
    /// iota[c] is the center label of iota(c), when known.
    std::vector<std::optional<std::size_t>> iota;
};

ValidationReport validate_center(const CenterData &center, std::span<const ExactPhase> base_twists,
                                 const Tolerances &tol = {});

}  // namespace rsym

#endif
