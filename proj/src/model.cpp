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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"
#include "fusion.hpp"

namespace rsym {

std::vector<Label> make_labels(const std::vector<std::string> &names) {
    std::vector<Label> labels;
    labels.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); i++) {
        labels.push_back({i, names[i]});
    }
    return labels;
}

std::string describe_labels(std::span<const Label> labels, std::string_view roles,
                            std::initializer_list<std::size_t> indices) {
    std::string out = "(";
    for (std::size_t i = 0; i < roles.size(); i++) {
        if (i) {
            out += ",";
        }
        out += roles[i];
    }
    out += ")=(";
    bool first = true;
    for (std::size_t idx : indices) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += idx < labels.size() ? labels[idx].name : "#" + std::to_string(idx);
    }
    return out + ")";
}

ModularData ModularData::create(std::vector<std::string> names, ComplexMatrix s, SConvention convention,
                                std::vector<ExactPhase> twists) {
    if (!s.square()) {
        throw Error(ErrorCode::NonSquareInput, "S-matrix is " + std::to_string(s.rows()) + "x" +
                                                   std::to_string(s.cols()));
    }
    std::size_t rank = s.rows();
    if (rank == 0) {
        throw Error(ErrorCode::RankMismatch, "S-matrix is empty");
    }
    if (twists.size() != rank) {
        throw Error(ErrorCode::RankMismatch, "S-matrix has rank " + std::to_string(rank) + " but " +
                                                 std::to_string(twists.size()) + " twists were given");
    }
    if (names.size() != rank) {
        throw Error(ErrorCode::RankMismatch, "S-matrix has rank " + std::to_string(rank) + " but " +
                                                 std::to_string(names.size()) + " labels were given");
    }

    ModularData d;
    d.labels_ = make_labels(names);
    d.t_ = std::move(twists);

    double row0 = 0;
    for (std::size_t a = 0; a < rank; a++) {
        row0 += std::norm(s(0, a));
    }
    if (!(row0 > 0) || !std::isfinite(row0)) {
        throw Error(ErrorCode::ValidationError, "first row of S vanishes");
    }
    if (convention == SConvention::Unnormalized) {
        // Unitary S has unit-norm rows, so the first row fixes the scale.
        s = s * Complex(1.0 / std::sqrt(row0));
    }
    d.s_ = std::move(s);

    double s00 = d.s_(0, 0).real();
    d.global_dim_ = 1.0 / (s00 * s00);
    d.dims_.resize(rank);
    for (std::size_t a = 0; a < rank; a++) {
        d.dims_[a] = d.s_(0, a).real() / s00;
    }

    ComplexMatrix s2 = d.s_ * d.s_;
    d.dual_.resize(rank);
    for (std::size_t a = 0; a < rank; a++) {
        std::size_t best = 0;
        for (std::size_t b = 1; b < rank; b++) {
            if (std::abs(s2(a, b)) > std::abs(s2(a, best))) {
                best = b;
            }
        }
        d.dual_[a] = best;
    }
    return d;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

bool ValidationReport::structural_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed || !c.structural; });
}

double ValidationReport::max_residual() const {
    double m = 0;
    for (const auto &c : checks) {
        m = std::max(m, c.residual);
    }
    return m;
}

const ValidationCheck *ValidationReport::first_failure(bool structural_only) const {
    for (const auto &c : checks) {
        if (!c.passed && (c.structural || !structural_only)) {
            return &c;
        }
    }
    return nullptr;
}

void require_structurally_valid(const ValidationReport &report, std::string_view what) {
    if (const auto *bad = report.first_failure(true)) {
        throw Error(ErrorCode::ValidationError, std::string(what) + " fails check '" + bad->name +
                                                    "' (residual " + std::to_string(bad->residual) + ")");
    }
}

namespace {

ValidationCheck make_check(std::string name, double residual, double tolerance, bool structural = true) {
    bool ok = std::isfinite(residual) && residual < tolerance;
    return {std::move(name), residual, tolerance, ok, structural};
}

ValidationCheck count_check(std::string name, std::size_t violations, bool structural = true) {
    return {std::move(name), static_cast<double>(violations), 0.5, violations == 0, structural};
}

}  // namespace

ValidationReport validate_modular(const ModularData &data, const Tolerances &tol) {
    const ComplexMatrix &s = data.s();
    const std::size_t n = data.rank();
    ValidationReport report;

    report.checks.push_back(make_check("s_symmetric", (s - s.transpose()).max_abs(), tol.matrix));
    report.checks.push_back(
        make_check("s_unitary", (s * s.adjoint() - ComplexMatrix::identity(n)).max_abs(), tol.matrix));

    double row0 = 0;
    bool positive = true;
    for (std::size_t a = 0; a < n; a++) {
        Complex v = s(0, a);
        row0 = std::max(row0, std::abs(v.imag()) + std::max(0.0, -v.real()));
        positive = positive && v.real() > tol.matrix;
    }
    auto row_check = make_check("s_row0_positive", row0, tol.matrix);
    row_check.passed = row_check.passed && positive;
    report.checks.push_back(row_check);

    report.checks.push_back(make_check("unit_twist", std::abs(data.theta(0) - 1.0), tol.matrix));

    ComplexMatrix perm(n, n);
    for (std::size_t a = 0; a < n; a++) {
        perm(a, data.dual()[a]) = 1.0;
    }
    report.checks.push_back(make_check("s_squared_permutation", (s * s - perm).max_abs(), tol.matrix));

    std::size_t bad_dual = data.dual()[0] == 0 ? 0 : 1;
    for (std::size_t a = 0; a < n; a++) {
        if (data.dual()[data.dual()[a]] != a) {
            bad_dual++;
        }
    }
    report.checks.push_back(count_check("dual_involution", bad_dual));

    // Checks below involve T; certificate failures catch a bad T more
    // precisely than these do.
    double twist_dual = 0;
    for (std::size_t a = 0; a < n; a++) {
        twist_dual = std::max(twist_dual, std::abs(data.theta(a) - data.theta(data.dual()[a])));
    }
    report.checks.push_back(make_check("dual_twist", twist_dual, tol.matrix, false));

    Complex p_plus = 0, p_minus = 0;
    for (std::size_t a = 0; a < n; a++) {
        double d2 = data.dims()[a] * data.dims()[a];
        p_plus += d2 * data.theta(a);
        p_minus += d2 * std::conj(data.theta(a));
    }
    double dim = data.global_dimension();
    report.checks.push_back(make_check("gauss_sums", std::abs(p_plus * p_minus - dim) / dim, tol.matrix, false));

    // (ST)^3 = (p+ / sqrt(dim C)) S^2 for the unitary normalization.
    ComplexMatrix t(n, n);
    for (std::size_t a = 0; a < n; a++) {
        t(a, a) = data.theta(a);
    }
    ComplexMatrix st = s * t;
    ComplexMatrix lhs = st * st * st;
    ComplexMatrix rhs = (s * s) * (p_plus / std::sqrt(dim));
    report.checks.push_back(make_check("modular_relation", (lhs - rhs).max_abs(), tol.matrix, false));

    return report;
}

std::size_t dual_of(const ModularData &data, std::size_t a) {
    return data.dual().at(a);
}

ValidationReport validate_premodular(const PremodularData &data) {
    ValidationReport report;
    const std::size_t n = data.rank();
    bool shapes = data.fusion.rank() == n && data.twists.size() == n &&
                  (!data.nu || (data.nu->values.rows() == n && data.nu->values.cols() == n));
    report.checks.push_back(count_check("shapes", shapes ? 0 : 1));
    if (!shapes) {
        return report;
    }
    report.checks.push_back(count_check("fusion_nonnegative", negativity_violations(data.fusion)));
    report.checks.push_back(count_check("fusion_unit", unit_violations(data.fusion)));
    report.checks.push_back(count_check("fusion_associative", associativity_violations(data.fusion)));
    report.checks.push_back(count_check("fusion_commutative", commutativity_violations(data.fusion)));

    auto duals = fusion_duals(data.fusion);
    report.checks.push_back(count_check("fusion_duals", duals ? 0 : 1));
    if (duals) {
        report.checks.push_back(
            count_check("frobenius_reciprocity", frobenius_reciprocity_violations(data.fusion, *duals)));
        std::size_t twist_bad = 0;
        for (std::size_t a = 0; a < n; a++) {
            if (data.twists[a] != data.twists[(*duals)[a]]) {
                twist_bad++;
            }
        }
        report.checks.push_back(count_check("dual_twist", twist_bad));
    }
    report.checks.push_back(count_check("unit_twist", data.twists[0].is_one() ? 0 : 1));
    return report;
}

ValidationReport validate_center(const CenterData &center, std::span<const ExactPhase> base_twists,
                                 const Tolerances &tol) {
    ValidationReport report = validate_modular(center.modular, tol);
    // Every center check is structural: the center feeds the indicator formula directly.
    for (auto &c : report.checks) {
        c.name = "center_" + c.name;
        c.structural = true;
    }
    const std::size_t zn = center.modular.rank();
    const std::size_t n = base_twists.size();

    bool shape_ok = center.forgetful.size() == zn && center.iota.size() == n;
    std::size_t negative = 0;
    for (const auto &row : center.forgetful) {
        shape_ok = shape_ok && row.size() == n;
        for (int v : row) {
            negative += v < 0 ? 1 : 0;
        }
    }
    report.checks.push_back(count_check("center_shapes", shape_ok ? 0 : 1));
    report.checks.push_back(count_check("forgetful_nonnegative", negative));
    if (!shape_ok) {
        return report;
    }

    std::size_t range_bad = 0;
    std::set<std::size_t> seen;
    for (const auto &x : center.iota) {
        if (x && (*x >= zn || !seen.insert(*x).second)) {
            range_bad++;
        }
    }
    report.checks.push_back(count_check("iota_injective", range_bad));
    if (range_bad) {
        return report;
    }

    std::size_t twist_bad = 0;
    std::size_t forget_bad = 0;
    for (std::size_t c = 0; c < n; c++) {
        if (!center.iota[c]) {
            continue;
        }
        std::size_t x = *center.iota[c];
        if (center.modular.twists()[x] != base_twists[c]) {
            twist_bad++;
        }
        for (std::size_t a = 0; a < n; a++) {
            if (center.forgetful[x][a] != (a == c ? 1 : 0)) {
                forget_bad++;
            }
        }
    }
    report.checks.push_back(count_check("iota_preserves_twists", twist_bad));
    report.checks.push_back(count_check("iota_forgetful", forget_bad));
    return report;
}

}  // namespace rsym
