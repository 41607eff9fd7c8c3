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

#include "pipeline.hpp"

#include <string>

#include "error.hpp"
#include "fusion.hpp"
#include "indicators.hpp"

namespace rsym {

namespace {

bool has_premodular_inputs(const CatalogEntry &entry) {
    return entry.fusion && (entry.nu_table || entry.center);
}

void require_center(const CatalogEntry &entry, const Tolerances &tol) {
    if (entry.center) {
        require_structurally_valid(validate_center(*entry.center, entry.twists, tol), "center data");
    }
}

}  // namespace

Route resolve_route(const CatalogEntry &entry, const Tolerances &tol) {
    if (entry.modular) {
        auto report = validate_modular(*entry.modular, tol);
        if (report.structural_passed()) {
            require_center(entry, tol);
            return Route::Modular;
        }
        if (!has_premodular_inputs(entry)) {
            require_structurally_valid(report, "S-matrix");
        }
    } else if (!has_premodular_inputs(entry)) {
        throw Error(ErrorCode::ValidationError,
                    "entry '" + entry.name + "' has neither an S-matrix nor fusion rules with indicator data");
    }
    PremodularData base{entry.labels, *entry.fusion, entry.twists, entry.nu_table};
    require_structurally_valid(validate_premodular(base), "fusion data");
    require_center(entry, tol);
    return Route::Premodular;
}

FusionTensor compute_fusion(const CatalogEntry &entry, Route route, const Tolerances &tol) {
    if (route == Route::Premodular) {
        return *entry.fusion;
    }
    FusionTensor n = verlinde(*entry.modular, tol);
    if (entry.fusion) {
        const std::size_t r = n.rank();
        for (std::size_t a = 0; a < r; a++) {
            for (std::size_t b = 0; b < r; b++) {
                for (std::size_t c = 0; c < r; c++) {
                    if (n(a, b, c) != (*entry.fusion)(a, b, c)) {
                        throw Error(ErrorCode::ValidationError,
                                    "supplied fusion block differs from the Verlinde formula at " +
                                        describe_labels(entry.labels, "abc", {a, b, c}) + ": " +
                                        std::to_string((*entry.fusion)(a, b, c)) + " vs " +
                                        std::to_string(n(a, b, c)));
                    }
                }
            }
        }
    }
    return n;
}

PremodularData build_premodular(const CatalogEntry &entry, Route route, const FusionTensor &fusion,
                                const Tolerances &tol) {
    PremodularData data{entry.labels, fusion, entry.twists, std::nullopt};

    auto agree = [&](const IndicatorTable &x, const IndicatorTable &y, const char *what) {
        double d = table_distance(x, y);
        if (!(d < tol.matrix)) {
            throw Error(ErrorCode::ValidationError,
                        std::string(what) + " disagrees with the computed indicators by " + std::to_string(d));
        }
    };

    if (route == Route::Modular) {
        data.nu = indicator_table_modular(*entry.modular, fusion, tol);
        if (entry.center) {
            agree(indicator_table_center(*entry.center, data, tol), *data.nu, "center formula");
        }
    } else if (entry.center) {
        data.nu = indicator_table_center(*entry.center, data, tol);
    } else {
        certify_indicator_table(*entry.nu_table, data, tol);
        data.nu = *entry.nu_table;
    }
    if (entry.nu_table && data.nu->provenance != IndicatorProvenance::FromInput) {
        agree(*entry.nu_table, *data.nu, "supplied nu_table");
    }
    return data;
}

PipelineResult run_pipeline(const CatalogEntry &entry, const PipelineOptions &options) {
    PipelineResult result;
    result.route = resolve_route(entry, options.tol);
    FusionTensor fusion = compute_fusion(entry, result.route, options.tol);
    result.premodular = build_premodular(entry, result.route, fusion, options.tol);
    auto branch = sqrt_branch_with_flips(entry.twists, options.sqrt_flips);
    result.rtable = assemble_R(result.premodular, branch, options.tol);
    if (entry.expected_r_table && options.sqrt_flips.empty()) {
        if (auto diff = rtable_difference(*entry.expected_r_table, result.rtable, options.tol.matrix)) {
            throw Error(ErrorCode::ValidationError, "pinned r_table of '" + entry.name + "' differs: " + *diff);
        }
    }
    return result;
}

std::optional<std::string> rtable_difference(const RSymbolTable &x, const RSymbolTable &y, double eps) {
    if (x.blocks.size() != y.blocks.size()) {
        return "block counts " + std::to_string(x.blocks.size()) + " and " + std::to_string(y.blocks.size());
    }
    if (!x.sqrt_branch.empty() && !y.sqrt_branch.empty() && x.sqrt_branch != y.sqrt_branch) {
        return std::string("square-root branches differ");
    }
    for (const auto &[key, bx] : x.blocks) {
        std::string at = "block (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                         std::to_string(key[2]) + ")";
        const RBlock *by = y.find(key[0], key[1], key[2]);
        if (!by) {
            return at + " is missing";
        }
        if (bx.kind != by->kind || bx.multiplicities != by->multiplicities) {
            return at + " has a different case or multiplicities";
        }
        auto vx = bx.diag_values();
        auto vy = by->diag_values();
        if (vx.size() != vy.size()) {
            return at + " has a different size";
        }
        for (std::size_t i = 0; i < vx.size(); i++) {
            if (!(std::abs(vx[i] - vy[i]) < eps)) {
                return at + " differs in entry " + std::to_string(i);
            }
        }
    }
    return std::nullopt;
}

}  // namespace rsym
