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

#ifndef RSYM_PIPELINE_HPP
#define RSYM_PIPELINE_HPP

#include <cstddef>
#include <vector>

#include "catalog.hpp"
#include "model.hpp"
#include "rsymbols.hpp"
#include "tables.hpp"

namespace rsym {

enum class Route {
    Modular,     ///< fusion and indicators from (S, T)
    Premodular,  ///< supplied fusion, indicators supplied or from center data
};

struct PipelineOptions {
    Tolerances tol;
    /// Labels whose square-root branch is negated.
    std::vector<std::size_t> sqrt_flips;
};

/// Picks the route and runs the structural validation for it. The modular
/// route is taken when an S-matrix is present and passes; otherwise the
/// entry must carry fusion rules plus a nu table or center data.
Route resolve_route(const CatalogEntry &entry, const Tolerances &tol);

FusionTensor compute_fusion(const CatalogEntry &entry, Route route, const Tolerances &tol);

/// Fusion, twists and a certified indicator table. Supplied tables and center
/// data are cross-checked against whatever else is available.
PremodularData build_premodular(const CatalogEntry &entry, Route route, const FusionTensor &fusion,
                                const Tolerances &tol);

struct PipelineResult {
    Route route = Route::Modular;
    PremodularData premodular;
    RSymbolTable rtable;
};

/// Full run up to the R-table. When the entry pins an expected R-table and
/// the canonical branch is used, the two must agree.
PipelineResult run_pipeline(const CatalogEntry &entry, const PipelineOptions &options);

/// Blockwise comparison; returns a description of the first difference.
std::optional<std::string> rtable_difference(const RSymbolTable &x, const RSymbolTable &y, double eps);

}  // namespace rsym

#endif
