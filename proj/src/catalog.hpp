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

#ifndef RSYM_CATALOG_HPP
#define RSYM_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "model.hpp"
#include "rsymbols.hpp"
#include "tables.hpp"

namespace rsym {

/// One category as read from a JSON document. Which route the pipeline
/// takes depends on which optional blocks are present.
struct CatalogEntry {
    std::string name;
    std::string comment;
    std::vector<Label> labels;
    std::vector<ExactPhase> twists;
    std::optional<ModularData> modular;
    std::optional<FusionTensor> fusion;
    std::optional<IndicatorTable> nu_table;
    std::optional<CenterData> center;
    /// Pinned R-table; must match what the pipeline computes.
    std::optional<RSymbolTable> expected_r_table;

    std::size_t rank() const noexcept { return labels.size(); }
    std::optional<std::size_t> find_label(std::string_view name) const;
};

/// Parses without checking invariants. Throws ParseError with a field path,
/// or NonSquareInput / RankMismatch for shape errors.
CatalogEntry parse_entry(const nlohmann::json &doc);
CatalogEntry parse_entry_text(std::string_view text);

/// Builtin name or file path, parsed but not validated.
CatalogEntry read_entry(std::string_view path_or_name);

/// read_entry followed by the structural validation of the chosen route.
CatalogEntry load(std::string_view path_or_name, const Tolerances &tol = {});

const std::vector<std::string> &builtin_names();
std::optional<std::string_view> builtin_source(std::string_view name);

nlohmann::ordered_json phases_to_json(const std::vector<ExactPhase> &phases);
nlohmann::ordered_json matrix_to_json(const ComplexMatrix &m);
nlohmann::ordered_json fusion_to_json(const FusionTensor &n);
nlohmann::ordered_json indicators_to_json(const IndicatorTable &table);
nlohmann::ordered_json rtable_to_json(const RSymbolTable &table);
RSymbolTable rtable_from_json(const nlohmann::json &doc, std::size_t rank);

/// Serializes the entry back into the input schema.
nlohmann::ordered_json entry_to_json(const CatalogEntry &entry);

}  // namespace rsym

#endif
