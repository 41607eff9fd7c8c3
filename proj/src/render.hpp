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

#ifndef RSYM_RENDER_HPP
#define RSYM_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "catalog.hpp"
#include "pipeline.hpp"

namespace rsym {

enum class Command { Validate, Fusion, Indicators, RSymbols, YTable, Report, CatalogList };
enum class Format { Text, Csv, Json };

std::optional<Command> parse_command(std::string_view name);
std::optional<Format> parse_format(std::string_view name);

struct Rendered {
    std::string document;
    /// False only when a validate run found a failing check.
    bool ok = true;
};

/// Runs whatever part of the pipeline the command needs and renders it.
/// Engine errors propagate as rsym::Error.
Rendered render_command(const CatalogEntry &entry, Command command, Format format, const PipelineOptions &options);

/// Fusion rules, indicators and R-symbols of one entry in a single document.
/// The JSON form is a valid input file for the same entry.
std::string render_report(const CatalogEntry &entry, const FusionTensor &fusion, const IndicatorTable &indicators,
                          const RSymbolTable &rtable, Format format);

std::string render_catalog_list(Format format);

}  // namespace rsym

#endif
