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

#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.hpp"
#include "fusion.hpp"
#include "indicators.hpp"

namespace rsym {

using nlohmann::ordered_json;

namespace {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// "re+im i" with full precision, for CSV.
std::string csv_complex(Complex z) {
    std::string im = format_double(z.imag(), 17);
    if (im[0] != '-') {
        im = "+" + im;
    }
    return format_double(z.real(), 17) + im + "i";
}

/// Readable form for text output; values below 1e-12 print as 0.
std::string text_complex(Complex z) {
    auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    double re = clean(z.real()), im = clean(z.imag());
    if (im == 0) {
        return format_double(re, 12);
    }
    if (re == 0) {
        return (im == 1 ? "" : im == -1 ? "-" : format_double(im, 12)) + "i";
    }
    std::string s = format_double(im, 12);
    return format_double(re, 12) + (s[0] == '-' ? "" : "+") + s + "i";
}

std::string text_phase(const ExactPhase &p) {
    if (p.is_one()) {
        return "1";
    }
    return "e^(2pi i " + std::to_string(p.numerator()) + "/" + std::to_string(p.denominator()) + ")";
}

ordered_json label_names(const CatalogEntry &entry) {
    ordered_json out = ordered_json::array();
    for (const auto &l : entry.labels) {
        out.push_back(l.name);
    }
    return out;
}

std::string dump(const ordered_json &doc) {
    return doc.dump(2) + "\n";
}

const std::string &name_of(const CatalogEntry &entry, std::size_t i) {
    return entry.labels[i].name;
}

// validate

void add_report(std::ostringstream &text, ordered_json &json, std::ostringstream &csv, const CatalogEntry &entry,
                const std::string &section, const ValidationReport &report) {
    text << section << ":\n";
    ordered_json checks = ordered_json::array();
    for (const auto &c : report.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "  %s %-24s residual %.3e (tol %.0e)%s\n", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.residual, c.tolerance, c.structural ? "" : " [twist]");
        text << line;
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"structural", c.structural}});
        csv << entry.name << "," << section << "," << c.name << "," << format_double(c.residual, 17) << ","
            << format_double(c.tolerance, 17) << "," << (c.passed ? "pass" : "fail") << "\n";
    }
    json[section] = {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

Rendered render_validation(const CatalogEntry &entry, Format format, const Tolerances &tol) {
    std::ostringstream text, csv;
    ordered_json json;
    json["name"] = entry.name;
    csv << "name,section,check,residual,tolerance,status\n";
    text << entry.name << " (rank " << entry.rank() << ")\n";
    bool ok = true;
    if (entry.modular) {
        auto r = validate_modular(*entry.modular, tol);
        ok = ok && r.passed();
        add_report(text, json, csv, entry, "modular", r);
    }
    if (entry.fusion) {
        auto r = validate_premodular({entry.labels, *entry.fusion, entry.twists, entry.nu_table});
        ok = ok && r.passed();
        add_report(text, json, csv, entry, "fusion", r);
    }
    if (entry.center) {
        auto r = validate_center(*entry.center, entry.twists, tol);
        ok = ok && r.passed();
        add_report(text, json, csv, entry, "center", r);
    }
    if (!entry.modular && !entry.fusion) {
        ok = false;
        text << "no S-matrix and no fusion block\n";
    }
    json["passed"] = ok;
    text << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    switch (format) {
        case Format::Text: return {text.str(), ok};
        case Format::Csv: return {csv.str(), ok};
        case Format::Json: return {dump(json), ok};
    }
    return {text.str(), ok};
}

// fusion

std::string render_fusion(const CatalogEntry &entry, const FusionTensor &n, Format format) {
    const std::size_t r = n.rank();
    if (format == Format::Json) {
        ordered_json doc;
        doc["name"] = entry.name;
        doc["labels"] = label_names(entry);
        doc["provenance"] = n.provenance() == FusionProvenance::FromVerlinde ? "verlinde" : "input";
        doc["fusion"] = fusion_to_json(n);
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "name,a,b,c,N\n";
    }
    for (std::size_t a = 0; a < r; a++) {
        for (std::size_t b = 0; b < r; b++) {
            if (format == Format::Csv) {
                for (std::size_t c = 0; c < r; c++) {
                    if (n(a, b, c)) {
                        out << entry.name << "," << name_of(entry, a) << "," << name_of(entry, b) << ","
                            << name_of(entry, c) << "," << n(a, b, c) << "\n";
                    }
                }
                continue;
            }
            out << name_of(entry, a) << " x " << name_of(entry, b) << " =";
            bool first = true;
            for (std::size_t c = 0; c < r; c++) {
                if (!n(a, b, c)) {
                    continue;
                }
                out << (first ? " " : " + ");
                if (n(a, b, c) > 1) {
                    out << n(a, b, c) << "*";
                }
                out << name_of(entry, c);
                first = false;
            }
            out << (first ? " 0\n" : "\n");
        }
    }
    return out.str();
}

// indicators

std::string render_indicators(const CatalogEntry &entry, const PremodularData &data, Format format) {
    const IndicatorTable &nu = *data.nu;
    const std::size_t r = data.rank();
    auto certificate = [&](std::size_t c, std::size_t a) {
        return std::llround((nu(c, a) * std::conj(data.twists[c].halve().to_complex())).real());
    };
    if (format == Format::Json) {
        ordered_json doc;
        doc["name"] = entry.name;
        doc["labels"] = label_names(entry);
        doc["provenance"] = nu.provenance == IndicatorProvenance::FromModularFormula ? "modular"
                            : nu.provenance == IndicatorProvenance::FromCenterFormula ? "center"
                                                                                       : "input";
        doc["nu_table"] = indicators_to_json(nu);
        ordered_json certs = ordered_json::array();
        for (std::size_t c = 0; c < r; c++) {
            for (std::size_t a = 0; a < r; a++) {
                certs.push_back({{"c", c}, {"a", a}, {"n_aac", data.fusion(a, a, c)}, {"m", certificate(c, a)}});
            }
        }
        doc["certificates"] = std::move(certs);
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "name,c,a,nu,m,N_aac\n";
    }
    for (std::size_t c = 0; c < r; c++) {
        for (std::size_t a = 0; a < r; a++) {
            if (format == Format::Csv) {
                out << entry.name << "," << name_of(entry, c) << "," << name_of(entry, a) << ","
                    << csv_complex(nu(c, a)) << "," << certificate(c, a) << "," << data.fusion(a, a, c) << "\n";
            } else {
                out << "nu(c=" << name_of(entry, c) << ", a=" << name_of(entry, a) << ") = " << text_complex(nu(c, a))
                    << "  m=" << certificate(c, a) << "  N=" << data.fusion(a, a, c) << "\n";
            }
        }
    }
    return out.str();
}

// r-symbols

std::string rsymbols_csv(const CatalogEntry &entry, const RSymbolTable &rtable) {
    std::ostringstream out;
    out << "name,a,b,c,case,d_plus,d_minus,diag\n";
    for (const auto &[key, block] : rtable.blocks) {
        out << entry.name << "," << name_of(entry, block.a) << "," << name_of(entry, block.b) << ","
            << name_of(entry, block.c) << "," << block_case_name(block.kind) << ",";
        if (block.multiplicities) {
            out << block.multiplicities->plus << "," << block.multiplicities->minus;
        } else {
            out << ",";
        }
        out << ",";
        bool first = true;
        for (Complex v : block.diag_values()) {
            out << (first ? "" : ";") << csv_complex(v);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string rsymbols_text(const CatalogEntry &entry, const RSymbolTable &rtable) {
    std::ostringstream out;
    out << "sqrt branch:";
    for (std::size_t c = 0; c < rtable.sqrt_branch.size(); c++) {
        out << " " << name_of(entry, c) << "->" << text_phase(rtable.sqrt_branch[c]);
    }
    out << "\n";
    for (const auto &[key, block] : rtable.blocks) {
        out << "R(" << name_of(entry, block.a) << "," << name_of(entry, block.b) << "," << name_of(entry, block.c)
            << ") " << block_case_name(block.kind);
        if (block.multiplicities) {
            out << " d+=" << block.multiplicities->plus << " d-=" << block.multiplicities->minus;
        }
        out << " [";
        for (std::size_t i = 0; i < block.diag.size(); i++) {
            out << (i ? ", " : "") << text_complex(block.diag[i].to_complex());
        }
        out << "]\n";
    }
    return out.str();
}

ordered_json rsymbols_json(const CatalogEntry &entry, const RSymbolTable &rtable) {
    ordered_json doc;
    doc["name"] = entry.name;
    doc["labels"] = label_names(entry);
    ordered_json table = rtable_to_json(rtable);
    for (auto &[k, v] : table.items()) {
        doc[k] = v;
    }
    return doc;
}

// y-table

std::string render_y(const CatalogEntry &entry, const std::vector<YEntry> &table, Format format) {
    if (format == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (const auto &e : table) {
            rows.push_back({{"a", e.a},
                            {"b", e.b},
                            {"c", e.c},
                            {"y", e.y.integer},
                            {"triple_dim", e.y.triple_dim},
                            {"value", {e.y.value.real(), e.y.value.imag()}}});
        }
        ordered_json doc;
        doc["name"] = entry.name;
        doc["labels"] = label_names(entry);
        doc["y_table"] = std::move(rows);
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "name,a,b,c,y,triple_dim\n";
    }
    for (const auto &e : table) {
        if (format == Format::Csv) {
            out << entry.name << "," << name_of(entry, e.a) << "," << name_of(entry, e.b) << ","
                << name_of(entry, e.c) << "," << e.y.integer << "," << e.y.triple_dim << "\n";
        } else {
            out << "Y(a=" << name_of(entry, e.a) << ", b=" << name_of(entry, e.b) << ", c=" << name_of(entry, e.c)
                << ") = " << e.y.integer << "  dim C(c, a a b) = " << e.y.triple_dim << "\n";
        }
    }
    return out.str();
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "validate") return Command::Validate;
    if (name == "fusion") return Command::Fusion;
    if (name == "indicators") return Command::Indicators;
    if (name == "rsymbols") return Command::RSymbols;
    if (name == "y-table") return Command::YTable;
    if (name == "report") return Command::Report;
    if (name == "catalog-list") return Command::CatalogList;
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

std::string render_report(const CatalogEntry &entry, const FusionTensor &fusion, const IndicatorTable &indicators,
                          const RSymbolTable &rtable, Format format) {
    if (format == Format::Csv) {
        return rsymbols_csv(entry, rtable);
    }
    if (format == Format::Json) {
        CatalogEntry out = entry;
        out.fusion = fusion;
        out.nu_table = indicators;
        out.expected_r_table = rtable;
        return dump(entry_to_json(out));
    }
    PremodularData data{entry.labels, fusion, entry.twists, indicators};
    std::ostringstream text;
    text << "== " << entry.name << " (rank " << entry.rank() << ")\n";
    if (!entry.comment.empty()) {
        text << entry.comment << "\n";
    }
    text << "\n-- fusion rules\n" << render_fusion(entry, fusion, Format::Text);
    text << "\n-- indicators nu_{2,1}^{iota(c)}(a)\n" << render_indicators(entry, data, Format::Text);
    text << "\n-- R-symbols\n" << rsymbols_text(entry, rtable);
    return text.str();
}

std::string render_catalog_list(Format format) {
    ordered_json doc = ordered_json::array();
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "name,rank\n";
    }
    for (const auto &name : builtin_names()) {
        CatalogEntry e = read_entry(name);
        if (format == Format::Json) {
            doc.push_back({{"name", name}, {"rank", e.rank()}, {"comment", e.comment}});
        } else if (format == Format::Csv) {
            out << name << "," << e.rank() << "\n";
        } else {
            out << name << " (rank " << e.rank() << "): " << e.comment << "\n";
        }
    }
    return format == Format::Json ? dump(doc) : out.str();
}

Rendered render_command(const CatalogEntry &entry, Command command, Format format, const PipelineOptions &options) {
    const Tolerances &tol = options.tol;
    switch (command) {
        case Command::CatalogList:
            return {render_catalog_list(format), true};
        case Command::Validate:
            return render_validation(entry, format, tol);
        case Command::Fusion: {
            Route route = resolve_route(entry, tol);
            return {render_fusion(entry, compute_fusion(entry, route, tol), format), true};
        }
        case Command::Indicators: {
            Route route = resolve_route(entry, tol);
            auto data = build_premodular(entry, route, compute_fusion(entry, route, tol), tol);
            return {render_indicators(entry, data, format), true};
        }
        case Command::RSymbols: {
            auto result = run_pipeline(entry, options);
            switch (format) {
                case Format::Text: return {rsymbols_text(entry, result.rtable), true};
                case Format::Csv: return {rsymbols_csv(entry, result.rtable), true};
                case Format::Json: return {dump(rsymbols_json(entry, result.rtable)), true};
            }
            break;
        }
        case Command::YTable: {
            Route route = resolve_route(entry, tol);
            if (route != Route::Modular) {
                throw Error(ErrorCode::InvalidArgument, "the Y-table needs modular data (an invertible S-matrix)");
            }
            auto fusion = compute_fusion(entry, route, tol);
            return {render_y(entry, y_table(*entry.modular, fusion, tol), format), true};
        }
        case Command::Report: {
            auto result = run_pipeline(entry, options);
            return {render_report(entry, result.premodular.fusion, *result.premodular.nu, result.rtable, format),
                    true};
        }
    }
    return {"", false};
}

}  // namespace rsym
