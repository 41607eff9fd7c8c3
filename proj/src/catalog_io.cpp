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

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "error.hpp"

namespace rsym {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw Error(ErrorCode::ParseError, path + ": " + what);
}

const json &require(const json &obj, const std::string &path, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

void reject_unknown(const json &obj, const std::string &path, std::initializer_list<const char *> known) {
    std::set<std::string> allowed(known.begin(), known.end());
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.count(key)) {
            fail(path, "unknown field '" + key + "'");
        }
    }
}

const json &require_array(const json &v, const std::string &path) {
    if (!v.is_array()) {
        fail(path, "expected an array");
    }
    return v;
}

double read_number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    return v.get<double>();
}

long long read_integer(const json &v, const std::string &path) {
    if (!v.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return v.get<long long>();
}

Complex read_complex(const json &v, const std::string &path) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (!v.is_array() || v.size() != 2) {
        fail(path, "expected [re, im]");
    }
    return {read_number(v[0], path + "[0]"), read_number(v[1], path + "[1]")};
}

ComplexMatrix read_matrix(const json &v, const std::string &path) {
    require_array(v, path);
    std::size_t rows = v.size();
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; i++) {
        require_array(v[i], path + "[" + std::to_string(i) + "]");
        if (i == 0) {
            cols = v[i].size();
        } else if (v[i].size() != cols) {
            throw Error(ErrorCode::NonSquareInput, path + ": ragged rows");
        }
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t j = 0; j < cols; j++) {
            m(i, j) = read_complex(v[i][j], path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return m;
}

std::vector<ExactPhase> read_phases(const json &v, const std::string &path) {
    require_array(v, path);
    std::vector<ExactPhase> out;
    for (std::size_t i = 0; i < v.size(); i++) {
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2) {
            fail(p, "expected [num, den]");
        }
        long long num = read_integer(v[i][0], p + "[0]");
        long long den = read_integer(v[i][1], p + "[1]");
        if (den <= 0) {
            fail(p, "denominator must be positive");
        }
        out.emplace_back(num, den);
    }
    return out;
}

std::vector<std::string> read_labels(const json &v, const std::string &path) {
    require_array(v, path);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (!v[i].is_string()) {
            fail(path + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(v[i].get<std::string>());
        if (!seen.insert(out.back()).second) {
            fail(path + "[" + std::to_string(i) + "]", "duplicate label '" + out.back() + "'");
        }
    }
    if (out.empty()) {
        fail(path, "at least the unit label is required");
    }
    return out;
}

SConvention read_convention(const json &obj, const std::string &path) {
    auto it = obj.find("s_convention");
    if (it == obj.end()) {
        return SConvention::Unitary;
    }
    if (*it == "unitary") {
        return SConvention::Unitary;
    }
    if (*it == "unnormalized") {
        return SConvention::Unnormalized;
    }
    fail(path + ".s_convention", "expected \"unitary\" or \"unnormalized\"");
}

FusionTensor read_fusion(const json &v, const std::string &path, std::size_t rank) {
    require_array(v, path);
    if (v.size() != rank) {
        throw Error(ErrorCode::RankMismatch, path + ": expected " + std::to_string(rank) + " slices");
    }
    FusionTensor n(rank, FusionProvenance::FromInput);
    for (std::size_t a = 0; a < rank; a++) {
        std::string pa = path + "[" + std::to_string(a) + "]";
        if (!v[a].is_array() || v[a].size() != rank) {
            throw Error(ErrorCode::RankMismatch, pa + ": expected " + std::to_string(rank) + " rows");
        }
        for (std::size_t b = 0; b < rank; b++) {
            std::string pb = pa + "[" + std::to_string(b) + "]";
            if (!v[a][b].is_array() || v[a][b].size() != rank) {
                throw Error(ErrorCode::RankMismatch, pb + ": expected " + std::to_string(rank) + " entries");
            }
            for (std::size_t c = 0; c < rank; c++) {
                n.at(a, b, c) = static_cast<int>(read_integer(v[a][b][c], pb + "[" + std::to_string(c) + "]"));
            }
        }
    }
    return n;
}

IndicatorTable read_nu(const json &v, const std::string &path, std::size_t rank) {
    ComplexMatrix m = read_matrix(v, path);
    if (m.rows() != rank || m.cols() != rank) {
        throw Error(ErrorCode::RankMismatch, path + ": expected a " + std::to_string(rank) + "x" +
                                                 std::to_string(rank) + " table");
    }
    return {std::move(m), IndicatorProvenance::FromInput};
}

CenterData read_center(const json &v, const std::string &path, std::size_t base_rank) {
    if (!v.is_object()) {
        fail(path, "expected an object");
    }
    reject_unknown(v, path, {"labels", "s_matrix", "s_convention", "t_phases", "forgetful", "iota", "comment"});
    auto labels = read_labels(require(v, path, "labels"), path + ".labels");
    auto s = read_matrix(require(v, path, "s_matrix"), path + ".s_matrix");
    auto t = read_phases(require(v, path, "t_phases"), path + ".t_phases");
    CenterData center{ModularData::create(labels, std::move(s), read_convention(v, path), std::move(t)), {}, {}};

    const json &forget = require_array(require(v, path, "forgetful"), path + ".forgetful");
    if (forget.size() != labels.size()) {
        throw Error(ErrorCode::RankMismatch, path + ".forgetful: expected one row per center label");
    }
    for (std::size_t x = 0; x < forget.size(); x++) {
        std::string px = path + ".forgetful[" + std::to_string(x) + "]";
        require_array(forget[x], px);
        if (forget[x].size() != base_rank) {
            throw Error(ErrorCode::RankMismatch, px + ": expected " + std::to_string(base_rank) + " entries");
        }
        std::vector<int> row;
        for (std::size_t a = 0; a < base_rank; a++) {
            row.push_back(static_cast<int>(read_integer(forget[x][a], px + "[" + std::to_string(a) + "]")));
        }
        center.forgetful.push_back(std::move(row));
    }

    const json &iota = require_array(require(v, path, "iota"), path + ".iota");
    if (iota.size() != base_rank) {
        throw Error(ErrorCode::RankMismatch, path + ".iota: expected one entry per base label");
    }
    for (std::size_t c = 0; c < base_rank; c++) {
        if (iota[c].is_null()) {
            center.iota.emplace_back(std::nullopt);
            continue;
        }
        long long x = read_integer(iota[c], path + ".iota[" + std::to_string(c) + "]");
        if (x < 0 || static_cast<std::size_t>(x) >= labels.size()) {
            fail(path + ".iota[" + std::to_string(c) + "]", "index out of range");
        }
        center.iota.emplace_back(static_cast<std::size_t>(x));
    }
    return center;
}

ordered_json complex_to_json(Complex z) {
    return ordered_json::array({z.real(), z.imag()});
}

}  // namespace

std::optional<std::size_t> CatalogEntry::find_label(std::string_view label) const {
    for (const auto &l : labels) {
        if (l.name == label) {
            return l.index;
        }
    }
    return std::nullopt;
}

CatalogEntry parse_entry(const json &doc) {
    const std::string root = "$";
    if (!doc.is_object()) {
        fail(root, "expected an object");
    }
    reject_unknown(doc, root,
                   {"name", "comment", "labels", "s_matrix", "s_convention", "t_phases", "fusion", "nu_table",
                    "center", "r_table"});

    CatalogEntry entry;
    const json &name = require(doc, root, "name");
    if (!name.is_string()) {
        fail("$.name", "expected a string");
    }
    entry.name = name.get<std::string>();
    if (auto it = doc.find("comment"); it != doc.end() && it->is_string()) {
        entry.comment = it->get<std::string>();
    }
    auto names = read_labels(require(doc, root, "labels"), "$.labels");
    entry.labels = make_labels(names);
    entry.twists = read_phases(require(doc, root, "t_phases"), "$.t_phases");
    const std::size_t rank = names.size();

    if (auto it = doc.find("s_matrix"); it != doc.end()) {
        ComplexMatrix s = read_matrix(*it, "$.s_matrix");
        entry.modular = ModularData::create(names, std::move(s), read_convention(doc, root), entry.twists);
    } else if (entry.twists.size() != rank) {
        throw Error(ErrorCode::RankMismatch, std::to_string(rank) + " labels but " +
                                                 std::to_string(entry.twists.size()) + " twists");
    }
    if (auto it = doc.find("fusion"); it != doc.end()) {
        entry.fusion = read_fusion(*it, "$.fusion", rank);
    }
    if (auto it = doc.find("nu_table"); it != doc.end()) {
        entry.nu_table = read_nu(*it, "$.nu_table", rank);
    }
    if (auto it = doc.find("center"); it != doc.end()) {
        entry.center = read_center(*it, "$.center", rank);
    }
    if (auto it = doc.find("r_table"); it != doc.end()) {
        entry.expected_r_table = rtable_from_json(*it, rank);
    }
    return entry;
}

CatalogEntry parse_entry_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return parse_entry(doc);
}

CatalogEntry read_entry(std::string_view path_or_name) {
    if (auto src = builtin_source(path_or_name)) {
        return parse_entry_text(*src);
    }
    std::ifstream in{std::string(path_or_name)};
    if (!in) {
        throw Error(ErrorCode::IoError, "'" + std::string(path_or_name) + "' is neither a builtin nor a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_entry_text(buffer.str());
}

CatalogEntry load(std::string_view path_or_name, const Tolerances &tol) {
    CatalogEntry entry = read_entry(path_or_name);
    if (entry.modular) {
        require_structurally_valid(validate_modular(*entry.modular, tol), "S-matrix of '" + entry.name + "'");
    }
    if (entry.fusion) {
        PremodularData base{entry.labels, *entry.fusion, entry.twists, entry.nu_table};
        require_structurally_valid(validate_premodular(base), "fusion block of '" + entry.name + "'");
    }
    if (entry.center) {
        require_structurally_valid(validate_center(*entry.center, entry.twists, tol), "center data of '" + entry.name + "'");
    }
    return entry;
}

ordered_json phases_to_json(const std::vector<ExactPhase> &phases) {
    ordered_json out = ordered_json::array();
    for (const auto &p : phases) {
        out.push_back({p.numerator(), p.denominator()});
    }
    return out;
}

ordered_json matrix_to_json(const ComplexMatrix &m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); i++) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); j++) {
            row.push_back(complex_to_json(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json fusion_to_json(const FusionTensor &n) {
    ordered_json out = ordered_json::array();
    for (std::size_t a = 0; a < n.rank(); a++) {
        ordered_json slice = ordered_json::array();
        for (std::size_t b = 0; b < n.rank(); b++) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < n.rank(); c++) {
                row.push_back(n(a, b, c));
            }
            slice.push_back(std::move(row));
        }
        out.push_back(std::move(slice));
    }
    return out;
}

ordered_json indicators_to_json(const IndicatorTable &table) {
    return matrix_to_json(table.values);
}

ordered_json rtable_to_json(const RSymbolTable &table) {
    ordered_json blocks = ordered_json::array();
    for (const auto &[key, block] : table.blocks) {
        ordered_json b;
        b["a"] = block.a;
        b["b"] = block.b;
        b["c"] = block.c;
        b["case"] = std::string(block_case_name(block.kind));
        if (block.multiplicities) {
            b["d_plus"] = block.multiplicities->plus;
            b["d_minus"] = block.multiplicities->minus;
        }
        ordered_json diag = ordered_json::array();
        for (Complex v : block.diag_values()) {
            diag.push_back(complex_to_json(v));
        }
        b["diag"] = std::move(diag);
        b["diag_phases"] = phases_to_json(block.diag);
        blocks.push_back(std::move(b));
    }
    ordered_json out;
    out["sqrt_branch"] = phases_to_json(table.sqrt_branch);
    out["blocks"] = std::move(blocks);
    return out;
}

RSymbolTable rtable_from_json(const json &doc, std::size_t rank) {
    const std::string root = "$.r_table";
    if (!doc.is_object()) {
        fail(root, "expected an object");
    }
    reject_unknown(doc, root, {"sqrt_branch", "blocks"});
    RSymbolTable table;
    if (auto it = doc.find("sqrt_branch"); it != doc.end()) {
        table.sqrt_branch = read_phases(*it, root + ".sqrt_branch");
        if (table.sqrt_branch.size() != rank) {
            throw Error(ErrorCode::RankMismatch, root + ".sqrt_branch: expected " + std::to_string(rank) + " entries");
        }
    }
    const json &blocks = require_array(require(doc, root, "blocks"), root + ".blocks");
    for (std::size_t i = 0; i < blocks.size(); i++) {
        std::string p = root + ".blocks[" + std::to_string(i) + "]";
        const json &b = blocks[i];
        if (!b.is_object()) {
            fail(p, "expected an object");
        }
        reject_unknown(b, p, {"a", "b", "c", "case", "d_plus", "d_minus", "diag", "diag_phases"});
        RBlock block;
        auto index = [&](const char *key) {
            long long v = read_integer(require(b, p, key), p + "." + key);
            if (v < 0 || static_cast<std::size_t>(v) >= rank) {
                fail(p + "." + key, "label index out of range");
            }
            return static_cast<std::size_t>(v);
        };
        block.a = index("a");
        block.b = index("b");
        block.c = index("c");
        const json &kind = require(b, p, "case");
        if (kind == "above") {
            block.kind = BlockCase::Above;
        } else if (kind == "below") {
            block.kind = BlockCase::Below;
        } else if (kind == "diag") {
            block.kind = BlockCase::Diagonal;
        } else {
            fail(p + ".case", "expected above, below or diag");
        }
        if (b.contains("d_plus") || b.contains("d_minus")) {
            block.multiplicities = Multiplicities{
                static_cast<int>(read_integer(require(b, p, "d_plus"), p + ".d_plus")),
                static_cast<int>(read_integer(require(b, p, "d_minus"), p + ".d_minus"))};
        }
        if (auto it = b.find("diag_phases"); it != b.end()) {
            block.diag = read_phases(*it, p + ".diag_phases");
        } else {
            // Complex-only entries are snapped to the nearest 2^-20 turn;
            // comparisons downstream use the complex values anyway.
            const json &diag = require_array(require(b, p, "diag"), p + ".diag");
            for (std::size_t k = 0; k < diag.size(); k++) {
                Complex z = read_complex(diag[k], p + ".diag[" + std::to_string(k) + "]");
                constexpr std::int64_t turns = 1 << 20;
                double angle = std::arg(z) / (2 * std::numbers::pi);
                block.diag.emplace_back(static_cast<std::int64_t>(std::llround(angle * turns)), turns);
            }
        }
        table.blocks.emplace(BlockKey{block.a, block.b, block.c}, std::move(block));
    }
    return table;
}

ordered_json entry_to_json(const CatalogEntry &entry) {
    ordered_json out;
    out["name"] = entry.name;
    if (!entry.comment.empty()) {
        out["comment"] = entry.comment;
    }
    ordered_json labels = ordered_json::array();
    for (const auto &l : entry.labels) {
        labels.push_back(l.name);
    }
    out["labels"] = std::move(labels);
    if (entry.modular) {
        out["s_matrix"] = matrix_to_json(entry.modular->s());
        out["s_convention"] = "unitary";
    }
    out["t_phases"] = phases_to_json(entry.twists);
    if (entry.fusion) {
        out["fusion"] = fusion_to_json(*entry.fusion);
    }
    if (entry.nu_table) {
        out["nu_table"] = indicators_to_json(*entry.nu_table);
    }
    if (entry.center) {
        const auto &z = entry.center->modular;
        ordered_json c;
        ordered_json zl = ordered_json::array();
        for (const auto &l : z.labels()) {
            zl.push_back(l.name);
        }
        c["labels"] = std::move(zl);
        c["s_matrix"] = matrix_to_json(z.s());
        c["s_convention"] = "unitary";
        c["t_phases"] = phases_to_json(z.twists());
        c["forgetful"] = entry.center->forgetful;
        ordered_json iota = ordered_json::array();
        for (const auto &x : entry.center->iota) {
            iota.push_back(x ? ordered_json(*x) : ordered_json(nullptr));
        }
        c["iota"] = std::move(iota);
        out["center"] = std::move(c);
    }
    if (entry.expected_r_table) {
        out["r_table"] = rtable_to_json(*entry.expected_r_table);
    }
    return out;
}

}  // namespace rsym
