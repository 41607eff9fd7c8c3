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

#include <array>

#include "catalog.hpp"

namespace rsym {

namespace {

// Builtin modular data. S entries are closed-form values evaluated to
// double precision; fusion, nu_table and r_table are pinned expectations
// that every pipeline run is compared against.
struct Builtin {
    const char *name;
    const char *json;
};

constexpr std::array<Builtin, 7> kBuiltins = {{
    {"trivial", R"json({
 "name": "trivial",
 "comment": "Vec: the rank-1 modular category.",
 "labels": ["1"],
 "s_matrix": [
  [[1.0, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1]],
 "fusion": [[[1]]],
 "nu_table": [
  [[1.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]}]}})json"},
    {"semion", R"json({
 "name": "semion",
 "comment": "SU(2)_1: S = (1/sqrt2)[[1,1],[1,-1]], theta_s = i.",
 "labels": ["1", "s"],
 "s_matrix": [
  [[0.7071067811865475, 0.0], [0.7071067811865475, 0.0]],
  [[0.7071067811865475, 0.0], [-0.7071067811865475, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [1, 4]],
 "fusion": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
 "nu_table": [
  [[1.0, 0.0], [-1.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1], [1, 8]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 0, "case": "diag", "d_plus": 0, "d_minus": 1, "diag": [[0.0, 1.0]], "diag_phases": [[1, 4]]}]}})json"},
    {"toric_code", R"json({
 "name": "toric_code",
 "comment": "Z(Vec_Z2): S_{xy} = (1/2)(-1)^{mutual braiding}, theta = (1,1,1,-1).",
 "labels": ["1", "e", "m", "f"],
 "s_matrix": [
  [[0.5, 0.0], [0.5, 0.0], [0.5, 0.0], [0.5, 0.0]],
  [[0.5, 0.0], [0.5, 0.0], [-0.5, 0.0], [-0.5, 0.0]],
  [[0.5, 0.0], [-0.5, 0.0], [0.5, 0.0], [-0.5, 0.0]],
  [[0.5, 0.0], [-0.5, 0.0], [-0.5, 0.0], [0.5, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [0, 1], [0, 1], [1, 2]],
 "fusion": [[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]],
 "nu_table": [
  [[1.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1], [0, 1], [0, 1], [1, 4]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 2, "c": 2, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 3, "c": 3, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 2, "c": 3, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 1, "b": 3, "c": 2, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 2, "b": 0, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 1, "c": 3, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 2, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 3, "c": 1, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 3, "b": 0, "c": 3, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 1, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 2, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 3, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]}]}})json"},
    {"three_fermion", R"json({
 "name": "three_fermion",
 "comment": "SO(8)_1: same S as the toric code, all three fermions have theta = -1.",
 "labels": ["1", "f1", "f2", "f3"],
 "s_matrix": [
  [[0.5, 0.0], [0.5, 0.0], [0.5, 0.0], [0.5, 0.0]],
  [[0.5, 0.0], [0.5, 0.0], [-0.5, 0.0], [-0.5, 0.0]],
  [[0.5, 0.0], [-0.5, 0.0], [0.5, 0.0], [-0.5, 0.0]],
  [[0.5, 0.0], [-0.5, 0.0], [-0.5, 0.0], [0.5, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [1, 2], [1, 2], [1, 2]],
 "fusion": [[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]],
 "nu_table": [
  [[1.0, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1], [1, 4], [1, 4], [1, 4]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 2, "c": 2, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 3, "c": 3, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 1, "b": 2, "c": 3, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 1, "b": 3, "c": 2, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 2, "b": 0, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 1, "c": 3, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 2, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 2, "b": 3, "c": 1, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 3, "b": 0, "c": 3, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 1, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 2, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 3, "b": 3, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]}]}})json"},
    {"fibonacci", R"json({
 "name": "fibonacci",
 "comment": "(G2)_1: S = (1/sqrt(2+phi))[[1,phi],[phi,-1]], theta_tau = e^{4 pi i/5}.",
 "labels": ["1", "tau"],
 "s_matrix": [
  [[0.5257311121191336, 0.0], [0.85065080835204, 0.0]],
  [[0.85065080835204, 0.0], [-0.5257311121191336, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [2, 5]],
 "fusion": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]],
 "nu_table": [
  [[1.0, 0.0], [1.0, 0.0]],
  [[0.0, 0.0], [-0.30901699437494745, -0.9510565162951535]]],
 "r_table": {"sqrt_branch": [[0, 1], [1, 5]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-0.8090169943749473, -0.5877852522924732]], "diag_phases": [[3, 5]]},
    {"a": 1, "b": 1, "c": 1, "case": "diag", "d_plus": 0, "d_minus": 1, "diag": [[-0.30901699437494734, 0.9510565162951536]], "diag_phases": [[3, 10]]}]}})json"},
    {"ising", R"json({
 "name": "ising",
 "comment": "Ising: S = (1/2)[[1,sqrt2,1],[sqrt2,0,-sqrt2],[1,-sqrt2,1]], theta = (1, e^{pi i/8}, -1).",
 "labels": ["1", "sigma", "psi"],
 "s_matrix": [
  [[0.5, 0.0], [0.7071067811865476, 0.0], [0.5, 0.0]],
  [[0.7071067811865476, 0.0], [0.0, 0.0], [-0.7071067811865476, 0.0]],
  [[0.5, 0.0], [-0.7071067811865476, 0.0], [0.5, 0.0]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [1, 16], [1, 2]],
 "fusion": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 1], [0, 1, 0]], [[0, 0, 1], [0, 1, 0], [1, 0, 0]]],
 "nu_table": [
  [[1.0, 0.0], [1.0, 0.0], [1.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 1.0], [0.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1], [1, 32], [1, 4]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 2, "c": 2, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[0.9238795325112867, -0.3826834323650898]], "diag_phases": [[15, 16]]},
    {"a": 1, "b": 1, "c": 2, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[0.38268343236508984, 0.9238795325112867]], "diag_phases": [[3, 16]]},
    {"a": 1, "b": 2, "c": 1, "case": "below", "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]},
    {"a": 2, "b": 0, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 1, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 2, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[-1.0, 0.0]], "diag_phases": [[1, 2]]}]}})json"},
    {"z3", R"json({
 "name": "z3",
 "comment": "SU(3)_1: S_{ab} = e^{2 pi i ab/3}/sqrt3, theta = (1, e^{2 pi i/3}, e^{2 pi i/3}).",
 "labels": ["1", "w", "wbar"],
 "s_matrix": [
  [[0.5773502691896258, 0.0], [0.5773502691896258, 0.0], [0.5773502691896258, 0.0]],
  [[0.5773502691896258, 0.0], [-0.2886751345948128, 0.5000000000000001], [-0.2886751345948128, -0.5000000000000001]],
  [[0.5773502691896258, 0.0], [-0.2886751345948128, -0.5000000000000001], [-0.2886751345948128, 0.5000000000000001]]],
 "s_convention": "unitary",
 "t_phases": [[0, 1], [1, 3], [1, 3]],
 "fusion": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]]],
 "nu_table": [
  [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
  [[0.0, 0.0], [0.0, 0.0], [-0.5000000000000001, -0.8660254037844386]],
  [[0.0, 0.0], [-0.5000000000000001, -0.8660254037844386], [0.0, 0.0]]],
 "r_table": {"sqrt_branch": [[0, 1], [1, 6], [1, 6]],
  "blocks": [
    {"a": 0, "b": 0, "c": 0, "case": "diag", "d_plus": 1, "d_minus": 0, "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 1, "c": 1, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 0, "b": 2, "c": 2, "case": "below", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 0, "c": 1, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 1, "b": 1, "c": 2, "case": "diag", "d_plus": 0, "d_minus": 1, "diag": [[-0.4999999999999998, 0.8660254037844387]], "diag_phases": [[1, 3]]},
    {"a": 1, "b": 2, "c": 0, "case": "below", "diag": [[-0.5000000000000004, 0.8660254037844384]], "diag_phases": [[1, 3]]},
    {"a": 2, "b": 0, "c": 2, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 1, "c": 0, "case": "above", "diag": [[1.0, 0.0]], "diag_phases": [[0, 1]]},
    {"a": 2, "b": 2, "c": 1, "case": "diag", "d_plus": 0, "d_minus": 1, "diag": [[-0.4999999999999998, 0.8660254037844387]], "diag_phases": [[1, 3]]}]}})json"},
}};

}  // namespace

const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &b : kBuiltins) {
            out.emplace_back(b.name);
        }
        return out;
    }();
    return names;
}

std::optional<std::string_view> builtin_source(std::string_view name) {
    for (const auto &b : kBuiltins) {
        if (name == b.name) {
            return std::string_view(b.json);
        }
    }
    return std::nullopt;
}

}  // namespace rsym
