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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "error.hpp"
#include "fusion.hpp"
#include "indicators.hpp"
#include "pipeline.hpp"
#include "rsymbols.hpp"

namespace {

using cd = std::complex<double>;
using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kEpsMatrix = 1e-9;
constexpr double kEpsInt = 1e-6;

struct Outcome {
    bool ok = true;
    std::string summary;
    std::string first_failure;

    void fail(const std::string &why) {
        if (ok) {
            first_failure = why;
        }
        ok = false;
    }
};

std::string fmt(cd z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

cd root_of_unity(double turns) {
    return std::polar(1.0, 2 * kPi * turns);
}

cd canonical_sqrt(long long num, long long den) {
    return std::polar(1.0, kPi * static_cast<double>(num) / static_cast<double>(den));
}

std::vector<std::string> builtins() {
    return rsym::builtin_names();
}

std::string data_file(const char *name) {
    return std::string(RSYM_DATA_DIR) + "/" + name;
}

struct Process {
    int status = -1;
    std::string output;
};

Process run_cli(const std::string &args, bool merge_stderr) {
    std::string cmd = std::string("\"") + RSYM_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Process p;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return p;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        p.output.append(buf, n);
    }
    int raw = pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Closed-form modular data and direct sums; it shares
// nothing with the engine.
namespace oracle {

struct Model {
    std::vector<std::string> labels;
    std::vector<std::vector<cd>> s;  // unitary
    std::vector<double> t;           // theta = e^{2 pi i t}, 0 <= t < 1
};

Model semion() {
    const double r = 1 / std::sqrt(2.0);
    return {{"1", "s"}, {{r, r}, {r, -r}}, {0.0, 0.25}};
}

Model ising() {
    const double q = std::sqrt(2.0);
    return {{"1", "sigma", "psi"}, {{0.5, q / 2, 0.5}, {q / 2, 0.0, -q / 2}, {0.5, -q / 2, 0.5}}, {0.0, 1.0 / 16, 0.5}};
}

Model fibonacci() {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    const double norm = 1 / std::sqrt(2 + phi);
    return {{"1", "tau"}, {{norm, phi * norm}, {phi * norm, -norm}}, {0.0, 0.4}};
}

int fusion(const Model &m, size_t a, size_t b, size_t c) {
    cd sum = 0;
    for (size_t x = 0; x < m.labels.size(); x++) {
        sum += m.s[a][x] * m.s[b][x] * std::conj(m.s[c][x]) / m.s[0][x];
    }
    return static_cast<int>(std::lround(sum.real()));
}

cd theta(const Model &m, size_t a) {
    return root_of_unity(m.t[a]);
}

double dim(const Model &m, size_t a) {
    return (m.s[0][a] / m.s[0][0]).real();
}

// (1/dim C) sum_{k,l} d_k conj(S~_{c,l}) N^{k,l}_a theta_k^2 / theta_l^2 with S~ = sqrt(dim C) S.
cd indicator(const Model &m, size_t c, size_t a) {
    const size_t n = m.labels.size();
    const double dim_c = 1 / std::norm(m.s[0][0]);
    cd sum = 0;
    for (size_t k = 0; k < n; k++) {
        for (size_t l = 0; l < n; l++) {
            int nkl = fusion(m, k, l, a);
            if (nkl == 0) {
                continue;
            }
            cd s_tilde = std::sqrt(dim_c) * m.s[c][l];
            sum += dim(m, k) * std::conj(s_tilde) * static_cast<double>(nkl) * theta(m, k) * theta(m, k) /
                   (theta(m, l) * theta(m, l));
        }
    }
    return sum / dim_c;
}

// Diagonal of R^c_{a,a}: d+ copies of sqrt(theta_c)/theta_a, then d- of its negative.
std::vector<cd> r_diag(const Model &m, size_t a, size_t c) {
    int n = fusion(m, a, a, c);
    cd root = std::polar(1.0, kPi * m.t[c]);
    cd ratio = indicator(m, c, a) / root;
    int k = static_cast<int>(std::lround(ratio.real()));
    int plus = (n + k) / 2;
    int minus = (n - k) / 2;
    std::vector<cd> out;
    for (int i = 0; i < plus; i++) {
        out.push_back(root / theta(m, a));
    }
    for (int i = 0; i < minus; i++) {
        out.push_back(-root / theta(m, a));
    }
    return out;
}

}  // namespace oracle

// ---------------------------------------------------------------------------

Outcome verlinde_matches_pinned() {
    Outcome out;
    for (const auto &name : builtins()) {
        rsym::CatalogEntry entry = rsym::load(name);
        if (!entry.modular || !entry.fusion) {
            out.fail(name + ": builtin lacks S or a pinned fusion tensor");
            continue;
        }
        rsym::FusionTensor computed = rsym::verlinde(*entry.modular);
        if (!computed.same_entries(*entry.fusion)) {
            out.fail(name + ": Verlinde fusion differs from the pinned tensor");
        }
    }
    out.summary = std::to_string(builtins().size()) + " builtins";
    return out;
}

Outcome indicator_certificates() {
    Outcome out;
    size_t pairs = 0;
    for (const auto &name : builtins()) {
        rsym::CatalogEntry entry = rsym::load(name);
        rsym::FusionTensor n = rsym::verlinde(*entry.modular);
        const size_t rank = entry.rank();
        for (size_t c = 0; c < rank; c++) {
            for (size_t a = 0; a < rank; a++) {
                pairs++;
                cd nu = rsym::evaluate_nu_modular(*entry.modular, n, c, a);
                cd m = nu / canonical_sqrt(entry.twists[c].numerator(), entry.twists[c].denominator());
                double k = std::round(m.real());
                int n_aac = n(a, a, c);
                std::string where = name + " (c,a)=(" + entry.labels[c].name + "," + entry.labels[a].name + ")";
                if (std::abs(m - cd(k, 0)) > kEpsInt) {
                    out.fail(where + ": nu/sqrt(theta_c) = " + fmt(m) + " is not an integer");
                } else if (std::abs(k) > n_aac) {
                    out.fail(where + ": |" + std::to_string(static_cast<long long>(k)) + "| > N^{a,a}_c");
                } else if ((n_aac - static_cast<long long>(k)) % 2 != 0) {
                    out.fail(where + ": parity differs from N^{a,a}_c");
                }
            }
        }
    }
    out.summary = std::to_string(pairs) + " (c,a) pairs";
    return out;
}

Outcome trace_relation() {
    Outcome out;
    size_t blocks = 0;
    double worst = 0;
    for (const auto &name : builtins()) {
        rsym::CatalogEntry entry = rsym::load(name);
        rsym::PipelineResult result = rsym::run_pipeline(entry, {});
        for (const auto &[key, block] : result.rtable.blocks) {
            if (block.kind != rsym::BlockCase::Diagonal) {
                continue;
            }
            blocks++;
            cd trace = 0;
            for (cd z : block.diag_values()) {
                trace += z;
            }
            const auto &ta = entry.twists[block.a];
            cd theta_a = root_of_unity(static_cast<double>(ta.numerator()) / static_cast<double>(ta.denominator()));
            cd expected = (*result.premodular.nu)(block.c, block.a) / theta_a;
            double residual = std::abs(trace - expected);
            worst = std::max(worst, residual);
            if (!(residual < kEpsMatrix)) {
                out.fail(name + " block (" + entry.labels[block.a].name + "," + entry.labels[block.a].name + "," +
                         entry.labels[block.c].name + "): residual " + std::to_string(residual));
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu diagonal blocks, max residual %.2e", blocks, worst);
    out.summary = buf;
    return out;
}

Outcome known_r_values() {
    struct Known {
        const char *builtin;
        oracle::Model model;
        const char *a;
        const char *c;
        cd value;
    };
    const std::vector<Known> known = {
        {"semion", oracle::semion(), "s", "1", cd(0, 1)},
        {"ising", oracle::ising(), "sigma", "1", std::polar(1.0, -kPi / 8)},
        {"ising", oracle::ising(), "sigma", "psi", std::polar(1.0, 3 * kPi / 8)},
        {"fibonacci", oracle::fibonacci(), "tau", "1", std::polar(1.0, -4 * kPi / 5)},
        {"fibonacci", oracle::fibonacci(), "tau", "tau", std::polar(1.0, 3 * kPi / 5)},
    };
    Outcome out;
    for (const auto &k : known) {
        auto index = [&](const char *label) {
            auto it = std::find(k.model.labels.begin(), k.model.labels.end(), label);
            return static_cast<size_t>(it - k.model.labels.begin());
        };
        size_t a = index(k.a), c = index(k.c);
        std::string where = std::string(k.builtin) + " (" + k.a + "," + k.a + "," + k.c + ")";

        std::vector<cd> brute = oracle::r_diag(k.model, a, c);
        if (brute.size() != 1 || std::abs(brute[0] - k.value) > kEpsMatrix) {
            out.fail(where + ": oracle disagrees with the literal value " + fmt(k.value));
            continue;
        }

        rsym::CatalogEntry entry = rsym::load(k.builtin);
        rsym::PipelineResult result = rsym::run_pipeline(entry, {});
        const rsym::RBlock *block = result.rtable.find(*entry.find_label(k.a), *entry.find_label(k.a),
                                                       *entry.find_label(k.c));
        if (!block) {
            out.fail(where + ": engine produced no block");
            continue;
        }
        auto engine = block->diag_values();
        if (engine.size() != 1 || std::abs(engine[0] - brute[0]) > kEpsMatrix) {
            out.fail(where + ": engine " + (engine.empty() ? std::string("[]") : fmt(engine[0])) + " vs oracle " +
                     fmt(brute[0]));
        }
    }

    // Oracle self-check: theta_a d_a = sum_c d_c Tr R^c_{a,a}.
    for (const auto &m : {oracle::semion(), oracle::ising(), oracle::fibonacci()}) {
        for (size_t a = 0; a < m.labels.size(); a++) {
            cd sum = 0;
            for (size_t c = 0; c < m.labels.size(); c++) {
                for (cd z : oracle::r_diag(m, a, c)) {
                    sum += oracle::dim(m, c) * z;
                }
            }
            if (std::abs(sum - oracle::theta(m, a) * oracle::dim(m, a)) > kEpsMatrix) {
                out.fail("oracle ribbon identity fails for " + m.labels[a]);
            }
        }
    }
    out.summary = std::to_string(known.size()) + " blocks against the brute-force oracle";
    return out;
}

Outcome y_certificates() {
    Outcome out;
    size_t triples = 0;
    for (const auto &name : builtins()) {
        rsym::CatalogEntry entry = rsym::load(name);
        const auto &data = *entry.modular;
        rsym::FusionTensor n = rsym::verlinde(data);
        const size_t rank = entry.rank();
        for (size_t a = 0; a < rank; a++) {
            for (size_t b = 0; b < rank; b++) {
                for (size_t c = 0; c < rank; c++) {
                    triples++;
                    std::string where = name + " (a,b,c)=(" + entry.labels[a].name + "," + entry.labels[b].name +
                                        "," + entry.labels[c].name + ")";
                    cd y = rsym::evaluate_Y(data, n, a, b, c);
                    double k = std::round(y.real());
                    if (std::abs(y - cd(k, 0)) > kEpsInt) {
                        out.fail(where + ": Y = " + fmt(y) + " is not an integer");
                        continue;
                    }
                    long long yi = static_cast<long long>(k);
                    long long td = 0;
                    for (size_t e = 0; e < rank; e++) {
                        td += static_cast<long long>(n(a, a, e)) * n(e, b, c);
                    }
                    if (td + yi < 0 || td - yi < 0) {
                        out.fail(where + ": |Y| exceeds triple_dim");
                    } else if ((td + yi) % 2 != 0) {
                        out.fail(where + ": triple_dim +- Y is odd");
                    }
                }
            }
        }
        for (size_t c = 0; c < rank; c++) {
            cd root = canonical_sqrt(entry.twists[c].numerator(), entry.twists[c].denominator());
            for (size_t a = 0; a < rank; a++) {
                cd lhs = rsym::evaluate_Y(data, n, a, 0, c) * root;
                cd nu = rsym::evaluate_nu_modular(data, n, c, a);
                if (std::abs(lhs - nu) > kEpsMatrix) {
                    out.fail(name + ": Y^c_{a,1} sqrt(theta_c) != nu at (c,a)=(" + entry.labels[c].name + "," +
                             entry.labels[a].name + ")");
                }
            }
        }
    }
    out.summary = std::to_string(triples) + " triples";
    return out;
}

cd phase_json(const json &p) {
    return root_of_unity(p[0].get<double>() / p[1].get<double>());
}

std::vector<cd> sorted_values(std::vector<cd> v) {
    std::sort(v.begin(), v.end(), [](cd x, cd y) {
        auto rx = std::round(x.real() * 1e6), ry = std::round(y.real() * 1e6);
        return rx != ry ? rx < ry : x.imag() < y.imag();
    });
    return v;
}

bool same_values(const std::vector<cd> &x, const std::vector<cd> &y) {
    if (x.size() != y.size()) {
        return false;
    }
    auto sx = sorted_values(x), sy = sorted_values(y);
    for (size_t i = 0; i < sx.size(); i++) {
        if (std::abs(sx[i] - sy[i]) > kEpsMatrix) {
            return false;
        }
    }
    return true;
}

// Structural diff of `rsymbols --format json` with and without --sqrt-flip c.
// At label c the branch changes sign, so (d+, d-) swap and the signed
// diagonal Delta = diag * theta_a / sqrt(theta_c) is negated. The product
// diag itself is branch independent; everything away from c is untouched.
std::string branch_diff(const json &base, const json &flipped, size_t c) {
    const json &sb = base.at("sqrt_branch");
    const json &sf = flipped.at("sqrt_branch");
    for (size_t x = 0; x < sb.size(); x++) {
        cd ratio = phase_json(sf[x]) / phase_json(sb[x]);
        cd expected = x == c ? cd(-1, 0) : cd(1, 0);
        if (std::abs(ratio - expected) > kEpsMatrix) {
            return "sqrt_branch[" + std::to_string(x) + "] changed incorrectly";
        }
    }
    std::map<std::array<int, 3>, json> fb;
    for (const auto &b : flipped.at("blocks")) {
        fb[{b["a"].get<int>(), b["b"].get<int>(), b["c"].get<int>()}] = b;
    }
    if (fb.size() != base.at("blocks").size()) {
        return "block sets differ";
    }
    for (const auto &b : base.at("blocks")) {
        std::array<int, 3> key{b["a"].get<int>(), b["b"].get<int>(), b["c"].get<int>()};
        auto it = fb.find(key);
        std::string where = "block (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                            std::to_string(key[2]) + ")";
        if (it == fb.end()) {
            return where + " missing after the flip";
        }
        const json &f = it->second;
        if (b["case"] != "diag" || static_cast<size_t>(key[2]) != c) {
            if (b != f) {
                return where + " changed";
            }
            continue;
        }
        if (f["case"] != "diag" || f["d_plus"] != b["d_minus"] || f["d_minus"] != b["d_plus"]) {
            return where + ": (d+, d-) not swapped";
        }
        cd root_b = phase_json(sb[c]), root_f = phase_json(sf[c]);
        std::vector<cd> delta_b, delta_f, diag_b, diag_f;
        for (const auto &z : b["diag"]) {
            diag_b.emplace_back(z[0].get<double>(), z[1].get<double>());
            delta_b.push_back(-diag_b.back() / root_b);
        }
        for (const auto &z : f["diag"]) {
            diag_f.emplace_back(z[0].get<double>(), z[1].get<double>());
            delta_f.push_back(diag_f.back() / root_f);
        }
        if (!same_values(delta_b, delta_f)) {
            return where + ": signed diagonal not negated";
        }
        if (!same_values(diag_b, diag_f)) {
            return where + ": R eigenvalues depend on the branch";
        }
    }
    return {};
}

Outcome branch_covariance() {
    Outcome out;
    size_t runs = 0;
    for (const auto &name : builtins()) {
        Process base = run_cli("rsymbols " + name + " --format json", false);
        if (base.status != 0) {
            out.fail(name + ": rsymbols exited " + std::to_string(base.status));
            continue;
        }
        json base_doc = json::parse(base.output);
        const auto &labels = base_doc.at("labels");
        for (size_t c = 0; c < labels.size(); c++) {
            runs++;
            std::string label = labels[c].get<std::string>();
            Process flipped = run_cli("rsymbols " + name + " --format json --sqrt-flip '" + label + "'", false);
            if (flipped.status != 0) {
                out.fail(name + " --sqrt-flip " + label + ": exited " + std::to_string(flipped.status));
                continue;
            }
            std::string diff = branch_diff(base_doc, json::parse(flipped.output), c);
            if (!diff.empty()) {
                out.fail(name + " --sqrt-flip " + label + ": " + diff);
            }
        }
    }
    out.summary = std::to_string(runs) + " flipped runs";
    return out;
}

Outcome center_cross_check() {
    Outcome out;
    rsym::CatalogEntry entry = rsym::load(data_file("semion_center.json"));
    if (!entry.center || entry.center->modular.rank() != 4) {
        out.fail("semion_center.json lacks 4-object center data");
        return out;
    }
    rsym::FusionTensor n = rsym::verlinde(*entry.modular);
    rsym::PremodularData base{entry.labels, n, entry.twists, std::nullopt};
    double worst = 0;
    for (size_t c = 0; c < entry.rank(); c++) {
        for (size_t a = 0; a < entry.rank(); a++) {
            cd modular = rsym::evaluate_nu_modular(*entry.modular, n, c, a);
            cd center = rsym::evaluate_nu_center(*entry.center, c, a);
            worst = std::max(worst, std::abs(modular - center));
        }
    }
    if (!(worst < kEpsMatrix)) {
        out.fail("max |nu_center - nu_modular| = " + std::to_string(worst));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max difference %.2e", worst);
    out.summary = buf;
    return out;
}

bool names_semion_pair(const Process &p) {
    bool kind = p.output.find("ParityViolation") != std::string::npos ||
                p.output.find("NonIntegerCertificate") != std::string::npos;
    return p.status == 2 && kind && p.output.find("(a,c)=(s,1)") != std::string::npos;
}

Outcome corrupted_semion() {
    Outcome out;
    json doc = json::parse(*rsym::builtin_source("semion"));
    doc["name"] = "semion_corrupted";
    doc["t_phases"][1] = {1, 3};
    doc.erase("r_table");
    auto path = std::filesystem::temp_directory_path() / "rsym_acceptance_semion_corrupted.json";
    std::ofstream(path) << doc.dump(2);

    Process mutated = run_cli("rsymbols '" + path.string() + "'", true);
    std::filesystem::remove(path);
    if (!names_semion_pair(mutated)) {
        out.fail("mutated builtin: exit " + std::to_string(mutated.status) + ", output: " + mutated.output);
    }
    Process shipped = run_cli("rsymbols '" + data_file("semion_corrupted.json") + "'", true);
    if (!names_semion_pair(shipped)) {
        out.fail("data/semion_corrupted.json: exit " + std::to_string(shipped.status) + ", output: " + shipped.output);
    }
    std::string diag = mutated.output;
    while (!diag.empty() && diag.back() == '\n') {
        diag.pop_back();
    }
    out.summary = "exit " + std::to_string(mutated.status) + ": " + diag;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char *title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"Verlinde fusion equals the pinned tensors", verlinde_matches_pinned},
        {"indicator certificate: integer, bounded, parity", indicator_certificates},
        {"trace relation Tr R = nu / theta_a", trace_relation},
        {"known R-values against a brute-force oracle", known_r_values},
        {"Y certificates and Y^c_{a,1} sqrt(theta_c) = nu", y_certificates},
        {"branch covariance under --sqrt-flip", branch_covariance},
        {"semion center: nu_center = nu_modular", center_cross_check},
        {"corrupted semion twist exits 2 naming (s,1)", corrupted_semion},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %zu. %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, o.summary.c_str());
        if (!o.ok) {
            std::printf("     first failure: %s\n", o.first_failure.c_str());
            failures++;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
