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

#include "fusion.hpp"
#include "support.hpp"

using namespace rsym;
using namespace rsym::testing;

TEST_CASE("Fibonacci fusion", "[fusion]") {
    CatalogEntry fib = load("fibonacci");
    FusionTensor n = verlinde(*fib.modular);
    CHECK(n(1, 1, 0) == 1);
    CHECK(n(1, 1, 1) == 1);
    CHECK(n(0, 1, 1) == 1);
    CHECK(n(0, 1, 0) == 0);
    CHECK(n.provenance() == FusionProvenance::FromVerlinde);
}

TEST_CASE("toric code is Z2 x Z2", "[fusion]") {
    CatalogEntry tc = load("toric_code");
    FusionTensor n = verlinde(*tc.modular);
    std::size_t e = label(tc, "e"), m = label(tc, "m"), f = label(tc, "f");
    for (std::size_t c = 0; c < 4; c++) {
        CHECK(n(e, m, c) == (c == f ? 1 : 0));
    }
}

TEST_CASE("unit row, invariants and duals on every builtin", "[fusion]") {
    for (const auto &name : modular_builtins()) {
        INFO(name);
        CatalogEntry entry = load(name);
        FusionTensor n = verlinde(*entry.modular);
        CHECK(n.same_entries(*entry.fusion));
        for (std::size_t b = 0; b < entry.rank(); b++) {
            for (std::size_t c = 0; c < entry.rank(); c++) {
                CHECK(n(0, b, c) == (b == c ? 1 : 0));
            }
        }
        CHECK(unit_violations(n) == 0);
        CHECK(associativity_violations(n) == 0);
        CHECK(commutativity_violations(n) == 0);
        CHECK(negativity_violations(n) == 0);
        CHECK(frobenius_reciprocity_violations(n, entry.modular->dual()) == 0);
        for (std::size_t a = 0; a < entry.rank(); a++) {
            CHECK(n(a, a, 0) == (dual_of(*entry.modular, a) == a ? 1 : 0));
        }
        auto duals = fusion_duals(n);
        REQUIRE(duals);
        CHECK(*duals == entry.modular->dual());
    }
}

TEST_CASE("triple_dim", "[fusion]") {
    CatalogEntry fib = load("fibonacci");
    FusionTensor nf = verlinde(*fib.modular);
    CHECK(triple_dim(nf, 1, 1, 0) == 1);
    CHECK(triple_dim(nf, 0, 0, 0) == 1);
    CatalogEntry ising = load("ising");
    FusionTensor ni = verlinde(*ising.modular);
    std::size_t sigma = label(ising, "sigma");
    CHECK(triple_dim(ni, sigma, sigma, sigma) == 2);
}

TEST_CASE("non-integral Verlinde output is rejected", "[fusion]") {
    const double c = std::cos(0.3), s = std::sin(0.3);
    ComplexMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -c;
    auto data = ModularData::create({"1", "x"}, m, SConvention::Unitary, {ExactPhase(), ExactPhase()});
    try {
        verlinde(data);
        FAIL("expected NonIntegerFusion");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NonIntegerFusion);
        CHECK(std::string(e.what()).find("(a,b,c)=") != std::string::npos);
    }
}
