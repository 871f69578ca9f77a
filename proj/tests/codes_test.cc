// Copyright 2026 The qdsc Authors
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

#include "qdsc/codes.h"

#include <random>

#include "gtest/gtest.h"
#include "qdsc/catalog.h"
#include "qdsc/errors.h"
#include "test_util.h"

using namespace qdsc;
namespace t = qdsc::testing;

namespace {

std::vector<F4Vector> paulis(std::initializer_list<const char*> rows) {
    std::vector<F4Vector> out;
    for (const char* r : rows) out.push_back(F4Vector::from_pauli(r));
    return out;
}

struct Expected {
    const char* name;
    std::size_t n, k, r, d;
};

}  // namespace

TEST(codes, make_stabilizer_validates) {
    EXPECT_THROW(make_stabilizer({}), DimensionError);
    EXPECT_THROW(make_stabilizer(paulis({"XX", "ZZZ"})), DimensionError);
    EXPECT_THROW(make_stabilizer(paulis({"XI", "ZI"})), CommutationError);
    EXPECT_THROW(make_stabilizer(paulis({"XX", "ZZ", "YY"})), RankError);
    auto code = make_stabilizer(paulis({"XX", "ZZ"}));
    EXPECT_EQ(code.n(), 2u);
    EXPECT_EQ(code.k(), 0u);
}

TEST(codes, catalog_parameters) {
    const Expected expected[] = {
        {"five-qubit", 5, 1, 0, 3}, {"steane", 7, 1, 0, 3},        {"shor", 9, 1, 0, 3},
        {"example-6-1-3", 6, 1, 0, 3}, {"example-6-1-3-qds", 6, 1, 0, 3}, {"8-3-3", 8, 3, 0, 3},
        {"bacon-shor", 9, 1, 4, 3},
    };
    for (const auto& e : expected) {
        SCOPED_TRACE(e.name);
        auto code = catalog(e.name);
        EXPECT_EQ(code_length(code), e.n);
        std::visit(
            [&](const auto& c) {
                EXPECT_EQ(c.k(), e.k);
                if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SubsystemCode>) {
                    EXPECT_EQ(c.r(), e.r);
                }
            },
            code);
        EXPECT_EQ(min_distance(code), e.d);
    }
    EXPECT_THROW(catalog("no-such-code"), LookupError);
}

// Brute force over all of F4^n: C^perp \ C for stabilizer codes, C^perp \ D
// for subsystem codes.
TEST(codes, distance_matches_brute_force) {
    for (const auto& entry : catalog_entries()) {
        SCOPED_TRACE(entry.name);
        auto code = catalog(entry.name);
        std::size_t n = code_length(code);
        auto measured = t::symbols_of(measured_rows(code));
        std::vector<t::Symbols> excluded_rows;
        if (auto* sub = std::get_if<SubsystemCode>(&code)) {
            excluded_rows = t::symbols_of(sub->gauge().rows());
        } else {
            excluded_rows = measured;
        }
        auto excluded = t::span_of(excluded_rows, n);
        EXPECT_EQ(min_distance(code), t::brute_distance(measured, excluded, n));
    }
}

TEST(codes, subsystem_center_is_gauge_intersect_dual) {
    auto code = std::get<SubsystemCode>(catalog("bacon-shor"));
    EXPECT_EQ(code.m(), 8u);
    EXPECT_EQ(code.stabilizer().dimension(), 4u);
    EXPECT_EQ(code.gauge().dimension(), 12u);
    // D cap D^perp by brute force over the gauge span.
    auto gauge_rows = t::symbols_of(code.gauge().rows());
    auto gauge = t::span_of(gauge_rows, 9);
    std::set<t::Symbols> center;
    for (const auto& g : gauge) {
        bool central = true;
        for (const auto& r : gauge_rows) central = central && !t::anticommutes(g, r);
        if (central) center.insert(g);
    }
    EXPECT_EQ(center, t::span_of(t::symbols_of(code.stabilizer_rows()), 9));
}

TEST(codes, purity) {
    EXPECT_TRUE(is_impure(catalog_stabilizer("example-6-1-3"), 3));
    EXPECT_TRUE(is_impure(catalog_stabilizer("shor"), 3));
    EXPECT_FALSE(is_impure(catalog_stabilizer("five-qubit"), 3));
    EXPECT_FALSE(is_impure(catalog_stabilizer("steane"), 3));
    EXPECT_FALSE(is_impure(catalog_stabilizer("8-3-3"), 3));
}

TEST(codes, purity_paths_agree_with_span_oracle) {
    for (const char* name : {"five-qubit", "steane", "shor", "example-6-1-3", "8-3-3"}) {
        auto code = catalog_stabilizer(name);
        auto span = t::span_of(t::symbols_of(code.rows()), code.n());
        for (std::size_t d = 2; d <= 4; ++d) {
            bool oracle = false;
            for (const auto& s : span) oracle = oracle || (t::weight(s) > 0 && t::weight(s) < d);
            EXPECT_EQ(detail::is_impure_by_span(code, d), oracle) << name << " d=" << d;
            EXPECT_EQ(detail::is_impure_by_enumeration(code, d), oracle) << name << " d=" << d;
        }
    }
}

TEST(codes, low_weight_stabilizers_order) {
    auto code = catalog_stabilizer("example-6-1-3");
    auto low = low_weight_stabilizers(code, 2);
    ASSERT_EQ(low.size(), 1u);
    EXPECT_EQ(low[0].to_pauli(), "IIIZIZ");
    auto shor = low_weight_stabilizers(catalog_stabilizer("shor"), 2);
    ASSERT_EQ(shor.size(), 9u);
    EXPECT_EQ(shor.front().to_pauli(), "ZZIIIIIII");
    for (std::size_t i = 1; i < shor.size(); ++i) EXPECT_LE(shor[i - 1].weight(), shor[i].weight());
}

TEST(codes, additive_code_elements) {
    AdditiveCode code(3, paulis({"XXI", "IZZ", "YII"}));
    auto elems = code.elements();
    EXPECT_EQ(elems.size(), 8u);
    EXPECT_TRUE(elems.front().is_zero());
    std::set<std::string> seen;
    for (const auto& e : elems) seen.insert(e.to_pauli());
    EXPECT_EQ(seen.size(), 8u);
    EXPECT_TRUE(code.contains(F4Vector::from_pauli("ZXI")));
    EXPECT_FALSE(code.contains(F4Vector::from_pauli("ZII")));
}

TEST(codes, capacity_limits) {
    EnumerationLimits tight{8, 5};
    EXPECT_THROW(min_distance(catalog("shor"), tight), CapacityError);
    EnumerationLimits shallow{16, 2};
    EXPECT_THROW(min_distance(catalog("steane"), shallow), CapacityError);
}

// Random local Clifford-free equivalences (permutations) keep the distance.
TEST(codes, distance_invariant_under_permutation) {
    std::mt19937_64 rng(3);
    auto base = catalog_stabilizer("example-6-1-3");
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> sigma{0, 1, 2, 3, 4, 5};
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<F4Vector> rows;
        for (const auto& r : base.rows()) {
            F4Vector p(6);
            for (std::size_t j = 0; j < 6; ++j) p.set(sigma[j], r[j]);
            rows.push_back(p);
        }
        auto code = make_stabilizer(rows);
        EXPECT_EQ(min_distance(code), 3u);
        EXPECT_TRUE(is_impure(code, 3));
    }
}
