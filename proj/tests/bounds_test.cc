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

#include "qdsc/bounds.h"

#include "gtest/gtest.h"
#include "qdsc/errors.h"

using namespace qdsc;

namespace {

// Pascal's triangle in exact arithmetic.
std::vector<std::vector<BigInt>> pascal(std::size_t rows) {
    std::vector<std::vector<BigInt>> t(rows + 1);
    for (std::size_t n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (std::size_t r = 1; r < n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
    }
    return t;
}

BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

BigInt pow3(std::uint64_t e) {
    BigInt out = 1;
    for (std::uint64_t i = 0; i < e; ++i) out *= 3;
    return out;
}

}  // namespace

TEST(bounds, binomial_matches_pascal) {
    auto t = pascal(200);
    for (std::uint64_t n = 0; n <= 200; n += 7)
        for (std::uint64_t r = 0; r <= n; ++r) ASSERT_EQ(binomial(n, r), t[n][r]) << n << " " << r;
    EXPECT_EQ(binomial(5, 7), 0);
}

TEST(bounds, ceil_log2) {
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(16), 4u);
    EXPECT_EQ(ceil_log2(17), 5u);
    EXPECT_EQ(ceil_log2(pow2(300) + 1), 301u);
}

TEST(bounds, qds_hamming_volume_is_double_sum) {
    auto t = pascal(80);
    for (std::uint64_t n = 3; n <= 40; ++n) {
        for (std::uint64_t d : {3, 5, 7}) {
            for (std::uint64_t l : {0, 1, 3}) {
                CodeParams p{n, 1, d, l};
                BigInt expected = 0;
                for (std::uint64_t i = 0; i <= p.t(); ++i)
                    for (std::uint64_t j = 0; i + j <= p.t(); ++j)
                        if (j <= p.m() + l) expected += t[n][i] * pow3(i) * t[p.m() + l][j];
                ASSERT_EQ(qds_hamming_volume(p), expected) << n << " " << d << " " << l;
                ASSERT_EQ(qds_hamming(p), expected <= pow2(p.m()));
            }
        }
    }
    EXPECT_THROW(qds_hamming(CodeParams{10, 1, 4, 0}), PreconditionError);
    EXPECT_THROW(qds_hamming(CodeParams{10, 10, 3, 0}), PreconditionError);
}

// At d = 3, l = 0 the sum is 1 + 3n + m = 4n - k + 1.
TEST(bounds, distance_three_reductions_sweep) {
    for (std::uint64_t n = 2; n <= 512; ++n) {
        for (std::uint64_t k = 0; k < n; ++k) {
            BigInt cap = pow2(n - k);
            ASSERT_EQ(qds_hamming_d3(n, k), BigInt(4 * n - k + 1) <= cap);
            ASSERT_EQ(qds_hamming(CodeParams{n, k, 3, 0}), qds_hamming_d3(n, k));
            ASSERT_EQ(impure_bound(n, k), BigInt(4 * n - k + 1) <= cap);
            ASSERT_EQ(quantum_hamming(n, k), BigInt(3 * n + 1) <= cap);
            ASSERT_EQ(conjectured_bound(n, k), n >= 2 && k + 1 <= n && BigInt(3 * (n - 2) + 1) <= pow2(n - 1 - k));
            ASSERT_EQ(singleton_d3(n, k), k + 4 <= n);
        }
    }
}

TEST(bounds, known_parameter_verdicts) {
    EXPECT_FALSE(qds_hamming_d3(5, 1));
    EXPECT_TRUE(qds_hamming_d3(6, 1));
    EXPECT_TRUE(qds_hamming_d3(7, 1));
    EXPECT_TRUE(qds_hamming_d3(8, 3));
    EXPECT_FALSE(impure_bound(21, 15));
    EXPECT_TRUE(impure_bound(22, 15));
    EXPECT_TRUE(conjectured_bound(22, 15));
    EXPECT_TRUE(quantum_hamming(21, 15));
}

TEST(bounds, families) {
    EXPECT_EQ(f_a(2), 5u);
    EXPECT_EQ(f_a(3), 21u);
    auto entries = pure_only_families(3);
    auto has = [&](int family, std::uint64_t n, std::uint64_t k) {
        for (const auto& e : entries)
            if (e.family == family && e.n == n && e.k == k) return true;
        return false;
    };
    EXPECT_TRUE(has(2, 5, 1));
    EXPECT_TRUE(has(2, 21, 15));
    EXPECT_TRUE(has(3, 168, 159));
    EXPECT_THROW(pure_only_families(1), PreconditionError);
    EXPECT_THROW(pure_only_families(kMaxFamilyA + 1), CapacityError);
}

// Irregular ell index sets: family 2 skips 1..3, family 3 skips 1.
TEST(bounds, family_ell_sets) {
    for (const auto& e : pure_only_families(20)) {
        if (e.family == 2) {
            EXPECT_TRUE(e.ell == 0 || e.ell >= 4);
            EXPECT_LT(3 * e.ell, 2 * e.a);
            EXPECT_EQ(e.n, f_a(e.a) - e.ell);
        } else {
            ASSERT_EQ(e.family, 3);
            EXPECT_TRUE(e.ell == 0 || e.ell >= 2);
            EXPECT_LT(3 * e.ell + 4, 2 * e.a);
            EXPECT_EQ(e.n, 8 * f_a(e.a) - e.ell);
        }
        EXPECT_EQ(e.k, e.n - ceil_log2(3 * e.n + 1));
    }
}

TEST(bounds, families_are_pure_only) {
    for (const auto& e : pure_only_families(kMaxFamilyA)) {
        EXPECT_TRUE(quantum_hamming(e.n, e.k)) << e.n << " " << e.k;
        EXPECT_FALSE(impure_bound(e.n, e.k)) << e.n << " " << e.k;
    }
}

TEST(bounds, region_table_envelopes) {
    // Integer envelopes of the distance-3 curves for n = 19..26.
    const std::int64_t singleton[] = {15, 16, 17, 18, 19, 20, 21, 22};
    const std::int64_t hamming[] = {13, 14, 15, 15, 16, 17, 18, 19};
    const std::int64_t impure[] = {13, 13, 14, 15, 16, 17, 18, 19};
    const std::int64_t conjecture[] = {12, 13, 14, 15, 16, 16, 17, 18};
    auto rows = region_table(19, 26);
    ASSERT_EQ(rows.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(rows[i].n, 19 + i);
        EXPECT_EQ(rows[i].singleton_k, singleton[i]);
        EXPECT_EQ(rows[i].hamming_k, hamming[i]);
        EXPECT_EQ(rows[i].impure_k, impure[i]);
        EXPECT_EQ(rows[i].conjecture_k, conjecture[i]);
    }
    auto small = region_table(2, 3);
    EXPECT_EQ(small[0].singleton_k, -1);
    EXPECT_EQ(small[0].hamming_k, -1);
}

TEST(bounds, region_table_is_maximal) {
    for (const auto& row : region_table(4, 200)) {
        auto check = [&](std::int64_t k, auto&& bound) {
            if (k >= 0) {
                EXPECT_TRUE(bound(row.n, static_cast<std::uint64_t>(k)));
            }
            if (static_cast<std::uint64_t>(k + 1) < row.n) {
                EXPECT_FALSE(bound(row.n, static_cast<std::uint64_t>(k + 1)));
            }
        };
        check(row.singleton_k, singleton_d3);
        check(row.hamming_k, quantum_hamming);
        check(row.impure_k, impure_bound);
        check(row.conjecture_k, conjectured_bound);
    }
}
