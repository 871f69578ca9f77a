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

#include <algorithm>
#include <functional>

#include "qdsc/errors.h"

namespace qdsc {

namespace {

BigInt pow2(std::uint64_t e) {
    BigInt out = 1;
    out <<= static_cast<unsigned>(e);
    return out;
}

// Largest k in [0, n] with pred(n, k), scanning down; -1 if none.
std::int64_t max_k(std::uint64_t n, const std::function<bool(std::uint64_t, std::uint64_t)>& pred) {
    for (std::uint64_t k = n + 1; k-- > 0;) {
        if (pred(n, k)) {
            return static_cast<std::int64_t>(k);
        }
    }
    return -1;
}

}  // namespace

std::uint64_t ceil_log2(const BigInt& x) {
    if (x < 1) {
        throw PreconditionError("ceil_log2 needs x >= 1");
    }
    std::uint64_t e = 0;
    BigInt p = 1;
    while (p < x) {
        p <<= 1;
        ++e;
    }
    return e;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

BigInt qds_hamming_volume(const CodeParams& p) {
    if (p.d == 0 || p.d % 2 == 0) {
        throw PreconditionError("QDS Hamming bound needs odd d, got " + std::to_string(p.d));
    }
    if (p.k >= p.n) {
        throw PreconditionError("QDS Hamming bound needs k < n");
    }
    std::uint64_t t = p.t();
    std::uint64_t measured = p.m() + p.l;
    BigInt total = 0;
    BigInt three_i = 1;
    for (std::uint64_t i = 0; i <= t; ++i) {
        BigInt inner = 0;
        for (std::uint64_t j = 0; j + i <= t; ++j) {
            inner += binomial(measured, j);
        }
        total += binomial(p.n, i) * three_i * inner;
        three_i *= 3;
    }
    return total;
}

bool qds_hamming(const CodeParams& params) {
    return qds_hamming_volume(params) <= pow2(params.m());
}

bool qds_hamming_d3(std::uint64_t n, std::uint64_t k) {
    if (k >= n) return false;
    return qds_hamming({n, k, 3, 0});
}

bool quantum_hamming(std::uint64_t n, std::uint64_t k) {
    if (k > n) return false;
    return n - k >= ceil_log2(BigInt(3) * n + 1);
}

bool impure_bound(std::uint64_t n, std::uint64_t k) {
    if (k > n) return false;
    return BigInt(4) * n - k + 1 <= pow2(n - k);
}

bool conjectured_bound(std::uint64_t n, std::uint64_t k) {
    if (n < 2 || k + 1 > n) return false;
    return BigInt(3) * (n - 2) + 1 <= pow2(n - 1 - k);
}

bool singleton_d3(std::uint64_t n, std::uint64_t k) { return k + 4 <= n; }

std::uint64_t f_a(std::uint64_t a) {
    if (a > 31) {
        throw CapacityError("f_a limited to a <= 31");
    }
    return ((std::uint64_t{1} << (2 * a)) - 1) / 3;
}

std::vector<FamilyEntry> pure_only_families(std::uint64_t a_max) {
    if (a_max < 2) {
        throw PreconditionError("pure_only_families needs a_max >= 2");
    }
    if (a_max > kMaxFamilyA) {
        throw CapacityError("pure_only_families limited to a_max <= " + std::to_string(kMaxFamilyA));
    }
    std::vector<FamilyEntry> out;
    auto emit = [&](int family, std::uint64_t a, std::uint64_t ell, std::uint64_t n) {
        std::uint64_t r = ceil_log2(BigInt(3) * n + 1);
        if (r >= n) return;
        out.push_back({family, a, ell, n, n - r});
    };
    // Index sets skip 1..3 (family 2) and 1 (family 3).
    for (std::uint64_t a = 2; a <= a_max; ++a) {
        for (std::uint64_t ell = 0; 3 * ell < 2 * a; ell = ell == 0 ? 4 : ell + 1) {
            emit(2, a, ell, f_a(a) - ell);
        }
    }
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        for (std::uint64_t ell = 0; 3 * ell + 4 < 2 * a; ell = ell == 0 ? 2 : ell + 1) {
            emit(3, a, ell, 8 * f_a(a) - ell);
        }
    }
    return out;
}

std::vector<RegionRow> region_table(std::uint64_t n_first, std::uint64_t n_last) {
    std::vector<RegionRow> out;
    for (std::uint64_t n = n_first; n <= n_last; ++n) {
        RegionRow row;
        row.n = n;
        row.singleton_k = max_k(n, singleton_d3);
        row.hamming_k = max_k(n, quantum_hamming);
        row.impure_k = max_k(n, impure_bound);
        row.conjecture_k = max_k(n, conjectured_bound);
        out.push_back(row);
    }
    return out;
}

}  // namespace qdsc
