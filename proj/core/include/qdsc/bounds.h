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

#ifndef QDSC_BOUNDS_H
#define QDSC_BOUNDS_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdsc {

// Every check below is evaluated in exact integer arithmetic.

using BigInt = boost::multiprecision::cpp_int;

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 3;
    std::uint64_t l = 0;

    std::uint64_t m() const { return n - k; }
    std::uint64_t t() const { return (d - 1) / 2; }
};

/// Smallest e with 2^e >= x, for x >= 1.
std::uint64_t ceil_log2(const BigInt& x);
BigInt binomial(std::uint64_t n, std::uint64_t r);

/// sum_{i<=t} C(n,i) 3^i sum_{j<=t-i} C(m+l, j) <= 2^m with m = n - k.
/// Throws PreconditionError for even d or k >= n.
bool qds_hamming(const CodeParams& params);
/// Left side of qds_hamming.
BigInt qds_hamming_volume(const CodeParams& params);

/// 4n - k + 1 <= 2^(n-k).
bool qds_hamming_d3(std::uint64_t n, std::uint64_t k);
/// n - k >= ceil(log2(3n + 1)).
bool quantum_hamming(std::uint64_t n, std::uint64_t k);
/// Bound for impure distance-3 codes: 4n - k + 1 <= 2^(n-k).
bool impure_bound(std::uint64_t n, std::uint64_t k);
/// Conjectured bound for impure distance-3 codes: 3(n-2) + 1 <= 2^(n-1-k).
bool conjectured_bound(std::uint64_t n, std::uint64_t k);
/// Quantum Singleton bound at d = 3: k <= n - 4.
bool singleton_d3(std::uint64_t n, std::uint64_t k);

/// Member of a parameter family where pure distance-3 codes can exist but
/// impure ones cannot.
struct FamilyEntry {
    int family = 0;  // 2: n = f_a - ell; 3: n = 8 f_a - ell
    std::uint64_t a = 0;
    std::uint64_t ell = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
};

/// f_a = (4^a - 1) / 3.
std::uint64_t f_a(std::uint64_t a);

/// Enumerates both families for a <= a_max, in order of family, a, ell:
///   n = f_a - ell,   ell in {0, 4, 5, 6, ...}, 3 ell < 2a,     a >= 2
///   n = 8 f_a - ell, ell in {0, 2, 3, 4, ...}, 3 ell < 2a - 4, a >= 1
/// with k = n - ceil(log2(3n + 1)). Requires 2 <= a_max <= kMaxFamilyA.
inline constexpr std::uint64_t kMaxFamilyA = 30;
std::vector<FamilyEntry> pure_only_families(std::uint64_t a_max);

/// Largest k >= 0 admitted by each bound at distance 3, or -1 when none is.
struct RegionRow {
    std::uint64_t n = 0;
    std::int64_t singleton_k = -1;
    std::int64_t hamming_k = -1;
    std::int64_t impure_k = -1;
    std::int64_t conjecture_k = -1;
};

std::vector<RegionRow> region_table(std::uint64_t n_first, std::uint64_t n_last);

}  // namespace qdsc

#endif
