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

// Brute-force reference implementations shared by the tests. They work on
// plain symbol arrays (0 = I, 1 = X, 2 = Z, 3 = Y) and never call into the
// library's own arithmetic, so they can serve as oracles for it.

#ifndef QDSC_TESTS_TEST_UTIL_H
#define QDSC_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qdsc/gf4.h"

namespace qdsc::testing {

using Symbols = std::vector<int>;

inline Symbols symbols_of(const std::string& pauli) {
    Symbols out;
    for (char c : pauli) {
        out.push_back(c == 'I' ? 0 : c == 'X' ? 1 : c == 'Z' ? 2 : 3);
    }
    return out;
}

inline Symbols symbols_of(const F4Vector& v) { return symbols_of(v.to_pauli()); }

inline F4Vector to_vector(const Symbols& s) {
    std::string text;
    for (int c : s) {
        text.push_back("IXZY"[c]);
    }
    return F4Vector::from_pauli(text);
}

// Two single-qubit Paulis anticommute iff both are non-identity and differ.
inline int anticommutes(const Symbols& a, const Symbols& b) {
    int parity = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        parity ^= (a[i] != 0 && b[i] != 0 && a[i] != b[i]) ? 1 : 0;
    }
    return parity;
}

inline std::size_t weight(const Symbols& a) {
    return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](int c) { return c != 0; }));
}

inline Symbols add(Symbols a, const Symbols& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] ^= b[i];
    }
    return a;
}

// Every element of F4^n, as symbol arrays.
inline std::vector<Symbols> all_vectors(std::size_t n) {
    std::vector<Symbols> out;
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Symbols s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = static_cast<int>((idx >> (2 * i)) & 3);
        }
        out.push_back(s);
    }
    return out;
}

// F2-span of the rows by enumerating all 2^rows combinations.
inline std::set<Symbols> span_of(const std::vector<Symbols>& rows, std::size_t n) {
    std::set<Symbols> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
        Symbols acc(n, 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((mask >> i) & 1) {
                acc = add(acc, rows[i]);
            }
        }
        out.insert(acc);
    }
    return out;
}

inline std::vector<Symbols> symbols_of(std::span<const F4Vector> rows) {
    std::vector<Symbols> out;
    for (const auto& r : rows) {
        out.push_back(symbols_of(r));
    }
    return out;
}

// min weight of {e : e commutes with every row of `dual_of`} minus `excluded`.
inline std::size_t brute_distance(const std::vector<Symbols>& dual_of, const std::set<Symbols>& excluded,
                                  std::size_t n) {
    std::size_t best = n + 1;
    for (const auto& e : all_vectors(n)) {
        bool in_dual = std::all_of(dual_of.begin(), dual_of.end(), [&](const Symbols& g) { return !anticommutes(g, e); });
        if (in_dual && !excluded.count(e)) {
            best = std::min(best, weight(e));
        }
    }
    return best;
}

}  // namespace qdsc::testing

#endif
