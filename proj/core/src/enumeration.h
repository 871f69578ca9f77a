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

#ifndef QDSC_SRC_ENUMERATION_H
#define QDSC_SRC_ENUMERATION_H

// Low-weight error enumeration shared by the distance and construction code.
//
// Errors of weight w are visited with supports in lexicographic order and,
// within a support, symbols ordered 1 < w < w^2 with the first coordinate
// varying slowest. Syndromes are linear, so each error's syndrome is the XOR
// of precomputed single-symbol syndromes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qdsc/errors.h"
#include "qdsc/gf4.h"

namespace qdsc::detail {

constexpr std::array<F4, 3> kNonzeroSymbols{F4::one(), F4::omega(), F4::omega2()};

/// Syndrome masks of every single-symbol error against up to 64 rows.
struct SymbolSyndromes {
    std::size_t n = 0;
    std::size_t num_rows = 0;
    // masks[j][s]: syndrome of kNonzeroSymbols[s] at coordinate j.
    std::vector<std::array<std::uint64_t, 3>> masks;
};

inline SymbolSyndromes symbol_syndromes(std::span<const F4Vector> rows, std::size_t n) {
    if (rows.size() > 64) {
        throw CapacityError("syndrome enumeration supports at most 64 measured rows, got " +
                            std::to_string(rows.size()));
    }
    SymbolSyndromes out{n, rows.size(), std::vector<std::array<std::uint64_t, 3>>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t s = 0; s < 3; ++s) {
            F4Vector e = F4Vector::unit(n, j, kNonzeroSymbols[s]);
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (trace_inner_product(rows[i], e)) {
                    mask |= std::uint64_t{1} << i;
                }
            }
            out.masks[j][s] = mask;
        }
    }
    return out;
}

/// A visited error: support positions, symbol indices into kNonzeroSymbols.
struct ErrorView {
    std::span<const std::size_t> positions;
    std::span<const std::uint8_t> symbols;

    F4Vector materialize(std::size_t n) const {
        F4Vector e(n);
        for (std::size_t t = 0; t < positions.size(); ++t) {
            e.set(positions[t], kNonzeroSymbols[symbols[t]]);
        }
        return e;
    }
};

/// Calls fn(ErrorView, syndrome_mask) for every error of exactly `weight`.
/// fn returns false to stop early; the function then returns false.
template <typename Fn>
bool for_each_error_of_weight(const SymbolSyndromes& table, std::size_t weight, Fn&& fn) {
    std::size_t n = table.n;
    if (weight > n) {
        return true;
    }
    std::vector<std::size_t> pos(weight);
    std::vector<std::uint8_t> sym(weight);
    for (std::size_t t = 0; t < weight; ++t) {
        pos[t] = t;
    }
    if (weight == 0) {
        return fn(ErrorView{pos, sym}, std::uint64_t{0});
    }
    while (true) {
        std::fill(sym.begin(), sym.end(), std::uint8_t{0});
        while (true) {
            std::uint64_t mask = 0;
            for (std::size_t t = 0; t < weight; ++t) {
                mask ^= table.masks[pos[t]][sym[t]];
            }
            if (!fn(ErrorView{pos, sym}, mask)) {
                return false;
            }
            // Next symbol tuple, last coordinate fastest.
            std::size_t t = weight;
            while (t > 0 && sym[t - 1] == 2) {
                sym[t - 1] = 0;
                --t;
            }
            if (t == 0) {
                break;
            }
            ++sym[t - 1];
        }
        // Next support in lexicographic order.
        std::size_t t = weight;
        while (t > 0 && pos[t - 1] == n - weight + (t - 1)) {
            --t;
        }
        if (t == 0) {
            return true;
        }
        ++pos[t - 1];
        for (std::size_t u = t; u < weight; ++u) {
            pos[u] = pos[u - 1] + 1;
        }
    }
}

}  // namespace qdsc::detail

#endif
