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

#include "qdsc/catalog.h"

#include "qdsc/errors.h"

namespace qdsc {

namespace {

std::vector<std::string> bacon_shor_gauge() {
    // Qubit (row, col) of the 3x3 grid is index 3*row + col.
    std::vector<std::string> out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 3; ++c) {
            std::string p(9, 'I');
            p[3 * r + c] = 'X';
            p[3 * (r + 1) + c] = 'X';
            out.push_back(p);
        }
    }
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 2; ++c) {
            std::string p(9, 'I');
            p[3 * r + c] = 'Z';
            p[3 * r + c + 1] = 'Z';
            out.push_back(p);
        }
    }
    return out;
}

std::vector<CatalogEntry> build_entries() {
    return {
        {"five-qubit", "[[5,1,3]] perfect code, cyclic shifts of XZZXI", false,
         {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}},
        {"steane", "[[7,1,3]] Steane code, CSS from the [7,4,3] Hamming code", false,
         {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}},
        {"shor", "[[9,1,3]] Shor code", false,
         {"XXXXXXIII", "IIIXXXXXX", "ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI",
          "IIIIIIIZZ"}},
        // Rows of G verbatim: (0 0 0 w 0 w), (w^2 0 w 1 1 w^2), (w 1 0 0 1 w),
        // (0 w 1 1 1 1), (w w w 0 w 0).
        {"example-6-1-3", "[[6,1,3]] impure code, generator matrix G", false,
         {"IIIZIZ", "YIZXXY", "ZXIIXZ", "IZXXXX", "ZZZIZI"}},
        // G' = G with g1 -> g1+...+g5, g4 -> g4+g1, g5 -> g5+g1.
        {"example-6-1-3-qds", "[[6,1,3]] impure code, generators G' forming a [[6,1,3:0]] QDS code", false,
         {"YXXZYZ", "YIZXXY", "ZXIIXZ", "IZXYXY", "ZZZZZZ"}},
        {"8-3-3", "[[8,3,3]] Gottesman code", false,
         {"XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY"}},
        {"bacon-shor", "[[9,1,4,3]] Bacon-Shor subsystem code (gauge generators)", true, bacon_shor_gauge()},
    };
}

std::vector<F4Vector> parse_rows(const std::vector<std::string>& rows) {
    std::vector<F4Vector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(F4Vector::from_pauli(r));
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog_entries()) {
        if (e.name == name) {
            return e;
        }
    }
    throw LookupError("unknown quantum code '" + std::string(name) + "'");
}

QuantumCode catalog(std::string_view name) {
    const auto& entry = catalog_entry(name);
    if (entry.subsystem) {
        return make_subsystem(parse_rows(entry.rows));
    }
    return make_stabilizer(parse_rows(entry.rows));
}

StabilizerCode catalog_stabilizer(std::string_view name) {
    auto code = catalog(name);
    if (auto* s = std::get_if<StabilizerCode>(&code)) {
        return std::move(*s);
    }
    throw LookupError("catalog entry '" + std::string(name) + "' is a subsystem code");
}

}  // namespace qdsc
