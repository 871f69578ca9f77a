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

#ifndef QDSC_CATALOG_H
#define QDSC_CATALOG_H

#include <string>
#include <string_view>
#include <vector>

#include "qdsc/codes.h"

namespace qdsc {

struct CatalogEntry {
    std::string name;
    std::string description;
    bool subsystem = false;
    /// Stabilizer rows, or gauge rows for subsystem entries, as Pauli strings.
    std::vector<std::string> rows;
};

/// Bundled quantum codes:
///   five-qubit         [[5,1,3]]  cyclic XZZXI generators
///   steane             [[7,1,3]]  CSS Hamming generators
///   shor               [[9,1,3]]  X1..X6, X4..X9, then Z1Z2 Z2Z3 Z4Z5 Z5Z6 Z7Z8 Z8Z9
///   example-6-1-3      [[6,1,3]]  impure code, generator matrix G
///   example-6-1-3-qds  [[6,1,3]]  same code, generators G' that need no extra measurement
///   8-3-3              [[8,3,3]]  Gottesman's code
///   bacon-shor         [[9,1,4,3]] subsystem code from 12 two-qubit gauge operators
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_entry(std::string_view name);

/// Throws LookupError for unknown names.
QuantumCode catalog(std::string_view name);

/// Convenience accessor for entries known to be stabilizer codes.
StabilizerCode catalog_stabilizer(std::string_view name);

}  // namespace qdsc

#endif
