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

#ifndef QDSC_CODE_IO_H
#define QDSC_CODE_IO_H

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdsc/bitvector.h"
#include "qdsc/codes.h"
#include "qdsc/gf4.h"

namespace qdsc {

/// Contents of a Pauli code file.
///
/// Format: one Pauli string over {I,X,Z,Y} per line; everything after '#' is
/// a comment; blank lines are ignored. A line reading `GAUGE` marks the file
/// as a subsystem code and must precede all rows, which are then gauge
/// generators.
struct PauliCodeFile {
    std::vector<F4Vector> rows;
    bool subsystem = false;
};

/// Throws ParseError with "<source>:<line>:<column>" diagnostics.
PauliCodeFile parse_pauli_code(std::string_view text, std::string_view source = "<input>");
PauliCodeFile read_pauli_code(const std::filesystem::path& path);

/// Builds the code described by a file (stabilizer or subsystem).
QuantumCode to_quantum_code(const PauliCodeFile& file);

void write_pauli_code(std::ostream& out, std::span<const F4Vector> rows, bool subsystem = false,
                      std::string_view comment = {});

/// Binary matrix files: one row of '0'/'1' per line, '#' comments.
std::vector<BitVector> parse_binary_rows(std::string_view text, std::string_view source = "<input>");
std::vector<BitVector> read_binary_rows(const std::filesystem::path& path);
void write_binary_rows(std::ostream& out, std::span<const BitVector> rows, std::string_view comment = {});

}  // namespace qdsc

#endif
