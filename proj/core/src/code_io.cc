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

#include "qdsc/code_io.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include "qdsc/errors.h"

namespace qdsc {

namespace {

struct Line {
    std::size_t number;
    std::size_t column;  // 1-based column of the first content character
    std::string_view content;
};

// Splits into non-empty content lines with comments and surrounding blanks removed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        out.push_back({number, first + 1, line.substr(first, last - first + 1)});
    }
    return out;
}

std::string where(std::string_view source, const Line& line) {
    return std::string(source) + ":" + std::to_string(line.number);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_comment(std::ostream& out, std::string_view comment) {
    std::size_t pos = 0;
    while (pos < comment.size()) {
        auto eol = comment.find('\n', pos);
        auto piece = comment.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        out << "# " << piece << '\n';
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
}

}  // namespace

PauliCodeFile parse_pauli_code(std::string_view text, std::string_view source) {
    PauliCodeFile file;
    for (const auto& line : content_lines(text)) {
        if (line.content == "GAUGE") {
            if (file.subsystem) {
                throw ParseError(where(source, line) + ": duplicate GAUGE header");
            }
            if (!file.rows.empty()) {
                throw ParseError(where(source, line) + ": GAUGE header must precede all rows");
            }
            file.subsystem = true;
            continue;
        }
        for (std::size_t i = 0; i < line.content.size(); ++i) {
            char c = line.content[i];
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw ParseError(where(source, line) + ":" + std::to_string(line.column + i) +
                                 ": unknown Pauli symbol '" + std::string(1, c) + "'");
            }
        }
        auto row = F4Vector::from_pauli(line.content);
        if (!file.rows.empty() && row.size() != file.rows.front().size()) {
            throw ParseError(where(source, line) + ": row has length " + std::to_string(row.size()) +
                             ", expected " + std::to_string(file.rows.front().size()));
        }
        file.rows.push_back(std::move(row));
    }
    if (file.rows.empty()) {
        throw ParseError(std::string(source) + ": no rows");
    }
    return file;
}

PauliCodeFile read_pauli_code(const std::filesystem::path& path) {
    return parse_pauli_code(slurp(path), path.string());
}

QuantumCode to_quantum_code(const PauliCodeFile& file) {
    if (file.subsystem) {
        return make_subsystem(file.rows);
    }
    return make_stabilizer(file.rows);
}

void write_pauli_code(std::ostream& out, std::span<const F4Vector> rows, bool subsystem, std::string_view comment) {
    write_comment(out, comment);
    if (subsystem) {
        out << "GAUGE\n";
    }
    for (const auto& r : rows) {
        out << r.to_pauli() << '\n';
    }
}

std::vector<BitVector> parse_binary_rows(std::string_view text, std::string_view source) {
    std::vector<BitVector> rows;
    for (const auto& line : content_lines(text)) {
        for (std::size_t i = 0; i < line.content.size(); ++i) {
            char c = line.content[i];
            if (c != '0' && c != '1') {
                throw ParseError(where(source, line) + ":" + std::to_string(line.column + i) +
                                 ": invalid binary character '" + std::string(1, c) + "'");
            }
        }
        auto row = BitVector::from_string(line.content);
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(where(source, line) + ": row has length " + std::to_string(row.size()) + ", expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(std::string(source) + ": no rows");
    }
    return rows;
}

std::vector<BitVector> read_binary_rows(const std::filesystem::path& path) {
    return parse_binary_rows(slurp(path), path.string());
}

void write_binary_rows(std::ostream& out, std::span<const BitVector> rows, std::string_view comment) {
    write_comment(out, comment);
    for (const auto& r : rows) {
        out << r.str() << '\n';
    }
}

}  // namespace qdsc
