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

#include "qdsc/sm_codes.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qdsc/code_io.h"
#include "qdsc/errors.h"

namespace qdsc {

Systematized systematize(std::span<const BitVector> generator) {
    if (generator.empty()) {
        throw DimensionError("generator matrix has no rows");
    }
    std::size_t width = generator.front().size();
    std::vector<BitVector> rows(generator.begin(), generator.end());
    for (const auto& r : rows) {
        if (r.size() != width) {
            throw DimensionError("generator matrix rows have different lengths");
        }
    }
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
        std::size_t pick = next;
        while (pick < rows.size() && !rows[pick].get(col)) {
            ++pick;
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[pick], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != next && rows[i].get(col)) {
                rows[i] ^= rows[next];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    if (next < rows.size()) {
        throw RankError("generator matrix has rank " + std::to_string(next) + " < " + std::to_string(rows.size()));
    }
    Systematized out;
    out.permutation = pivots;
    for (std::size_t col = 0; col < width; ++col) {
        if (!std::binary_search(pivots.begin(), pivots.end(), col)) {
            out.permutation.push_back(col);
        }
    }
    for (const auto& r : rows) {
        BitVector s(width);
        for (std::size_t j = 0; j < width; ++j) {
            if (r.get(out.permutation[j])) {
                s.set(j, true);
            }
        }
        out.generator.push_back(std::move(s));
    }
    return out;
}

BinaryLinearCode::BinaryLinearCode(std::span<const BitVector> generator, std::string name,
                                   std::optional<std::size_t> declared_distance)
    : name_(std::move(name)), declared_distance_(declared_distance) {
    auto sys = systematize(generator);
    length_ = sys.generator.front().size();
    dimension_ = sys.generator.size();
    if (length_ > kMaxLength) {
        throw CapacityError("SM codes are limited to length " + std::to_string(kMaxLength));
    }
    generator_ = std::move(sys.generator);
    permutation_ = std::move(sys.permutation);
    std::size_t l = redundancy();
    parity_rows_.assign(dimension_, 0);
    for (std::size_t i = 0; i < dimension_; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            if (generator_[i].get(dimension_ + j)) {
                parity_rows_[i] |= std::uint64_t{1} << j;
            }
        }
    }
    column_syndrome_.resize(length_);
    for (std::size_t j = 0; j < length_; ++j) {
        column_syndrome_[j] = j < dimension_ ? parity_rows_[j] : std::uint64_t{1} << (j - dimension_);
    }
    if (length_ <= kCosetTableLimit) {
        build_coset_table();
    }
}

BinaryLinearCode BinaryLinearCode::identity(std::size_t m) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < m; ++i) {
        BitVector r(m);
        r.set(i, true);
        rows.push_back(std::move(r));
    }
    return BinaryLinearCode(rows, "identity-" + std::to_string(m), 1);
}

BinaryLinearCode BinaryLinearCode::parity(std::size_t m) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < m; ++i) {
        BitVector r(m + 1);
        r.set(i, true);
        r.set(m, true);
        rows.push_back(std::move(r));
    }
    return BinaryLinearCode(rows, "parity-" + std::to_string(m), 2);
}

BinaryLinearCode BinaryLinearCode::repetition(std::size_t length) {
    BitVector r(length);
    for (std::size_t j = 0; j < length; ++j) {
        r.set(j, true);
    }
    std::vector<BitVector> rows{r};
    return BinaryLinearCode(rows, "repetition-" + std::to_string(length), length);
}

BinaryLinearCode BinaryLinearCode::cordaro_wagner(std::size_t a, std::size_t b, std::size_t c) {
    std::size_t n = a + b + c;
    BitVector first(n), second(n);
    for (std::size_t j = 0; j < a + b; ++j) {
        first.set(j, true);
    }
    for (std::size_t j = a; j < n; ++j) {
        second.set(j, true);
    }
    std::vector<BitVector> rows{first, second};
    std::size_t d = std::min({a + b, b + c, a + c});
    return BinaryLinearCode(rows, "cw-" + std::to_string(n) + "-2-" + std::to_string(d), d);
}

std::uint64_t BinaryLinearCode::encode_mask(std::uint64_t message) const {
    std::uint64_t parity = 0;
    for (std::size_t i = 0; i < dimension_; ++i) {
        if ((message >> i) & 1) {
            parity ^= parity_rows_[i];
        }
    }
    return message | (parity << dimension_);
}

std::uint64_t BinaryLinearCode::syndrome_mask(std::uint64_t received) const {
    std::uint64_t s = 0;
    while (received != 0) {
        s ^= column_syndrome_[static_cast<std::size_t>(std::countr_zero(received))];
        received &= received - 1;
    }
    return s;
}

BitVector BinaryLinearCode::encode(const BitVector& message) const {
    if (message.size() != dimension_) {
        throw DimensionError("encode: message length " + std::to_string(message.size()) + ", expected " +
                             std::to_string(dimension_));
    }
    return BitVector::from_mask(encode_mask(message.to_mask()), length_);
}

BitVector BinaryLinearCode::syndrome(const BitVector& received) const {
    if (received.size() != length_) {
        throw DimensionError("syndrome: word length " + std::to_string(received.size()) + ", expected " +
                             std::to_string(length_));
    }
    return BitVector::from_mask(syndrome_mask(received.to_mask()), redundancy());
}

std::vector<BitVector> BinaryLinearCode::codewords() const {
    if (dimension_ > kMaxEnumeratedDimension) {
        throw CapacityError("codeword enumeration limited to dimension " + std::to_string(kMaxEnumeratedDimension));
    }
    std::vector<BitVector> out;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << dimension_); ++msg) {
        out.push_back(BitVector::from_mask(encode_mask(msg), length_));
    }
    return out;
}

std::size_t BinaryLinearCode::min_distance() const {
    if (dimension_ > kMaxEnumeratedDimension) {
        throw CapacityError("codeword enumeration limited to dimension " + std::to_string(kMaxEnumeratedDimension));
    }
    std::size_t best = length_;
    for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << dimension_); ++msg) {
        best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(encode_mask(msg))));
    }
    return best;
}

namespace {

std::uint64_t reverse_bits(std::uint64_t v, std::size_t width) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < width; ++i) {
        out |= ((v >> i) & 1) << (width - 1 - i);
    }
    return out;
}

}  // namespace

void BinaryLinearCode::build_coset_table() {
    std::size_t l = redundancy();
    std::uint64_t num_cosets = std::uint64_t{1} << l;
    constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
    leaders_.assign(num_cosets, kUnset);
    std::uint64_t filled = 0;
    // Patterns of each weight in lexicographic string order (bit 0 first,
    // '0' < '1'): that is increasing order of the bit-reversed integer, which
    // Gosper's hack walks directly.
    for (std::size_t w = 0; w <= length_ && filled < num_cosets; ++w) {
        if (w == 0) {
            leaders_[0] = 0;
            ++filled;
            continue;
        }
        std::uint64_t key = (std::uint64_t{1} << w) - 1;
        std::uint64_t limit = std::uint64_t{1} << length_;
        while (key < limit && filled < num_cosets) {
            std::uint64_t pattern = reverse_bits(key, length_);
            std::uint64_t s = syndrome_mask(pattern);
            if (leaders_[s] == kUnset) {
                leaders_[s] = pattern;
                ++filled;
            }
            std::uint64_t c = key & (~key + 1);
            std::uint64_t r = key + c;
            key = (((r ^ key) >> 2) / c) | r;
        }
    }
}

std::uint64_t BinaryLinearCode::coset_leader_mask(std::uint64_t syndrome) const {
    if (leaders_.empty()) {
        throw CapacityError("coset-leader table not built: length " + std::to_string(length_) + " exceeds " +
                            std::to_string(kCosetTableLimit));
    }
    return leaders_.at(syndrome);
}

BitVector BinaryLinearCode::coset_leader(const BitVector& syndrome) const {
    if (syndrome.size() != redundancy()) {
        throw DimensionError("coset_leader: syndrome length mismatch");
    }
    return BitVector::from_mask(coset_leader_mask(syndrome.to_mask()), length_);
}

DecodeOutcome majority_decode(std::span<const BitVector> copies) {
    if (copies.empty()) {
        throw DimensionError("majority_decode needs at least one copy");
    }
    std::size_t m = copies.front().size();
    DecodeOutcome out{BitVector(m), BitVector(m), true};
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t ones = 0;
        for (const auto& c : copies) {
            if (c.size() != m) {
                throw DimensionError("majority_decode: copies have different lengths");
            }
            ones += c.get(i);
        }
        std::size_t zeros = copies.size() - ones;
        if (ones > zeros) {
            out.message.set(i, true);
        } else if (ones == zeros) {
            out.decided = false;
        }
    }
    out.codeword = out.message;
    return out;
}

DecodeOutcome coset_leader_decode(const BinaryLinearCode& code, const BitVector& received) {
    if (received.size() != code.length()) {
        throw DimensionError("coset_leader_decode: word length " + std::to_string(received.size()) + ", expected " +
                             std::to_string(code.length()));
    }
    std::uint64_t r = received.to_mask();
    std::uint64_t c = r ^ code.coset_leader_mask(code.syndrome_mask(r));
    std::uint64_t msg_mask = code.dimension() == 64 ? c : c & ((std::uint64_t{1} << code.dimension()) - 1);
    return {BitVector::from_mask(msg_mask, code.dimension()), BitVector::from_mask(c, code.length()), true};
}

std::vector<double> ml_bit_costs(std::span<const double> flip_probs) {
    constexpr double kClamp = 1.0e4;
    std::vector<double> out;
    out.reserve(flip_probs.size());
    for (double p : flip_probs) {
        if (p <= 0.0) {
            out.push_back(kClamp);
        } else if (p >= 1.0) {
            out.push_back(-kClamp);
        } else {
            out.push_back(std::clamp(std::log1p(-p) - std::log(p), -kClamp, kClamp));
        }
    }
    return out;
}

bool ml_costs_tie(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

MaskDecodeOutcome weighted_ml_decode_mask(const BinaryLinearCode& code, std::uint64_t received,
                                          std::span<const double> costs, TiePolicy ties) {
    if (code.dimension() > BinaryLinearCode::kMaxEnumeratedDimension) {
        throw CapacityError("weighted_ml_decode limited to dimension " +
                            std::to_string(BinaryLinearCode::kMaxEnumeratedDimension));
    }
    MaskDecodeOutcome best;
    double best_cost = 0.0;
    bool tied = false;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << code.dimension()); ++msg) {
        std::uint64_t cw = code.encode_mask(msg);
        std::uint64_t diff = cw ^ received;
        double c = 0.0;
        while (diff != 0) {
            c += costs[static_cast<std::size_t>(std::countr_zero(diff))];
            diff &= diff - 1;
        }
        if (msg == 0) {
            best.codeword = cw;
            best_cost = c;
        } else if (ml_costs_tie(c, best_cost)) {
            tied = true;
            // Lexicographic order: the word with 0 at the lowest differing index is smaller.
            std::uint64_t d = cw ^ best.codeword;
            if ((cw & d & (~d + 1)) == 0) {
                best.codeword = cw;
            }
        } else if (c < best_cost) {
            best.codeword = cw;
            best_cost = c;
            tied = false;
        }
    }
    best.decided = !(tied && ties == TiePolicy::kFailure);
    return best;
}

DecodeOutcome weighted_ml_decode(const BinaryLinearCode& code, const BitVector& received,
                                 std::span<const double> flip_probs, TiePolicy ties) {
    std::size_t n = code.length();
    if (received.size() != n || flip_probs.size() != n) {
        throw DimensionError("weighted_ml_decode: received word and probabilities must have length " +
                             std::to_string(n));
    }
    auto costs = ml_bit_costs(flip_probs);
    auto r = weighted_ml_decode_mask(code, received.to_mask(), costs, ties);
    std::size_t m = code.dimension();
    std::uint64_t msg_mask = m == 64 ? r.codeword : r.codeword & ((std::uint64_t{1} << m) - 1);
    return {BitVector::from_mask(msg_mask, m), BitVector::from_mask(r.codeword, n), r.decided};
}

std::optional<std::filesystem::path> resolve_data_dir(const std::optional<std::filesystem::path>& explicit_dir) {
    if (explicit_dir) {
        return explicit_dir;
    }
    if (const char* env = std::getenv("QDS_DATA_DIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

namespace {

struct ImportSpec {
    std::string_view name;
    std::size_t length, dimension, distance;
};

constexpr ImportSpec kImports[] = {
    {"grassl-18-6-8", 18, 6, 8},
    {"grassl-25-6-11", 25, 6, 11},
};

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    auto digits = name.substr(prefix.size());
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::stoul(std::string(digits)));
}

}  // namespace

bool sm_is_import_only(std::string_view name) {
    return std::any_of(std::begin(kImports), std::end(kImports), [&](const auto& s) { return s.name == name; });
}

BinaryLinearCode sm_catalog(std::string_view name, const std::optional<std::filesystem::path>& data_dir) {
    if (name == "cw-12-2-8") return BinaryLinearCode::cordaro_wagner(4, 4, 4);
    if (name == "cw-17-2-11") return BinaryLinearCode::cordaro_wagner(6, 6, 5);
    if (name == "cw-18-2-12") return BinaryLinearCode::cordaro_wagner(6, 6, 6);
    if (auto m = parse_suffix(name, "parity-"); m && *m >= 1) return BinaryLinearCode::parity(*m);
    if (auto m = parse_suffix(name, "identity-"); m && *m >= 1) return BinaryLinearCode::identity(*m);
    if (auto n = parse_suffix(name, "repetition-"); n && *n >= 1) return BinaryLinearCode::repetition(*n);
    for (const auto& spec : kImports) {
        if (spec.name != name) {
            continue;
        }
        auto dir = resolve_data_dir(data_dir);
        if (!dir) {
            throw AvailabilityError("SM code '" + std::string(name) + "' is import-only: place its generator matrix in " +
                                    std::string(name) + ".txt and set QDS_DATA_DIR");
        }
        auto path = *dir / (std::string(name) + ".txt");
        if (!std::filesystem::exists(path)) {
            throw AvailabilityError("SM code '" + std::string(name) + "' requires " + path.string());
        }
        auto rows = read_binary_rows(path);
        BinaryLinearCode code(rows, std::string(name), spec.distance);
        if (code.length() != spec.length || code.dimension() != spec.dimension) {
            throw ParseError(path.string() + ": expected a [" + std::to_string(spec.length) + "," +
                             std::to_string(spec.dimension) + "] generator, got [" + std::to_string(code.length()) +
                             "," + std::to_string(code.dimension()) + "]");
        }
        return code;
    }
    throw LookupError("unknown SM code '" + std::string(name) + "'");
}

std::vector<std::string> sm_catalog_names() {
    return {"identity-<m>", "parity-<m>", "repetition-<n>", "cw-12-2-8", "cw-17-2-11",
            "cw-18-2-12",   "grassl-18-6-8", "grassl-25-6-11"};
}

}  // namespace qdsc
