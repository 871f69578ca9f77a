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

#ifndef QDSC_SM_CODES_H
#define QDSC_SM_CODES_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdsc/bitvector.h"

namespace qdsc {

/// Generator in the form [I_m | A] after a column permutation.
struct Systematized {
    std::vector<BitVector> generator;
    /// permutation[j] is the original column placed at systematic column j.
    std::vector<std::size_t> permutation;
};

/// Row-reduces `generator` and moves pivot columns to the front.
/// Throws RankError when the rows are dependent.
Systematized systematize(std::span<const BitVector> generator);

/// An [m + l, m] binary linear code used to protect an m-bit syndrome.
///
/// All coordinates are in systematic order: bits [0, m) carry the message
/// and bits [m, m + l) are the parities s * A. Lengths up to 64 are supported;
/// a syndrome-to-coset-leader table is built eagerly when the length is at
/// most kCosetTableLimit.
class BinaryLinearCode {
   public:
    static constexpr std::size_t kMaxLength = 64;
    static constexpr std::size_t kCosetTableLimit = 25;
    static constexpr std::size_t kMaxEnumeratedDimension = 20;

    BinaryLinearCode() = default;
    explicit BinaryLinearCode(std::span<const BitVector> generator, std::string name = {},
                              std::optional<std::size_t> declared_distance = std::nullopt);

    /// [m, m] code: no redundancy.
    static BinaryLinearCode identity(std::size_t m);
    /// [m + 1, m, 2] single parity check code.
    static BinaryLinearCode parity(std::size_t m);
    /// [length, 1, length] repetition code.
    static BinaryLinearCode repetition(std::size_t length);
    /// Two-dimensional code with rows A u B and B u C for consecutive blocks
    /// of the given sizes; nonzero weights a+b, b+c, a+c.
    static BinaryLinearCode cordaro_wagner(std::size_t a, std::size_t b, std::size_t c);

    const std::string& name() const { return name_; }
    std::size_t length() const { return length_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t redundancy() const { return length_ - dimension_; }
    std::optional<std::size_t> declared_distance() const { return declared_distance_; }

    /// Systematic generator rows [I_m | A].
    const std::vector<BitVector>& generator() const { return generator_; }
    const std::vector<std::size_t>& column_permutation() const { return permutation_; }
    /// Entry a_{i,j} of A.
    bool parity_entry(std::size_t i, std::size_t j) const { return (parity_rows_[i] >> j) & 1; }

    BitVector encode(const BitVector& message) const;
    /// Parity-check syndrome H r with H = [A^T | I_l]; zero iff r is a codeword.
    BitVector syndrome(const BitVector& received) const;
    std::vector<BitVector> codewords() const;
    std::size_t min_distance() const;

    bool has_coset_table() const { return !leaders_.empty(); }
    BitVector coset_leader(const BitVector& syndrome) const;

    // Mask-level access for the simulation kernels (bit i = coordinate i).
    std::uint64_t encode_mask(std::uint64_t message) const;
    std::uint64_t syndrome_mask(std::uint64_t received) const;
    std::uint64_t coset_leader_mask(std::uint64_t syndrome) const;

   private:
    void build_coset_table();

    std::string name_;
    std::size_t length_ = 0;
    std::size_t dimension_ = 0;
    std::optional<std::size_t> declared_distance_;
    std::vector<BitVector> generator_;
    std::vector<std::size_t> permutation_;
    std::vector<std::uint64_t> parity_rows_;     // row i of A as an l-bit mask
    std::vector<std::uint64_t> column_syndrome_;  // H column j as an l-bit mask
    std::vector<std::uint64_t> leaders_;          // indexed by syndrome mask
};

/// Decoder result. `decided` is false when the decoder declares a failure
/// (an exact tie); `message` and `codeword` then hold a deterministic guess.
/// Whether decoding succeeded is `decided && message == transmitted message`.
struct DecodeOutcome {
    BitVector message;
    BitVector codeword;
    bool decided = true;
};

/// Per-bit majority over repeated copies of an m-bit word. An exact tie
/// (possible for an even number of copies) is a failure for that bit.
DecodeOutcome majority_decode(std::span<const BitVector> copies);

/// Subtracts the minimum-weight, lexicographically smallest pattern of the
/// received word's coset. Throws CapacityError without a coset table.
DecodeOutcome coset_leader_decode(const BinaryLinearCode& code, const BitVector& received);

enum class TiePolicy {
    /// An exact likelihood tie is a declared failure.
    kFailure,
    /// Ties resolve to the lexicographically smallest codeword.
    kLexicographic,
};

/// Maximum-likelihood decoding for independent bit flips with per-bit
/// probabilities, by enumerating all 2^m codewords (m <= 20).
DecodeOutcome weighted_ml_decode(const BinaryLinearCode& code, const BitVector& received,
                                 std::span<const double> flip_probs, TiePolicy ties = TiePolicy::kFailure);

/// Per-bit cost log((1-p)/p) of flipping, clamped to +-1e4 so that p = 0 and
/// p = 1 stay finite. A pattern's likelihood is proportional to exp(-cost).
std::vector<double> ml_bit_costs(std::span<const double> flip_probs);
/// Tie rule shared by the decoder and the exact evaluator:
/// |a - b| <= 1e-9 * max(1, |a|, |b|).
bool ml_costs_tie(double a, double b);

struct MaskDecodeOutcome {
    std::uint64_t codeword = 0;
    bool decided = true;
};
/// Mask-level weighted_ml_decode taking precomputed ml_bit_costs.
MaskDecodeOutcome weighted_ml_decode_mask(const BinaryLinearCode& code, std::uint64_t received,
                                          std::span<const double> costs, TiePolicy ties = TiePolicy::kFailure);

/// Bundled SM codes: identity-<m>, parity-<m>, repetition-<n>, cw-12-2-8,
/// cw-17-2-11, cw-18-2-12; import-only grassl-18-6-8 and grassl-25-6-11 are
/// read from <data_dir>/<name>.txt, with data_dir defaulting to $QDS_DATA_DIR.
BinaryLinearCode sm_catalog(std::string_view name,
                            const std::optional<std::filesystem::path>& data_dir = std::nullopt);

/// Names accepted by sm_catalog (parameterized families shown with a sample size).
std::vector<std::string> sm_catalog_names();

/// True for names that are only available through file import.
bool sm_is_import_only(std::string_view name);

/// Resolves the data directory: explicit path, else $QDS_DATA_DIR.
std::optional<std::filesystem::path> resolve_data_dir(const std::optional<std::filesystem::path>& explicit_dir);

}  // namespace qdsc

#endif
