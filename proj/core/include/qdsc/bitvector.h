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

#ifndef QDSC_BITVECTOR_H
#define QDSC_BITVECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdsc {

/// A vector over F2 of arbitrary length, packed 64 bits per word.
///
/// Bits beyond size() in the last word are always zero, so word-wise
/// operations (popcount, equality, XOR) need no masking.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t num_bits);

    /// Parses a string of '0'/'1' characters. Bit 0 is the first character.
    static BitVector from_string(std::string_view bits);
    /// Builds a vector from the low `num_bits` bits of `mask` (bit i -> index i).
    static BitVector from_mask(std::uint64_t mask, std::size_t num_bits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;
    /// F2 dot product.
    bool dot(const BitVector& other) const;
    /// Low 64 bits as an integer; requires size() <= 64.
    std::uint64_t to_mask() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    /// Lexicographic order on the string b_0 b_1 ... with '0' < '1'.
    /// Vectors of unequal length compare by length first.
    bool lex_less(const BitVector& other) const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Renders as '0'/'1' characters, bit 0 first.
    std::string str() const;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qdsc

#endif
