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

#ifndef QDSC_GF4_H
#define QDSC_GF4_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdsc/bitvector.h"

namespace qdsc {

/// An element of F4 = {0, 1, w, w^2} with w^2 = w + 1.
///
/// Stored as two bits (x, z) so that addition is XOR and the Pauli
/// correspondence is direct: 0 <-> I, 1 <-> X, w <-> Z, w^2 <-> Y.
/// This is the only symbol convention used anywhere in the library.
class F4 {
   public:
    constexpr F4() = default;
    static constexpr F4 from_bits(bool x, bool z) { return F4(static_cast<std::uint8_t>(x | (z << 1))); }
    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 omega() { return F4(2); }
    static constexpr F4 omega2() { return F4(3); }
    /// Parses one of 'I', 'X', 'Z', 'Y'. Throws ParseError otherwise.
    static F4 from_pauli(char c);

    constexpr bool x() const { return code_ & 1; }
    constexpr bool z() const { return (code_ >> 1) & 1; }
    constexpr bool is_zero() const { return code_ == 0; }
    /// 0..3 for 0, 1, w, w^2.
    constexpr std::uint8_t code() const { return code_; }
    char pauli() const { return "IXZY"[code_]; }

    constexpr F4 conj() const {
        // Fixes 0 and 1, swaps w and w^2.
        return from_bits(x() ^ z(), z());
    }
    /// Tr(a) = a + a^2, which is 1 exactly on {w, w^2}.
    constexpr bool trace() const { return z(); }

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.code_ ^ b.code_); }
    friend F4 operator*(F4 a, F4 b);
    constexpr bool operator==(const F4&) const = default;

   private:
    constexpr explicit F4(std::uint8_t code) : code_(code) {}
    std::uint8_t code_ = 0;
};

/// A length-n vector over F4, i.e. an n-qubit Pauli operator modulo phase.
class F4Vector {
   public:
    F4Vector() = default;
    explicit F4Vector(std::size_t n);

    /// Parses a Pauli string over {I, X, Z, Y}.
    static F4Vector from_pauli(std::string_view text);
    /// Single-symbol vector: `value` at `coordinate`, zero elsewhere.
    static F4Vector unit(std::size_t n, std::size_t coordinate, F4 value);

    std::size_t size() const { return n_; }
    F4 operator[](std::size_t i) const {
        return F4::from_bits((x_[i >> 6] >> (i & 63)) & 1, (z_[i >> 6] >> (i & 63)) & 1);
    }
    void set(std::size_t i, F4 value);

    std::size_t weight() const;
    bool is_zero() const;

    F4Vector& operator+=(const F4Vector& other);
    friend F4Vector operator+(F4Vector a, const F4Vector& b) { return a += b; }
    bool operator==(const F4Vector& other) const = default;

    /// The 2n-bit binary expansion (x part followed by z part) used for F2 rank.
    BitVector to_binary() const;
    static F4Vector from_binary(const BitVector& bits);

    std::string to_pauli() const;

    std::span<const std::uint64_t> x_words() const { return x_; }
    std::span<const std::uint64_t> z_words() const { return z_; }

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
};

/// Element of F4^n x F2^a, the ambient space of data-syndrome codes.
struct HybridVector {
    F4Vector data;
    BitVector tail;
};

/// u * v = Tr(sum u_i conj(v_i)). Zero iff the Pauli operators commute.
bool trace_inner_product(const F4Vector& u, const F4Vector& v);

/// Trace inner product on the F4 part plus the F2 dot product on the tail.
bool star_inner_product(const HybridVector& u, const HybridVector& v);

/// Bit i is rows[i] * e.
BitVector syndrome(std::span<const F4Vector> rows, const F4Vector& e);

/// Rank of the rows' 2n-bit binary expansions over F2.
std::size_t f2_rank(std::span<const F4Vector> rows);

/// Row space over F2 kept in reduced echelon form; supports incremental
/// insertion and membership queries without materializing the span.
class BinarySpan {
   public:
    BinarySpan() = default;
    explicit BinarySpan(std::size_t num_bits) : num_bits_(num_bits) {}

    /// Returns true if `v` was independent of the current rows (rank grew).
    bool insert(BitVector v);
    bool contains(BitVector v) const;
    /// Reduces `v` against the stored rows in place.
    void reduce(BitVector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t num_bits() const { return num_bits_; }

   private:
    std::size_t num_bits_ = 0;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {x in F2^rows.size() : sum_i x_i rows[i] = 0}, returned in
/// reduced echelon form (deterministic).
std::vector<BitVector> f2_left_null_space(std::span<const BitVector> rows);

}  // namespace qdsc

#endif
