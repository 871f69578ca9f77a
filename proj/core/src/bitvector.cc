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

#include "qdsc/bitvector.h"

#include <bit>

#include "qdsc/errors.h"

namespace qdsc {

BitVector::BitVector(std::size_t num_bits) : size_(num_bits), words_((num_bits + 63) / 64, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("invalid binary character '" + std::string(1, bits[i]) + "' at column " +
                             std::to_string(i + 1));
        }
    }
    return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t num_bits) {
    if (num_bits > 64) {
        throw DimensionError("from_mask supports at most 64 bits");
    }
    BitVector v(num_bits);
    if (num_bits > 0) {
        v.words_[0] = num_bits == 64 ? mask : (mask & ((std::uint64_t{1} << num_bits) - 1));
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::is_zero() const {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) {
        throw DimensionError("dot: length " + std::to_string(size_) + " vs " + std::to_string(other.size_));
    }
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::uint64_t BitVector::to_mask() const {
    if (size_ > 64) {
        throw DimensionError("to_mask requires at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw DimensionError("xor: length " + std::to_string(size_) + " vs " + std::to_string(other.size_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVector::lex_less(const BitVector& other) const {
    if (size_ != other.size_) {
        return size_ < other.size_;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // Lowest differing index decides; the vector holding a 0 there is smaller.
            int i = std::countr_zero(diff);
            return ((words_[k] >> i) & 1) == 0;
        }
    }
    return false;
}

std::string BitVector::str() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace qdsc
