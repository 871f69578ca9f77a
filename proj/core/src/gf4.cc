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

#include "qdsc/gf4.h"

#include <algorithm>
#include <array>
#include <bit>

#include "qdsc/errors.h"

namespace qdsc {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_length(const F4Vector& u, const F4Vector& v, const char* what) {
    if (u.size() != v.size()) {
        throw DimensionError(std::string(what) + ": length " + std::to_string(u.size()) + " vs " +
                             std::to_string(v.size()));
    }
}

}  // namespace

F4 F4::from_pauli(char c) {
    switch (c) {
        case 'I':
            return zero();
        case 'X':
            return one();
        case 'Z':
            return omega();
        case 'Y':
            return omega2();
        default:
            throw ParseError(std::string("unknown Pauli symbol '") + c + "'");
    }
}

F4 operator*(F4 a, F4 b) {
    if (a.is_zero() || b.is_zero()) {
        return F4::zero();
    }
    // Discrete logs base w: 1 -> 0, w -> 1, w^2 -> 2.
    static constexpr std::array<int, 4> kLog{-1, 0, 1, 2};
    static constexpr std::array<F4, 3> kExp{F4::one(), F4::omega(), F4::omega2()};
    return kExp[(kLog[a.code()] + kLog[b.code()]) % 3];
}

F4Vector::F4Vector(std::size_t n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {}

F4Vector F4Vector::from_pauli(std::string_view text) {
    F4Vector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        try {
            v.set(i, F4::from_pauli(text[i]));
        } catch (const ParseError&) {
            throw ParseError("unknown Pauli symbol '" + std::string(1, text[i]) + "' at column " +
                             std::to_string(i + 1));
        }
    }
    return v;
}

F4Vector F4Vector::unit(std::size_t n, std::size_t coordinate, F4 value) {
    if (coordinate >= n) {
        throw DimensionError("coordinate " + std::to_string(coordinate) + " out of range for length " +
                             std::to_string(n));
    }
    F4Vector v(n);
    v.set(coordinate, value);
    return v;
}

void F4Vector::set(std::size_t i, F4 value) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    x_[i >> 6] = value.x() ? (x_[i >> 6] | bit) : (x_[i >> 6] & ~bit);
    z_[i >> 6] = value.z() ? (z_[i >> 6] | bit) : (z_[i >> 6] & ~bit);
}

std::size_t F4Vector::weight() const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < x_.size(); ++k) {
        total += static_cast<std::size_t>(std::popcount(x_[k] | z_[k]));
    }
    return total;
}

bool F4Vector::is_zero() const {
    for (std::size_t k = 0; k < x_.size(); ++k) {
        if ((x_[k] | z_[k]) != 0) {
            return false;
        }
    }
    return true;
}

F4Vector& F4Vector::operator+=(const F4Vector& other) {
    require_same_length(*this, other, "add");
    for (std::size_t k = 0; k < x_.size(); ++k) {
        x_[k] ^= other.x_[k];
        z_[k] ^= other.z_[k];
    }
    return *this;
}

BitVector F4Vector::to_binary() const {
    BitVector out(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        F4 s = (*this)[i];
        if (s.x()) out.set(i, true);
        if (s.z()) out.set(n_ + i, true);
    }
    return out;
}

F4Vector F4Vector::from_binary(const BitVector& bits) {
    if (bits.size() % 2 != 0) {
        throw DimensionError("binary expansion must have even length");
    }
    std::size_t n = bits.size() / 2;
    F4Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, F4::from_bits(bits.get(i), bits.get(n + i)));
    }
    return v;
}

std::string F4Vector::to_pauli() const {
    std::string out(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = (*this)[i].pauli();
    }
    return out;
}

bool trace_inner_product(const F4Vector& u, const F4Vector& v) {
    require_same_length(u, v, "trace_inner_product");
    auto ux = u.x_words(), uz = u.z_words(), vx = v.x_words(), vz = v.z_words();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < ux.size(); ++k) {
        acc ^= (ux[k] & vz[k]) ^ (uz[k] & vx[k]);
    }
    return std::popcount(acc) & 1;
}

bool star_inner_product(const HybridVector& u, const HybridVector& v) {
    if (u.data.size() != v.data.size() || u.tail.size() != v.tail.size()) {
        throw DimensionError("star_inner_product: shape (" + std::to_string(u.data.size()) + "," +
                             std::to_string(u.tail.size()) + ") vs (" + std::to_string(v.data.size()) + "," +
                             std::to_string(v.tail.size()) + ")");
    }
    return trace_inner_product(u.data, v.data) ^ u.tail.dot(v.tail);
}

BitVector syndrome(std::span<const F4Vector> rows, const F4Vector& e) {
    BitVector s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (trace_inner_product(rows[i], e)) {
            s.set(i, true);
        }
    }
    return s;
}

std::size_t f2_rank(std::span<const F4Vector> rows) {
    if (rows.empty()) {
        return 0;
    }
    BinarySpan span(2 * rows.front().size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) {
            throw DimensionError("f2_rank: rows have different lengths");
        }
        span.insert(r.to_binary());
    }
    return span.rank();
}

namespace {

std::size_t lowest_set_bit(const BitVector& v) {
    auto words = v.words();
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k] != 0) {
            return k * 64 + static_cast<std::size_t>(std::countr_zero(words[k]));
        }
    }
    return v.size();
}

}  // namespace

void BinarySpan::reduce(BitVector& v) const {
    if (v.size() != num_bits_) {
        throw DimensionError("BinarySpan: vector length " + std::to_string(v.size()) + " vs " +
                             std::to_string(num_bits_));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
}

bool BinarySpan::contains(BitVector v) const {
    reduce(v);
    return v.is_zero();
}

bool BinarySpan::insert(BitVector v) {
    reduce(v);
    if (v.is_zero()) {
        return false;
    }
    std::size_t pivot = lowest_set_bit(v);
    // Keep the basis fully reduced: clear the new pivot from existing rows.
    for (auto& row : rows_) {
        if (row.get(pivot)) {
            row ^= v;
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<BitVector> f2_left_null_space(std::span<const BitVector> rows) {
    std::size_t count = rows.size();
    if (count == 0) {
        return {};
    }
    std::size_t width = rows.front().size();
    // Row-reduce [rows | I]; rows whose left part vanishes record a dependency.
    std::vector<BitVector> left(rows.begin(), rows.end());
    std::vector<BitVector> right;
    right.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (left[i].size() != width) {
            throw DimensionError("f2_left_null_space: ragged rows");
        }
        BitVector e(count);
        e.set(i, true);
        right.push_back(std::move(e));
    }
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < count; ++col) {
        std::size_t pick = next;
        while (pick < count && !left[pick].get(col)) {
            ++pick;
        }
        if (pick == count) {
            continue;
        }
        std::swap(left[pick], left[next]);
        std::swap(right[pick], right[next]);
        for (std::size_t i = 0; i < count; ++i) {
            if (i != next && left[i].get(col)) {
                left[i] ^= left[next];
                right[i] ^= right[next];
            }
        }
        ++next;
    }
    // Dependencies come out in arbitrary order; return them in reduced echelon form.
    std::vector<BitVector> rref(right.begin() + static_cast<std::ptrdiff_t>(next), right.end());
    std::size_t r = 0;
    for (std::size_t col = 0; col < count && r < rref.size(); ++col) {
        std::size_t pick = r;
        while (pick < rref.size() && !rref[pick].get(col)) {
            ++pick;
        }
        if (pick == rref.size()) {
            continue;
        }
        std::swap(rref[pick], rref[r]);
        for (std::size_t i = 0; i < rref.size(); ++i) {
            if (i != r && rref[i].get(col)) {
                rref[i] ^= rref[r];
            }
        }
        ++r;
    }
    rref.resize(r);
    return rref;
}

}  // namespace qdsc
