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

#ifndef QDSC_CODES_H
#define QDSC_CODES_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdsc/gf4.h"

namespace qdsc {

/// Caps for exhaustive searches over low-weight error vectors.
struct EnumerationLimits {
    std::size_t max_n = 16;
    std::size_t max_weight = 5;
};

/// F2-linear span of independent F4 rows: an additive (n, 2^rows)_4 code.
class AdditiveCode {
   public:
    AdditiveCode() = default;
    /// Throws DimensionError on ragged rows and RankError on dependent rows.
    AdditiveCode(std::size_t n, std::vector<F4Vector> rows);

    std::size_t length() const { return n_; }
    /// Number of generators, i.e. the F2 dimension of the span.
    std::size_t dimension() const { return rows_.size(); }
    std::span<const F4Vector> rows() const { return rows_; }

    bool contains(const F4Vector& v) const;
    /// Every element of the span, zero first, in Gray-code order. dimension() <= 25.
    std::vector<F4Vector> elements() const;

   private:
    std::size_t n_ = 0;
    std::vector<F4Vector> rows_;
    BinarySpan span_;
};

/// Stabilizer code given by m = n - k commuting, independent generators.
class StabilizerCode {
   public:
    StabilizerCode() = default;

    std::size_t n() const { return code_.length(); }
    std::size_t m() const { return code_.dimension(); }
    std::size_t k() const { return n() - m(); }
    std::span<const F4Vector> rows() const { return code_.rows(); }
    const AdditiveCode& code() const { return code_; }

   private:
    friend StabilizerCode make_stabilizer(std::vector<F4Vector> rows);
    explicit StabilizerCode(AdditiveCode code) : code_(std::move(code)) {}
    AdditiveCode code_;
};

/// Subsystem code: gauge code D and its center C = D cap D^perp.
class SubsystemCode {
   public:
    SubsystemCode() = default;

    std::size_t n() const { return gauge_.length(); }
    /// m = n - k; the stabilizer has m - r generators and the gauge m + r.
    std::size_t m() const { return (gauge_.dimension() + stabilizer_.dimension()) / 2; }
    std::size_t k() const { return n() - m(); }
    std::size_t r() const { return (gauge_.dimension() - stabilizer_.dimension()) / 2; }

    const AdditiveCode& gauge() const { return gauge_; }
    const AdditiveCode& stabilizer() const { return stabilizer_; }
    std::span<const F4Vector> stabilizer_rows() const { return stabilizer_.rows(); }

   private:
    friend SubsystemCode make_subsystem(std::vector<F4Vector> gauge_rows);
    SubsystemCode(AdditiveCode gauge, AdditiveCode stabilizer)
        : gauge_(std::move(gauge)), stabilizer_(std::move(stabilizer)) {}
    AdditiveCode gauge_;
    AdditiveCode stabilizer_;
};

using QuantumCode = std::variant<StabilizerCode, SubsystemCode>;

/// Validates and wraps stabilizer generators.
///
/// Throws DimensionError for empty or ragged input, CommutationError when two
/// rows anticommute, and RankError when the rows are dependent.
StabilizerCode make_stabilizer(std::vector<F4Vector> rows);

/// Builds a subsystem code from independent gauge generators. The stabilizer
/// rows are a reduced-echelon basis of D cap D^perp expressed in the gauge rows.
SubsystemCode make_subsystem(std::vector<F4Vector> gauge_rows);

/// Minimum weight of C^perp \ C. Throws CapacityError when n or the distance
/// exceeds `limits`.
std::size_t min_distance(const StabilizerCode& code, const EnumerationLimits& limits = {});
/// Minimum weight of C^perp \ D.
std::size_t min_distance(const SubsystemCode& code, const EnumerationLimits& limits = {});
std::size_t min_distance(const QuantumCode& code, const EnumerationLimits& limits = {});

/// True iff some nonzero stabilizer element has weight below `distance`.
bool is_impure(const StabilizerCode& code, std::size_t distance);

/// Nonzero stabilizer elements of weight <= max_weight, ordered by weight and
/// then lexicographically (supports ascending, symbols 1 < w < w^2).
std::vector<F4Vector> low_weight_stabilizers(const StabilizerCode& code, std::size_t max_weight);

/// Rows whose syndromes define the code: the stabilizer generators.
std::span<const F4Vector> measured_rows(const QuantumCode& code);
std::size_t code_length(const QuantumCode& code);

namespace detail {
/// is_impure by low-weight enumeration plus membership (the path used for
/// large m). Exposed for cross-checking against span enumeration.
bool is_impure_by_enumeration(const StabilizerCode& code, std::size_t distance);
/// is_impure by walking the full span (m <= 25).
bool is_impure_by_span(const StabilizerCode& code, std::size_t distance);
}  // namespace detail

}  // namespace qdsc

#endif
