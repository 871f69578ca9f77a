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

#ifndef QDSC_QDS_H
#define QDSC_QDS_H

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qdsc/bitvector.h"
#include "qdsc/codes.h"
#include "qdsc/gf4.h"
#include "qdsc/sm_codes.h"

namespace qdsc {

/// Parameters [[n,k,d:l]], or [[n,k,r,d:l]] for subsystem codes.
struct QDSParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t d = 0;
    std::size_t l = 0;
    bool subsystem = false;

    std::string notation() const;
};

/// A stabilizer or subsystem code together with the SM code that decides
/// which stabilizer elements are measured.
///
/// Measured element j is the product of base rows selected by column j of the
/// SM code's systematic generator [I_m | A], so elements [0, m) are the base
/// rows themselves and element m + j is b_j = sum_i a_{i,j} g_i. For
/// subsystem codes only the m - r stabilizer rows are protected; gauge
/// operators are never measured.
class QDSCode {
   public:
    const QuantumCode& base() const { return base_; }
    const BinaryLinearCode& sm() const { return sm_; }
    std::size_t n() const { return code_length(base_); }
    /// Number of protected base rows.
    std::size_t m() const { return sm_.dimension(); }
    std::size_t l() const { return sm_.redundancy(); }
    std::span<const F4Vector> measured_elements() const { return measured_; }
    const std::vector<std::size_t>& weights() const { return weights_; }
    /// Sum of measured-element Pauli weights: single-qubit measurements per round.
    std::size_t total_measurements() const;

   private:
    friend QDSCode build_qds(QuantumCode base, BinaryLinearCode sm);
    QDSCode(QuantumCode base, BinaryLinearCode sm, std::vector<F4Vector> measured);

    QuantumCode base_;
    BinaryLinearCode sm_;
    std::vector<F4Vector> measured_;
    std::vector<std::size_t> weights_;
};

/// Throws DimensionError when sm.dimension() differs from the number of
/// measured base rows.
QDSCode build_qds(QuantumCode base, BinaryLinearCode sm);

/// Bit j is measured_elements[j] * e; equals (s, s A) for the base syndrome s.
BitVector extended_syndrome(const QDSCode& qds, const F4Vector& e);

/// min over e outside C (stabilizer) or D (subsystem) of wt(e) + wt(extended_syndrome(e)).
///
/// The dual of the extended code under the star product is exactly
/// {(e, extended_syndrome(e))}, so this enumerates data errors by increasing
/// weight and stops once the weight reaches the running minimum.
std::size_t qds_min_distance(const QDSCode& qds, const EnumerationLimits& limits = {});

/// Parameters with d computed by qds_min_distance.
QDSParams qds_params(const QDSCode& qds, const EnumerationLimits& limits = {});

/// Attaches the [m+1, m, 2] parity SM code, so the extra measurement is the
/// product of all protected rows. Throws PreconditionError when the base
/// distance is below 3.
QDSCode augment_parity(const QuantumCode& base, const EnumerationLimits& limits = {});

/// Outcome of the zero-redundancy generator search for impure codes.
struct ImpureSearchResult {
    /// New generators, rank m, same span as the input rows.
    std::vector<F4Vector> rows;
    /// Stabilizer element of weight <= 2 used as the pivot.
    F4Vector pivot;
    /// Even-weight string: rows i with modifier[i] = 1 had the pivot added.
    BitVector modifier;
    /// Row basis (pivot first) the modifier indexes, before modification.
    std::vector<F4Vector> basis;
    std::size_t strings_examined = 0;
    std::size_t pivots_tried = 0;
};

/// Finds generators making an impure distance-3 stabilizer code a
/// [[n,k,3:0]] QDS code.
///
/// For each stabilizer element p of weight <= 2 (weight first, then
/// enumeration order), builds a row basis starting with p, replaces p by the
/// sum of all basis rows, and tries even-weight strings a in increasing
/// weight (lexicographic within a weight), adding p to the rows selected by
/// a. A string is accepted when every single-symbol error anticommuting with
/// p has syndrome weight >= 3 and every commuting one has weight >= 2 or lies
/// in the stabilizer. The result is re-verified with qds_min_distance.
///
/// Throws PreconditionError for pure codes or distance != 3, and
/// ConstructionFailure if no string works.
ImpureSearchResult impure_zero_redundancy(const StabilizerCode& base, const EnumerationLimits& limits = {});

/// True when `rows` generate a stabilizer code whose own rows (l = 0) give
/// QDS distance >= 3.
bool verifies_zero_redundancy(std::span<const F4Vector> rows, const EnumerationLimits& limits = {});

/// Coordinate permutation: old coordinate j moves to sigma[j].
struct PermuteMove {
    std::vector<std::size_t> sigma;
};
/// Multiply one coordinate by a nonzero scalar.
struct ScaleMove {
    std::size_t coordinate = 0;
    F4 scalar = F4::one();
};
/// Conjugate one coordinate (swaps w and w^2).
struct ConjugateMove {
    std::size_t coordinate = 0;
};
using EquivalenceMove = std::variant<PermuteMove, ScaleMove, ConjugateMove>;

/// Applies a code equivalence to every row. Throws DimensionError for a bad
/// coordinate or a sigma of the wrong length, PreconditionError for a zero
/// scalar or a sigma that is not a permutation.
std::vector<F4Vector> equivalence_apply(std::span<const F4Vector> rows, const EquivalenceMove& move);

}  // namespace qdsc

#endif
