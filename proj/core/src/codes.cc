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

#include "qdsc/codes.h"

#include <bit>
#include <optional>

#include "enumeration.h"
#include "qdsc/errors.h"

namespace qdsc {

AdditiveCode::AdditiveCode(std::size_t n, std::vector<F4Vector> rows) : n_(n), rows_(std::move(rows)), span_(2 * n) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != n_) {
            throw DimensionError("row " + std::to_string(i + 1) + " has length " + std::to_string(rows_[i].size()) +
                                 ", expected " + std::to_string(n_));
        }
        if (!span_.insert(rows_[i].to_binary())) {
            throw RankError("row " + std::to_string(i + 1) + " (" + rows_[i].to_pauli() +
                            ") is dependent on the preceding rows");
        }
    }
}

bool AdditiveCode::contains(const F4Vector& v) const {
    if (v.size() != n_) {
        throw DimensionError("membership: length " + std::to_string(v.size()) + " vs " + std::to_string(n_));
    }
    return span_.contains(v.to_binary());
}

std::vector<F4Vector> AdditiveCode::elements() const {
    if (rows_.size() > 25) {
        throw CapacityError("span enumeration limited to 25 generators, got " + std::to_string(rows_.size()));
    }
    std::size_t count = std::size_t{1} << rows_.size();
    std::vector<F4Vector> out;
    out.reserve(count);
    F4Vector cur(n_);
    out.push_back(cur);
    for (std::size_t i = 1; i < count; ++i) {
        cur += rows_[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(cur);
    }
    return out;
}

StabilizerCode make_stabilizer(std::vector<F4Vector> rows) {
    if (rows.empty()) {
        throw DimensionError("stabilizer code needs at least one generator");
    }
    std::size_t n = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) {
            throw DimensionError("row " + std::to_string(i + 1) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (trace_inner_product(rows[i], rows[j])) {
                throw CommutationError("generators " + std::to_string(i + 1) + " (" + rows[i].to_pauli() + ") and " +
                                       std::to_string(j + 1) + " (" + rows[j].to_pauli() + ") anticommute");
            }
        }
    }
    return StabilizerCode(AdditiveCode(n, std::move(rows)));
}

SubsystemCode make_subsystem(std::vector<F4Vector> gauge_rows) {
    if (gauge_rows.empty()) {
        throw DimensionError("subsystem code needs at least one gauge generator");
    }
    std::size_t n = gauge_rows.front().size();
    AdditiveCode gauge(n, gauge_rows);

    // x in F2^g gives sum x_i d_i in D; it lies in D^perp iff G x = 0 where G
    // is the (symmetric) trace-product Gram matrix of the gauge rows.
    std::size_t g = gauge_rows.size();
    std::vector<BitVector> gram(g, BitVector(g));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            if (trace_inner_product(gauge_rows[i], gauge_rows[j])) {
                gram[i].set(j, true);
            }
        }
    }
    std::vector<F4Vector> center;
    for (const auto& coeffs : f2_left_null_space(gram)) {
        F4Vector v(n);
        for (std::size_t i = 0; i < g; ++i) {
            if (coeffs.get(i)) {
                v += gauge_rows[i];
            }
        }
        center.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < center.size(); ++i) {
        for (std::size_t j = 0; j < gauge_rows.size(); ++j) {
            if (trace_inner_product(center[i], gauge_rows[j])) {
                throw StructureError("computed center element " + center[i].to_pauli() +
                                     " anticommutes with gauge row " + std::to_string(j + 1));
            }
        }
    }
    if ((g - center.size()) % 2 != 0 || (g + center.size()) / 2 > n) {
        throw StructureError("gauge group has inconsistent subsystem parameters");
    }
    AdditiveCode stabilizer(n, std::move(center));
    return SubsystemCode(std::move(gauge), std::move(stabilizer));
}

namespace {

// Smallest weight of a vector with zero syndrome against `rows` that is not
// in `excluded`.
std::size_t min_weight_outside(std::span<const F4Vector> rows, const AdditiveCode& excluded,
                               const EnumerationLimits& limits) {
    std::size_t n = excluded.length();
    if (n > limits.max_n) {
        throw CapacityError("distance enumeration limited to n <= " + std::to_string(limits.max_n) + ", got " +
                            std::to_string(n));
    }
    auto table = detail::symbol_syndromes(rows, n);
    for (std::size_t w = 1; w <= std::min(limits.max_weight, n); ++w) {
        bool found = false;
        detail::for_each_error_of_weight(table, w, [&](const detail::ErrorView& err, std::uint64_t mask) {
            if (mask == 0 && !excluded.contains(err.materialize(n))) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            return w;
        }
    }
    throw CapacityError("no nontrivial logical operator of weight <= " + std::to_string(limits.max_weight));
}

}  // namespace

std::size_t min_distance(const StabilizerCode& code, const EnumerationLimits& limits) {
    return min_weight_outside(code.rows(), code.code(), limits);
}

std::size_t min_distance(const SubsystemCode& code, const EnumerationLimits& limits) {
    return min_weight_outside(code.stabilizer_rows(), code.gauge(), limits);
}

std::size_t min_distance(const QuantumCode& code, const EnumerationLimits& limits) {
    return std::visit([&](const auto& c) { return min_distance(c, limits); }, code);
}

std::vector<F4Vector> low_weight_stabilizers(const StabilizerCode& code, std::size_t max_weight) {
    std::size_t n = code.n();
    auto table = detail::symbol_syndromes(code.rows(), n);
    std::vector<F4Vector> out;
    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        detail::for_each_error_of_weight(table, w, [&](const detail::ErrorView& err, std::uint64_t mask) {
            if (mask == 0) {
                F4Vector v = err.materialize(n);
                if (code.code().contains(v)) {
                    out.push_back(std::move(v));
                }
            }
            return true;
        });
    }
    return out;
}

namespace detail {

bool is_impure_by_enumeration(const StabilizerCode& code, std::size_t distance) {
    if (distance <= 1) {
        return false;
    }
    return !low_weight_stabilizers(code, distance - 1).empty();
}

bool is_impure_by_span(const StabilizerCode& code, std::size_t distance) {
    for (const auto& v : code.code().elements()) {
        if (!v.is_zero() && v.weight() < distance) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

bool is_impure(const StabilizerCode& code, std::size_t distance) {
    if (code.m() <= 20) {
        return detail::is_impure_by_span(code, distance);
    }
    return detail::is_impure_by_enumeration(code, distance);
}

std::span<const F4Vector> measured_rows(const QuantumCode& code) {
    if (const auto* s = std::get_if<StabilizerCode>(&code)) {
        return s->rows();
    }
    return std::get<SubsystemCode>(code).stabilizer_rows();
}

std::size_t code_length(const QuantumCode& code) {
    return std::visit([](const auto& c) { return c.n(); }, code);
}

}  // namespace qdsc
