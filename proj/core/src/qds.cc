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

#include "qdsc/qds.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "enumeration.h"
#include "qdsc/errors.h"

namespace qdsc {

std::string QDSParams::notation() const {
    std::string out = "[[" + std::to_string(n) + "," + std::to_string(k) + ",";
    if (subsystem) {
        out += std::to_string(r) + ",";
    }
    return out + std::to_string(d) + ":" + std::to_string(l) + "]]";
}

QDSCode::QDSCode(QuantumCode base, BinaryLinearCode sm, std::vector<F4Vector> measured)
    : base_(std::move(base)), sm_(std::move(sm)), measured_(std::move(measured)) {
    weights_.reserve(measured_.size());
    for (const auto& v : measured_) {
        weights_.push_back(v.weight());
    }
}

std::size_t QDSCode::total_measurements() const {
    return std::accumulate(weights_.begin(), weights_.end(), std::size_t{0});
}

QDSCode build_qds(QuantumCode base, BinaryLinearCode sm) {
    auto rows = measured_rows(base);
    if (sm.dimension() != rows.size()) {
        throw DimensionError("SM code dimension " + std::to_string(sm.dimension()) + " does not match the " +
                             std::to_string(rows.size()) + " measured base rows");
    }
    std::size_t n = code_length(base);
    std::vector<F4Vector> measured(rows.begin(), rows.end());
    for (std::size_t j = 0; j < sm.redundancy(); ++j) {
        F4Vector b(n);
        for (std::size_t i = 0; i < sm.dimension(); ++i) {
            if (sm.parity_entry(i, j)) {
                b += rows[i];
            }
        }
        measured.push_back(std::move(b));
    }
    return QDSCode(std::move(base), std::move(sm), std::move(measured));
}

BitVector extended_syndrome(const QDSCode& qds, const F4Vector& e) {
    if (e.size() != qds.n()) {
        throw DimensionError("extended_syndrome: error length " + std::to_string(e.size()) + ", expected " +
                             std::to_string(qds.n()));
    }
    return syndrome(qds.measured_elements(), e);
}

namespace {

const AdditiveCode& excluded_span(const QuantumCode& code) {
    if (const auto* s = std::get_if<StabilizerCode>(&code)) {
        return s->code();
    }
    return std::get<SubsystemCode>(code).gauge();
}

}  // namespace

std::size_t qds_min_distance(const QDSCode& qds, const EnumerationLimits& limits) {
    std::size_t n = qds.n();
    if (n > limits.max_n) {
        throw CapacityError("QDS distance enumeration limited to n <= " + std::to_string(limits.max_n) + ", got " +
                            std::to_string(n));
    }
    const auto& excluded = excluded_span(qds.base());
    auto table = detail::symbol_syndromes(qds.measured_elements(), n);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t w = 1; w <= n && w < best; ++w) {
        if (w > limits.max_weight) {
            throw CapacityError("QDS distance not certified within weight " + std::to_string(limits.max_weight));
        }
        detail::for_each_error_of_weight(table, w, [&](const detail::ErrorView& err, std::uint64_t mask) {
            std::size_t total = w + static_cast<std::size_t>(std::popcount(mask));
            if (total < best && (mask != 0 || !excluded.contains(err.materialize(n)))) {
                best = total;
            }
            return best > w;
        });
    }
    return best;
}

QDSParams qds_params(const QDSCode& qds, const EnumerationLimits& limits) {
    QDSParams p;
    p.n = qds.n();
    p.l = qds.l();
    p.d = qds_min_distance(qds, limits);
    std::visit(
        [&](const auto& c) {
            p.k = c.k();
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SubsystemCode>) {
                p.r = c.r();
                p.subsystem = true;
            }
        },
        qds.base());
    return p;
}

QDSCode augment_parity(const QuantumCode& base, const EnumerationLimits& limits) {
    std::size_t d = min_distance(base, limits);
    if (d < 3) {
        throw PreconditionError("parity augmentation needs base distance >= 3, got " + std::to_string(d));
    }
    return build_qds(base, BinaryLinearCode::parity(measured_rows(base).size()));
}

bool verifies_zero_redundancy(std::span<const F4Vector> rows, const EnumerationLimits& limits) {
    auto code = make_stabilizer(std::vector<F4Vector>(rows.begin(), rows.end()));
    auto qds = build_qds(code, BinaryLinearCode::identity(code.m()));
    return qds_min_distance(qds, limits) >= 3;
}

namespace {

std::uint64_t reverse_low_bits(std::uint64_t v, std::size_t width) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < width; ++i) {
        out |= ((v >> i) & 1) << (width - 1 - i);
    }
    return out;
}

struct SingleError {
    F4Vector error;
    std::uint64_t mask;
    bool anticommutes;
};

}  // namespace

ImpureSearchResult impure_zero_redundancy(const StabilizerCode& base, const EnumerationLimits& limits) {
    std::size_t d = min_distance(base, limits);
    if (d != 3) {
        throw PreconditionError("zero-redundancy search needs distance 3, got " + std::to_string(d));
    }
    auto pivots = low_weight_stabilizers(base, 2);
    if (pivots.empty()) {
        throw PreconditionError("code is pure");
    }
    std::size_t n = base.n();
    std::size_t m = base.m();
    if (m >= 64) {
        throw CapacityError("zero-redundancy search supports m < 64");
    }
    ImpureSearchResult result;
    for (const auto& pivot : pivots) {
        ++result.pivots_tried;
        BinarySpan span(2 * n);
        std::vector<F4Vector> basis{pivot};
        span.insert(pivot.to_binary());
        for (const auto& row : base.rows()) {
            if (span.insert(row.to_binary())) {
                basis.push_back(row);
            }
        }
        std::vector<F4Vector> replaced = basis;
        for (std::size_t i = 1; i < m; ++i) {
            replaced[0] += basis[i];
        }

        auto table = detail::symbol_syndromes(replaced, n);
        std::vector<SingleError> singles;
        bool commuting_ok = true;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t s = 0; s < 3; ++s) {
                F4Vector e = F4Vector::unit(n, j, detail::kNonzeroSymbols[s]);
                bool anti = trace_inner_product(pivot, e);
                std::uint64_t mask = table.masks[j][s];
                if (!anti && std::popcount(mask) < 2 && !base.code().contains(e)) {
                    commuting_ok = false;
                }
                singles.push_back({std::move(e), mask, anti});
            }
        }
        if (!commuting_ok) {
            continue;
        }

        std::uint64_t limit = std::uint64_t{1} << m;
        for (std::size_t w = 0; w <= m; w += 2) {
            // Increasing bit-reversed key is lexicographic string order.
            std::uint64_t key = w == 0 ? 0 : (std::uint64_t{1} << w) - 1;
            while (key < limit) {
                std::uint64_t a = reverse_low_bits(key, m);
                ++result.strings_examined;
                bool ok = std::all_of(singles.begin(), singles.end(), [&](const SingleError& e) {
                    return !e.anticommutes || std::popcount(e.mask ^ a) >= 3;
                });
                if (ok) {
                    std::vector<F4Vector> rows = replaced;
                    for (std::size_t i = 0; i < m; ++i) {
                        if ((a >> i) & 1) {
                            rows[i] += pivot;
                        }
                    }
                    if (f2_rank(rows) != m || !verifies_zero_redundancy(rows, limits)) {
                        throw ConstructionFailure("accepted generator set failed re-verification (pivot " +
                                                  pivot.to_pauli() + ")");
                    }
                    result.rows = std::move(rows);
                    result.pivot = pivot;
                    result.modifier = BitVector::from_mask(a, m);
                    result.basis = std::move(basis);
                    return result;
                }
                if (key == 0) {
                    break;
                }
                std::uint64_t c = key & (~key + 1);
                std::uint64_t r = key + c;
                key = (((r ^ key) >> 2) / c) | r;
            }
        }
    }
    throw ConstructionFailure("no even-weight modifier found after " + std::to_string(result.strings_examined) +
                              " strings over " + std::to_string(result.pivots_tried) + " pivots");
}

std::vector<F4Vector> equivalence_apply(std::span<const F4Vector> rows, const EquivalenceMove& move) {
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    auto check_coordinate = [&](std::size_t c) {
        if (c >= n) {
            throw DimensionError("coordinate " + std::to_string(c) + " out of range for length " + std::to_string(n));
        }
    };
    std::vector<F4Vector> out;
    out.reserve(rows.size());
    std::visit(
        [&](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, PermuteMove>) {
                if (mv.sigma.size() != n) {
                    throw DimensionError("permutation has length " + std::to_string(mv.sigma.size()) +
                                         ", expected " + std::to_string(n));
                }
                std::vector<bool> seen(n, false);
                for (auto t : mv.sigma) {
                    if (t >= n || seen[t]) {
                        throw PreconditionError("sigma is not a permutation");
                    }
                    seen[t] = true;
                }
                for (const auto& row : rows) {
                    F4Vector v(n);
                    for (std::size_t j = 0; j < n; ++j) {
                        v.set(mv.sigma[j], row[j]);
                    }
                    out.push_back(std::move(v));
                }
            } else if constexpr (std::is_same_v<T, ScaleMove>) {
                check_coordinate(mv.coordinate);
                if (mv.scalar.is_zero()) {
                    throw PreconditionError("scaling by zero is not an equivalence");
                }
                for (const auto& row : rows) {
                    F4Vector v = row;
                    v.set(mv.coordinate, row[mv.coordinate] * mv.scalar);
                    out.push_back(std::move(v));
                }
            } else {
                check_coordinate(mv.coordinate);
                for (const auto& row : rows) {
                    F4Vector v = row;
                    v.set(mv.coordinate, row[mv.coordinate].conj());
                    out.push_back(std::move(v));
                }
            }
        },
        move);
    return out;
}

}  // namespace qdsc
