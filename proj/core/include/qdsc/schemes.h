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

#ifndef QDSC_SCHEMES_H
#define QDSC_SCHEMES_H

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdsc/noise_sim.h"

namespace qdsc {

/// Every measured row of `base` repeated `fold` times.
MeasurementScheme repetition_scheme(std::string name, const QuantumCode& base, std::size_t fold);

/// Splits the measured rows of a CSS code into X-type and Z-type parts and
/// protects each with its own SM code. Row i of an SM generator belongs to
/// generator order[i] of its type (identity when the order is empty).
/// Throws PreconditionError if a measured row mixes X and Z.
struct SmSchemeSpec {
    BinaryLinearCode x_code;
    BinaryLinearCode z_code;
    std::vector<std::size_t> x_order;
    std::vector<std::size_t> z_order;
    SmDecoder decoder = SmDecoder::kMaxLikelihood;
};
MeasurementScheme sm_scheme(std::string name, const QuantumCode& base, const SmSchemeSpec& spec);

/// The two generator orders used for the Shor Z part of the 102/108
/// measurement schemes (generators listed as Z1Z2, Z2Z3, Z4Z5, Z5Z6, Z7Z8, Z8Z9).
inline constexpr std::array<std::size_t, 6> kShorZOrderA{0, 1, 2, 3, 4, 5};
inline constexpr std::array<std::size_t, 6> kShorZOrderB{0, 2, 4, 1, 3, 5};

/// Named schemes:
///   fig1-shor-6fold, fig1-bs-6fold   6-fold repetition of every generator
///   fig1-shor-sm     X: cw-12-2-8, Z: grassl-18-6-8 (import)
///   fig1-bs-sm       cw-12-2-8 on both types
///   fig2-shor-204    X: cw-17-2-11, Z: grassl-25-6-11 (import), order A
///   fig2-shor-216    X: cw-18-2-12, Z: grassl-25-6-11 (import), order B
///   fig2-bs-204      cw-17-2-11 on both types
///   fig2-bs-216      cw-18-2-12 on both types
std::vector<std::string> scheme_names();

/// Throws LookupError for unknown names and AvailabilityError when an
/// imported SM code is missing.
MeasurementScheme build_scheme(std::string_view name, const std::optional<std::filesystem::path>& data_dir = {},
                               SmDecoder decoder = SmDecoder::kMaxLikelihood);

std::vector<MeasurementScheme> figure1_schemes(const std::optional<std::filesystem::path>& data_dir = {},
                                               SmDecoder decoder = SmDecoder::kMaxLikelihood);
std::vector<MeasurementScheme> figure2_schemes(const std::optional<std::filesystem::path>& data_dir = {},
                                               SmDecoder decoder = SmDecoder::kMaxLikelihood);

}  // namespace qdsc

#endif
