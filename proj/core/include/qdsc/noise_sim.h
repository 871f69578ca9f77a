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

#ifndef QDSC_NOISE_SIM_H
#define QDSC_NOISE_SIM_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdsc/qds.h"

namespace qdsc {

/// Probability that a weight-w stabilizer measurement reports the wrong bit
/// when each single-qubit measurement flips with probability pm: the sum of
/// C(w,j) pm^j (1-pm)^(w-j) over odd j.
double p_err(std::size_t w, double pm);
/// (1 - (1 - 2 pm)^w) / 2.
double p_err_closed_form(std::size_t w, double pm);

/// Failure probability of majority vote over `fold` copies of a bit that
/// flips with probability q; an exact tie counts as a failure.
double majority_failure(std::size_t fold, double q);

/// Decoder for SM-protected parts.
enum class SmDecoder {
    /// Weighted maximum likelihood; an exact likelihood tie is a failure. Default.
    kMaxLikelihood,
    /// Minimum-weight, lexicographically smallest coset leader.
    kCosetLeader,
    /// Weighted maximum likelihood, ties to the lexicographically smallest codeword.
    kMaxLikelihoodLexicographic,
};

std::string_view decoder_name(SmDecoder decoder);
/// Accepts "ml", "coset-leader", "ml-lex". Throws LookupError otherwise.
SmDecoder parse_decoder(std::string_view name);

/// Each stabilizer row measured `fold` times and majority decoded per bit.
struct RepetitionPart {
    std::string label;
    std::vector<F4Vector> rows;
    std::size_t fold = 1;
};

/// Rows protected by an SM code; every measured element is measured once.
struct SmPart {
    std::string label;
    QDSCode qds;
    SmDecoder decoder = SmDecoder::kMaxLikelihood;
};

using SchemePart = std::variant<RepetitionPart, SmPart>;

/// Parts are decoded independently; the syndrome is wrong iff any part fails.
struct MeasurementScheme {
    std::string name;
    std::vector<SchemePart> parts;

    std::size_t total_measurements() const;
    /// Largest SM-part pattern space, 2^length (1 when there are no SM parts).
    std::uint64_t enumeration_size() const;
};

std::size_t part_measurements(const SchemePart& part);
/// Per-bit flip probabilities q_j = p_err(weight_j, pm), one per measured
/// element (repetition parts list each row once).
std::vector<double> part_flip_probabilities(const SchemePart& part, double pm);

enum class SimMethod { kExact, kMonteCarlo };
std::string_view method_name(SimMethod method);

struct SimResult {
    double p_se = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    SimMethod method = SimMethod::kExact;
    std::uint64_t seed = 0;
};

/// Largest SM-part length pse_exact enumerates.
inline constexpr std::size_t kExactMaxLength = 25;

/// Exact p_se.
///
/// Repetition parts use per-bit majority_failure. An SM part sums, over each
/// coset of the SM code, the probability of every pattern the decoder does
/// not map back to the zero word: everything but the leader for coset-leader
/// decoding, everything but a unique most likely pattern for ML with tie
/// failure. For lexicographic ML the failure depends on the transmitted word;
/// the value returned is its average over uniformly random syndromes, which
/// equals the per-coset mass outside one most likely pattern. Parts combine as
/// 1 - prod(1 - fail), evaluated without cancellation. Throws CapacityError
/// when an SM part is longer than kExactMaxLength.
SimResult pse_exact(const MeasurementScheme& scheme, double pm);

struct MonteCarloOptions {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 1 << 16;
    /// 0 = hardware concurrency. Never changes the result.
    unsigned threads = 0;
};

/// Samples independent flips of every measured bit and runs the part
/// decoders. Trials are split into chunks of chunk_size; chunk c draws from
/// std::mt19937_64 seeded with chunk_seed(seed, c), so the estimate depends
/// only on (seed, trials, chunk_size). stderr = sqrt(p (1 - p) / trials).
SimResult pse_monte_carlo(const MeasurementScheme& scheme, double pm, const MonteCarloOptions& options);

/// splitmix64 finalizer applied to seed + (chunk + 1) * 0x9E3779B97F4A7C15.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

enum class SweepMethod { kExact, kMonteCarlo, kAuto };
/// Patterns up to which kAuto picks the exact method.
inline constexpr std::uint64_t kAutoExactLimit = std::uint64_t{1} << 20;

struct SweepRow {
    double log2_pm = 0.0;
    double log2_pse = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::size_t total_measurements = 0;
    std::string scheme;
    SimMethod method = SimMethod::kExact;
};

/// One row per grid point (log2 pm), in grid order.
std::vector<SweepRow> sweep(const MeasurementScheme& scheme, const std::vector<double>& log2_pm_grid,
                            SweepMethod method, const MonteCarloOptions& options = {});

/// Header `log2_pm,log2_pse,stderr,trials,total_measurements,scheme,method`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qdsc

#endif
