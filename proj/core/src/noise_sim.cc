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

#include "qdsc/noise_sim.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

#include <boost/math/special_functions/binomial.hpp>

#include "qdsc/errors.h"

namespace qdsc {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw PreconditionError(std::string(what) + " must lie in [0, 1]");
    }
}

// C(n, j) q^j (1-q)^(n-j).
double binomial_term(std::size_t n, std::size_t j, double q) {
    return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
           std::pow(q, static_cast<double>(j)) * std::pow(1.0 - q, static_cast<double>(n - j));
}

}  // namespace

double p_err(std::size_t w, double pm) {
    check_probability(pm, "p_m");
    double total = 0.0;
    for (std::size_t j = 1; j <= w; j += 2) {
        total += binomial_term(w, j, pm);
    }
    return total;
}

double p_err_closed_form(std::size_t w, double pm) {
    check_probability(pm, "p_m");
    return (1.0 - std::pow(1.0 - 2.0 * pm, static_cast<double>(w))) / 2.0;
}

double majority_failure(std::size_t fold, double q) {
    check_probability(q, "q");
    if (fold == 0) {
        throw PreconditionError("repetition fold must be >= 1");
    }
    double total = 0.0;
    for (std::size_t j = (fold + 1) / 2; j <= fold; ++j) {
        total += binomial_term(fold, j, q);
    }
    return total;
}

std::string_view decoder_name(SmDecoder decoder) {
    switch (decoder) {
        case SmDecoder::kMaxLikelihood:
            return "ml";
        case SmDecoder::kCosetLeader:
            return "coset-leader";
        case SmDecoder::kMaxLikelihoodLexicographic:
            return "ml-lex";
    }
    return "?";
}

SmDecoder parse_decoder(std::string_view name) {
    for (auto d : {SmDecoder::kMaxLikelihood, SmDecoder::kCosetLeader, SmDecoder::kMaxLikelihoodLexicographic}) {
        if (decoder_name(d) == name) {
            return d;
        }
    }
    throw LookupError("unknown decoder '" + std::string(name) + "' (expected ml, coset-leader or ml-lex)");
}

std::size_t part_measurements(const SchemePart& part) {
    if (const auto* rep = std::get_if<RepetitionPart>(&part)) {
        std::size_t total = 0;
        for (const auto& r : rep->rows) {
            total += r.weight();
        }
        return total * rep->fold;
    }
    return std::get<SmPart>(part).qds.total_measurements();
}

std::size_t MeasurementScheme::total_measurements() const {
    std::size_t total = 0;
    for (const auto& p : parts) {
        total += part_measurements(p);
    }
    return total;
}

std::uint64_t MeasurementScheme::enumeration_size() const {
    std::uint64_t out = 1;
    for (const auto& p : parts) {
        if (const auto* sm = std::get_if<SmPart>(&p)) {
            std::size_t len = sm->qds.sm().length();
            out = std::max(out, len >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << len);
        }
    }
    return out;
}

std::vector<double> part_flip_probabilities(const SchemePart& part, double pm) {
    std::vector<double> q;
    if (const auto* rep = std::get_if<RepetitionPart>(&part)) {
        for (const auto& r : rep->rows) {
            q.push_back(p_err(r.weight(), pm));
        }
    } else {
        for (auto w : std::get<SmPart>(part).qds.weights()) {
            q.push_back(p_err(w, pm));
        }
    }
    return q;
}

std::string_view method_name(SimMethod method) { return method == SimMethod::kExact ? "exact" : "mc"; }

namespace {

double repetition_failure_exact(const RepetitionPart& part, const std::vector<double>& q) {
    double log_success = 0.0;
    for (double qi : q) {
        log_success += std::log1p(-majority_failure(part.fold, qi));
    }
    return -std::expm1(log_success);
}

double sm_failure_exact(const SmPart& part, const std::vector<double>& q) {
    const auto& code = part.qds.sm();
    std::size_t n = code.length();
    if (n > kExactMaxLength) {
        throw CapacityError("exact evaluation limited to SM length " + std::to_string(kExactMaxLength) + ", got " +
                            std::to_string(n));
    }
    std::size_t m = code.dimension();
    std::size_t l = code.redundancy();
    auto costs = ml_bit_costs(q);
    std::size_t members = std::size_t{1} << m;
    std::vector<std::uint64_t> codewords(members);
    for (std::size_t msg = 0; msg < members; ++msg) {
        codewords[msg] = code.encode_mask(msg);
    }
    std::vector<double> prob(members), cost(members);
    double failure = 0.0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << l); ++s) {
        // With H = [A^T | I], the pattern carrying s on the parity bits has syndrome s.
        std::uint64_t rep = s << m;
        std::size_t best = 0;
        for (std::size_t c = 0; c < members; ++c) {
            std::uint64_t e = rep ^ codewords[c];
            double p = 1.0;
            double k = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if ((e >> j) & 1) {
                    p *= q[j];
                    k += costs[j];
                } else {
                    p *= 1.0 - q[j];
                }
            }
            prob[c] = p;
            cost[c] = k;
            if (k < cost[best]) {
                best = c;
            }
        }
        std::size_t keep = members;  // member decoded correctly, or none
        switch (part.decoder) {
            case SmDecoder::kCosetLeader: {
                std::uint64_t leader = code.coset_leader_mask(s);
                for (std::size_t c = 0; c < members; ++c) {
                    if ((rep ^ codewords[c]) == leader) keep = c;
                }
                break;
            }
            case SmDecoder::kMaxLikelihood: {
                bool tie = false;
                for (std::size_t c = 0; c < members; ++c) {
                    if (c != best && ml_costs_tie(cost[c], cost[best])) tie = true;
                }
                if (!tie) keep = best;
                break;
            }
            case SmDecoder::kMaxLikelihoodLexicographic:
                keep = best;
                break;
        }
        for (std::size_t c = 0; c < members; ++c) {
            if (c != keep) failure += prob[c];
        }
    }
    return std::min(failure, 1.0);
}

double part_failure_exact(const SchemePart& part, double pm) {
    auto q = part_flip_probabilities(part, pm);
    if (const auto* rep = std::get_if<RepetitionPart>(&part)) {
        return repetition_failure_exact(*rep, q);
    }
    return sm_failure_exact(std::get<SmPart>(part), q);
}

}  // namespace

SimResult pse_exact(const MeasurementScheme& scheme, double pm) {
    check_probability(pm, "p_m");
    double log_success = 0.0;
    for (const auto& part : scheme.parts) {
        double f = part_failure_exact(part, pm);
        log_success += f >= 1.0 ? -std::numeric_limits<double>::infinity() : std::log1p(-f);
    }
    SimResult r;
    r.p_se = -std::expm1(log_success);
    r.method = SimMethod::kExact;
    return r;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t z = seed + (chunk + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

// Decoding state for one part, reused across the trials of a chunk.
struct PartSampler {
    const SchemePart* part;
    std::vector<double> q;
    std::vector<double> costs;
    std::vector<BitVector> copies;
};

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool sample_part_fails(PartSampler& s, std::mt19937_64& rng) {
    if (const auto* rep = std::get_if<RepetitionPart>(s.part)) {
        std::size_t bits = s.q.size();
        for (std::size_t c = 0; c < rep->fold; ++c) {
            auto& copy = s.copies[c];
            for (std::size_t j = 0; j < bits; ++j) {
                copy.set(j, uniform(rng) < s.q[j]);
            }
        }
        auto out = majority_decode(s.copies);
        return !out.decided || !out.message.is_zero();
    }
    const auto& sm = std::get<SmPart>(*s.part);
    const auto& code = sm.qds.sm();
    std::uint64_t received = 0;
    for (std::size_t j = 0; j < s.q.size(); ++j) {
        if (uniform(rng) < s.q[j]) {
            received |= std::uint64_t{1} << j;
        }
    }
    switch (sm.decoder) {
        case SmDecoder::kCosetLeader:
            return (received ^ code.coset_leader_mask(code.syndrome_mask(received))) != 0;
        case SmDecoder::kMaxLikelihood: {
            auto out = weighted_ml_decode_mask(code, received, s.costs, TiePolicy::kFailure);
            return !out.decided || out.codeword != 0;
        }
        case SmDecoder::kMaxLikelihoodLexicographic: {
            // Failure depends on the transmitted word; draw it uniformly to
            // match the averaged exact value.
            std::uint64_t msg = rng() & ((std::uint64_t{1} << code.dimension()) - 1);
            std::uint64_t sent = code.encode_mask(msg);
            auto out = weighted_ml_decode_mask(code, sent ^ received, s.costs, TiePolicy::kLexicographic);
            return out.codeword != sent;
        }
    }
    return true;
}

std::uint64_t run_chunk(const MeasurementScheme& scheme, double pm, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t trials) {
    std::mt19937_64 rng(chunk_seed(seed, chunk));
    std::vector<PartSampler> samplers;
    for (const auto& part : scheme.parts) {
        PartSampler s{&part, part_flip_probabilities(part, pm), {}, {}};
        s.costs = ml_bit_costs(s.q);
        if (const auto* rep = std::get_if<RepetitionPart>(&part)) {
            s.copies.assign(rep->fold, BitVector(s.q.size()));
        }
        samplers.push_back(std::move(s));
    }
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool failed = false;
        for (auto& s : samplers) {
            failed |= sample_part_fails(s, rng);
        }
        failures += failed;
    }
    return failures;
}

}  // namespace

SimResult pse_monte_carlo(const MeasurementScheme& scheme, double pm, const MonteCarloOptions& options) {
    check_probability(pm, "p_m");
    if (options.trials == 0) {
        throw PreconditionError("Monte Carlo needs at least one trial");
    }
    if (options.chunk_size == 0) {
        throw PreconditionError("chunk size must be positive");
    }
    for (const auto& part : scheme.parts) {
        if (const auto* sm = std::get_if<SmPart>(&part)) {
            if (sm->decoder == SmDecoder::kCosetLeader && !sm->qds.sm().has_coset_table()) {
                throw CapacityError("coset-leader decoding of " + sm->qds.sm().name() + " needs a coset table");
            }
        }
    }
    std::uint64_t num_chunks = (options.trials + options.chunk_size - 1) / options.chunk_size;
    std::vector<std::uint64_t> failures(num_chunks, 0);
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, num_chunks));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < num_chunks; c = next++) {
            std::uint64_t first = c * options.chunk_size;
            std::uint64_t count = std::min(options.chunk_size, options.trials - first);
            failures[c] = run_chunk(scheme, pm, options.seed, c, count);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::uint64_t total = 0;
    for (auto f : failures) {
        total += f;
    }
    SimResult r;
    r.trials = options.trials;
    r.p_se = static_cast<double>(total) / static_cast<double>(options.trials);
    r.std_error = std::sqrt(r.p_se * (1.0 - r.p_se) / static_cast<double>(options.trials));
    r.method = SimMethod::kMonteCarlo;
    r.seed = options.seed;
    return r;
}

std::vector<SweepRow> sweep(const MeasurementScheme& scheme, const std::vector<double>& log2_pm_grid,
                            SweepMethod method, const MonteCarloOptions& options) {
    if (log2_pm_grid.empty()) {
        throw PreconditionError("sweep grid is empty");
    }
    bool exact = method == SweepMethod::kExact ||
                 (method == SweepMethod::kAuto && scheme.enumeration_size() <= kAutoExactLimit);
    std::vector<SweepRow> rows;
    for (double x : log2_pm_grid) {
        double pm = std::exp2(x);
        SimResult r = exact ? pse_exact(scheme, pm) : pse_monte_carlo(scheme, pm, options);
        SweepRow row;
        row.log2_pm = x;
        row.log2_pse = std::log2(r.p_se);
        row.std_error = r.std_error;
        row.trials = r.trials;
        row.total_measurements = scheme.total_measurements();
        row.scheme = scheme.name;
        row.method = r.method;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "log2_pm,log2_pse,stderr,trials,total_measurements,scheme,method\n";
    auto flags = out.flags();
    auto precision = out.precision();
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.log2_pm << ',' << r.log2_pse << ',' << r.std_error << ',' << r.trials << ','
            << r.total_measurements << ',' << r.scheme << ',' << method_name(r.method) << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace qdsc
