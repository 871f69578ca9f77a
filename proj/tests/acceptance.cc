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

// Acceptance checks. Each criterion prints exactly one PASS/FAIL line.
//
//   qdsc_acceptance            run every criterion
//   qdsc_acceptance 3a 7       run the named criteria
//
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qdsc/bounds.h"
#include "qdsc/catalog.h"
#include "qdsc/code_io.h"
#include "qdsc/errors.h"
#include "qdsc/noise_sim.h"
#include "qdsc/qds.h"
#include "qdsc/schemes.h"
#include "test_util.h"

using namespace qdsc;
namespace t = qdsc::testing;

namespace {

// Tolerances.
constexpr double kRuntimeLimitSeconds = 1.0;
constexpr double kFig1RepetitionTol = 0.01;
constexpr double kFig1RepetitionTolNoisy = 0.02;  // the log2 pm = -1.5 point
constexpr double kFig1SmTol = 0.1;
constexpr double kSlopeTarget = 4.0;
constexpr double kSlopeTol = 0.3;
constexpr double kPerrTol = 1e-12;
constexpr double kMonteCarloSigmas = 4.0;
constexpr std::uint64_t kMonteCarloTrials = 1'000'000;
constexpr int kEquivalenceMoves = 100;

const std::filesystem::path kDataDir = QDSC_TEST_DATA_DIR;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x, int digits = 6) {
    std::ostringstream s;
    s.precision(digits);
    s << std::fixed << x;
    return s.str();
}

double log2_pse(const MeasurementScheme& scheme, double log2_pm) {
    return std::log2(pse_exact(scheme, std::exp2(log2_pm)).p_se);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion_1() {
    auto start = std::chrono::steady_clock::now();
    auto g = catalog_stabilizer("example-6-1-3");
    bool g_ok = g.n() == 6 && g.k() == 1 && min_distance(g) == 3 && is_impure(g, 3);
    auto g_prime = catalog_stabilizer("example-6-1-3-qds");
    auto qds = build_qds(g_prime, BinaryLinearCode::identity(g_prime.m()));
    std::size_t d_prime = qds_min_distance(qds);
    bool prime_ok = d_prime == 3 && qds.l() == 0;
    auto result = impure_zero_redundancy(g);
    std::ostringstream text;
    write_pauli_code(text, result.rows);
    auto reparsed = parse_pauli_code(text.str());
    bool search_ok = reparsed.rows == result.rows && verifies_zero_redundancy(reparsed.rows);
    double elapsed = seconds_since(start);
    bool pass = g_ok && prime_ok && search_ok && elapsed < kRuntimeLimitSeconds;
    return {pass, "G impure [[6,1,3]]=" + std::string(g_ok ? "yes" : "no") + ", G' qds_d=" + std::to_string(d_prime) +
                      " l=" + std::to_string(qds.l()) + ", search pivot " + result.pivot.to_pauli() + " modifier " +
                      result.modifier.str() + " re-verified=" + (search_ok ? "yes" : "no") + ", " + fmt(elapsed, 3) +
                      " s"};
}

Outcome criterion_2() {
    auto start = std::chrono::steady_clock::now();
    auto shor = build_scheme("fig1-shor-6fold");
    auto bs = build_scheme("fig1-bs-6fold");
    struct Point {
        const MeasurementScheme* scheme;
        double log2_pm, reference, tol;
    } points[] = {{&shor, -1.5, -0.001055018, kFig1RepetitionTolNoisy},
                  {&shor, -4, -1.105477353, kFig1RepetitionTol},
                  {&bs, -4, -0.702966823, kFig1RepetitionTol}};
    bool pass = true;
    std::string detail;
    for (const auto& p : points) {
        double got = log2_pse(*p.scheme, p.log2_pm);
        double delta = std::abs(got - p.reference);
        pass = pass && delta <= p.tol;
        detail += p.scheme->name + "@" + fmt(p.log2_pm, 1) + " " + fmt(got) + " (d=" + fmt(delta) + ") ";
    }
    double elapsed = seconds_since(start);
    pass = pass && elapsed < kRuntimeLimitSeconds;
    return {pass, detail + fmt(elapsed, 3) + " s"};
}

Outcome criterion_3a() {
    const double grid[] = {-2, -3, -4, -5};
    const double reference[] = {-0.035320388, -0.157580157, -0.950823805, -2.984832884};
    std::string detail;
    bool any = false;
    for (auto decoder : {SmDecoder::kMaxLikelihood, SmDecoder::kCosetLeader}) {
        auto scheme = build_scheme("fig1-bs-sm", {}, decoder);
        double worst = 0;
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(log2_pse(scheme, grid[i]) - reference[i]));
        bool ok = worst <= kFig1SmTol;
        any = any || ok;
        detail += std::string(decoder_name(decoder)) + " max|d|=" + fmt(worst, 4) + (ok ? " (match) " : " ");
    }
    auto fallback = std::get<SmPart>(build_scheme("fig1-bs-sm").parts[0]).decoder;
    return {any && fallback == SmDecoder::kMaxLikelihood, detail + "default=" + std::string(decoder_name(fallback))};
}

Outcome criterion_3b() {
    auto scheme = build_scheme("fig1-bs-sm");
    double slope = (log2_pse(scheme, -5) - log2_pse(scheme, -7)) / 2.0;
    bool pass = std::abs(slope - kSlopeTarget) <= kSlopeTol;
    // Slope of the published B-S SM curve over the same window, for context.
    double published = (-2.984832884 - -9.460369675) / 2.0;
    return {pass, "slope on [-7,-5] = " + fmt(slope, 4) + ", required " + fmt(kSlopeTarget, 1) + " +- " +
                      fmt(kSlopeTol, 1) + " (published curve: " + fmt(published, 4) + ")"};
}

Outcome criterion_4() {
    std::string detail;
    bool pass = true;
    for (const auto& s : figure1_schemes(kDataDir)) {
        pass = pass && s.total_measurements() == 144;
        detail += s.name + "=" + std::to_string(s.total_measurements()) + " ";
    }
    auto bs204 = build_scheme("fig2-bs-204");
    auto bs216 = build_scheme("fig2-bs-216");
    pass = pass && bs204.total_measurements() == 204 && bs216.total_measurements() == 216;
    detail += "fig2-bs=" + std::to_string(bs204.total_measurements()) + "/" +
              std::to_string(bs216.total_measurements()) + " ";
    // Shor: X part from the Cordaro-Wagner code, Z part from the [25,6,11] import.
    auto x17 = build_qds(make_stabilizer({F4Vector::from_pauli("XXXXXXIII"), F4Vector::from_pauli("IIIXXXXXX")}),
                         sm_catalog("cw-17-2-11"));
    auto x18 = build_qds(make_stabilizer({F4Vector::from_pauli("XXXXXXIII"), F4Vector::from_pauli("IIIXXXXXX")}),
                         sm_catalog("cw-18-2-12"));
    bool have_import = std::filesystem::exists(kDataDir / "grassl-25-6-11.txt");
    if (have_import) {
        auto a = build_scheme("fig2-shor-204", kDataDir);
        auto b = build_scheme("fig2-shor-216", kDataDir);
        pass = pass && a.total_measurements() == 204 && b.total_measurements() == 216;
        detail += "fig2-shor=" + std::to_string(a.total_measurements()) + "/" +
                  std::to_string(b.total_measurements()) + " (imported [25,6,11])";
    } else {
        std::size_t a = x17.total_measurements() + 102, b = x18.total_measurements() + 108;
        pass = pass && a == 204 && b == 216;
        detail += "fig2-shor arithmetic " + std::to_string(x17.total_measurements()) + "+102=" + std::to_string(a) +
                  ", " + std::to_string(x18.total_measurements()) + "+108=" + std::to_string(b);
    }
    return {pass, detail};
}

Outcome criterion_5() {
    bool pass = true;
    std::string detail;
    for (const auto& entry : catalog_entries()) {
        auto base = catalog(entry.name);
        if (min_distance(base) != 3) continue;
        auto qds = augment_parity(base);
        std::size_t d = qds_min_distance(qds);
        bool even = true;
        for (std::size_t j = 0; j < qds.n(); ++j)
            for (auto s : {F4::one(), F4::omega(), F4::omega2()})
                even = even && extended_syndrome(qds, F4Vector::unit(qds.n(), j, s)).weight() % 2 == 0;
        pass = pass && d >= 3 && even;
        detail += entry.name + ":" + qds_params(qds).notation() + (even ? "" : "(odd)") + " ";
    }
    return {pass, detail};
}

Outcome criterion_6() {
    bool pass = !qds_hamming_d3(5, 1) && qds_hamming_d3(6, 1) && qds_hamming_d3(7, 1) && qds_hamming_d3(8, 3) &&
                !impure_bound(21, 15) && impure_bound(22, 15);
    bool f51 = false, f2115 = false;
    for (const auto& e : pure_only_families(3)) {
        f51 = f51 || (e.n == 5 && e.k == 1);
        f2115 = f2115 || (e.n == 21 && e.k == 15);
    }
    pass = pass && f51 && f2115;
    return {pass, std::string("qds_hamming_d3 (5,1)/(6,1)/(7,1)/(8,3) = ") + (qds_hamming_d3(5, 1) ? "ok" : "violated") +
                      "/" + (qds_hamming_d3(6, 1) ? "ok" : "violated") + "/" +
                      (qds_hamming_d3(7, 1) ? "ok" : "violated") + "/" + (qds_hamming_d3(8, 3) ? "ok" : "violated") +
                      ", impure (21,15)/(22,15) = " + (impure_bound(21, 15) ? "ok" : "violated") + "/" +
                      (impure_bound(22, 15) ? "ok" : "violated") + ", families(3) has (5,1)=" + (f51 ? "yes" : "no") +
                      " (21,15)=" + (f2115 ? "yes" : "no")};
}

bool star_dual_matches(const std::vector<F4Vector>& rows, const BinaryLinearCode& sm) {
    auto base = make_stabilizer(rows);
    auto qds = build_qds(base, sm);
    std::size_t n = base.n(), len = sm.length();
    std::vector<HybridVector> gens;
    for (std::size_t j = 0; j < len; ++j) {
        BitVector tail(len);
        tail.set(j, true);
        gens.push_back({qds.measured_elements()[j], tail});
    }
    std::set<std::pair<std::string, std::string>> dual, graph;
    for (const auto& e : t::all_vectors(n)) {
        auto ev = t::to_vector(e);
        graph.insert({ev.to_pauli(), extended_syndrome(qds, ev).str()});
        for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << len); ++tail) {
            HybridVector v{ev, BitVector::from_mask(tail, len)};
            bool orthogonal = true;
            for (const auto& g : gens) orthogonal = orthogonal && !star_inner_product(g, v);
            if (orthogonal) dual.insert({ev.to_pauli(), v.tail.str()});
        }
    }
    return dual == graph;
}

Outcome criterion_7() {
    std::string detail;
    // (a)
    auto p = [](const char* s) { return F4Vector::from_pauli(s); };
    bool a = star_dual_matches({p("ZZI"), p("IZZ")}, BinaryLinearCode::parity(2)) &&
             star_dual_matches({p("XXXX"), p("ZZZZ")}, BinaryLinearCode::cordaro_wagner(2, 1, 1)) &&
             star_dual_matches({p("ZZII"), p("IZZI"), p("IIZZ")}, BinaryLinearCode::parity(3));
    detail += std::string("(a) ") + (a ? "ok" : "FAIL");
    // (b)
    double worst = 0;
    for (std::size_t w = 0; w <= 12; ++w)
        for (double pm = 0.001; pm <= 0.5; pm += 0.001) worst = std::max(worst, std::abs(p_err(w, pm) - p_err_closed_form(w, pm)));
    bool b = worst <= kPerrTol;
    detail += " (b) max|d|=" + std::to_string(worst);
    // (c)
    bool c = true;
    double worst_sigma = 0;
    for (const auto& scheme : figure1_schemes(kDataDir)) {
        for (double x : {-2.0, -3.0, -4.0}) {
            auto exact = pse_exact(scheme, std::exp2(x));
            auto mc = pse_monte_carlo(scheme, std::exp2(x), {kMonteCarloTrials, 1, 1 << 16, 0});
            double z = std::abs(mc.p_se - exact.p_se) / mc.std_error;
            worst_sigma = std::max(worst_sigma, z);
            c = c && z <= kMonteCarloSigmas;
        }
    }
    detail += " (c) max " + fmt(worst_sigma, 2) + " sigma";
    // (d)
    std::mt19937_64 rng(1);
    auto g_prime = catalog_stabilizer("example-6-1-3-qds");
    auto start = g_prime.rows();
    std::vector<F4Vector> rows(start.begin(), start.end());
    int verified = 0;
    for (int step = 0; step < kEquivalenceMoves; ++step) {
        EquivalenceMove move;
        switch (rng() % 3) {
            case 0: {
                std::vector<std::size_t> sigma{0, 1, 2, 3, 4, 5};
                std::shuffle(sigma.begin(), sigma.end(), rng);
                move = PermuteMove{sigma};
                break;
            }
            case 1: move = ScaleMove{rng() % 6, (rng() & 1) ? F4::omega() : F4::omega2()}; break;
            default: move = ConjugateMove{rng() % 6}; break;
        }
        rows = equivalence_apply(rows, move);
        auto code = make_stabilizer(rows);
        auto params = qds_params(build_qds(code, BinaryLinearCode::identity(code.m())));
        verified += params.notation() == "[[6,1,3:0]]";
    }
    bool d = verified == kEquivalenceMoves;
    detail += " (d) " + std::to_string(verified) + "/" + std::to_string(kEquivalenceMoves);
    return {a && b && c && d, detail};
}

Outcome criterion_8() {
    // Some SM generator matrices are only reachable through the import pathway.
    bool missing_reported = false;
    try {
        build_scheme("fig1-shor-sm", std::filesystem::path("/nonexistent"));
    } catch (const AvailabilityError& e) {
        missing_reported = std::string(e.what()).find("grassl-18-6-8") != std::string::npos;
    }
    auto imported = sm_catalog("grassl-18-6-8", kDataDir);
    bool import_ok = imported.length() == 18 && imported.dimension() == 6 && imported.min_distance() == 8;
    return {missing_reported && import_ok,
            std::string("missing import reported=") + (missing_reported ? "yes" : "no") +
                ", fixture [18,6,8] imported=" + (import_ok ? "yes" : "no") +
                "; pointwise curves for imported SM codes not checked"};
}

}  // namespace

int main(int argc, char** argv) {
    unsetenv("QDS_DATA_DIR");
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1", criterion_1}, {"2", criterion_2}, {"3a", criterion_3a}, {"3b", criterion_3b}, {"4", criterion_4},
        {"5", criterion_5}, {"6", criterion_6}, {"7", criterion_7},   {"8", criterion_8},
    };
    std::set<std::string> selected(argv + 1, argv + argc);
    int failures = 0;
    for (const auto& [id, run] : criteria) {
        if (!selected.empty() && !selected.count(id)) continue;
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += !out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << out.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
