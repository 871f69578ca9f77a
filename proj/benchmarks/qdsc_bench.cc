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


#include "benchmark/benchmark.h"
#include "qdsc/bounds.h"
#include "qdsc/catalog.h"
#include "qdsc/codes.h"
#include "qdsc/noise_sim.h"
#include "qdsc/qds.h"
#include "qdsc/schemes.h"

namespace {

void BM_min_distance_shor(benchmark::State& state) {
    auto code = qdsc::catalog("shor");
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::min_distance(code));
}
BENCHMARK(BM_min_distance_shor);

void BM_qds_distance_augmented_steane(benchmark::State& state) {
    auto qds = qdsc::augment_parity(qdsc::catalog("steane"));
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::qds_min_distance(qds));
}
BENCHMARK(BM_qds_distance_augmented_steane);

void BM_impure_search_example(benchmark::State& state) {
    auto code = qdsc::catalog_stabilizer("example-6-1-3");
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::impure_zero_redundancy(code));
}
BENCHMARK(BM_impure_search_example);

void BM_region_table(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::region_table(4, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_region_table)->Arg(64)->Arg(512);

void BM_pse_exact_bs_sm(benchmark::State& state) {
    auto scheme = qdsc::build_scheme("fig1-bs-sm");
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::pse_exact(scheme, 1.0 / 32));
}
BENCHMARK(BM_pse_exact_bs_sm)->Unit(benchmark::kMillisecond);

void BM_pse_monte_carlo_bs_sm(benchmark::State& state) {
    auto scheme = qdsc::build_scheme("fig1-bs-sm");
    qdsc::MonteCarloOptions options;
    options.trials = static_cast<std::uint64_t>(state.range(0));
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(qdsc::pse_monte_carlo(scheme, 1.0 / 32, options));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_pse_monte_carlo_bs_sm)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
