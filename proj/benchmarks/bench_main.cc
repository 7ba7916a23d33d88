// Copyright 2026 The INQC Authors
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


#include <benchmark/benchmark.h>

#include <random>

#include "inqc/garden_hose.h"
#include "inqc/generators.h"
#include "inqc/ipp.h"
#include "inqc/protocols.h"

using namespace inqc;

namespace {

StateVector state(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return StateVector::random(n, rng);
}

void BM_ApplyH(benchmark::State& st) {
    const auto n = static_cast<std::uint32_t>(st.range(0));
    StateVector s = state(n, 1);
    const Gate g = make_gate(GateKind::H, n / 2);
    for (auto _ : st) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ApplyH)->Arg(4)->Arg(8)->Arg(12)->Arg(14);

void BM_GhMultiOutput(benchmark::State& st) {
    const auto na = static_cast<std::uint32_t>(st.range(0));
    VarStore store;
    auto in = allocate_inputs(store, na, na);
    std::vector<GardenHose> ps;
    for (int i = 0; i < 3; ++i) {
        ps.push_back(gh_from_truth_table(
            TruthTable::from_function(na, na, [i](auto x, auto y) { return ((x * 7 + y * 3 + i) & 2) != 0; }), in.alice, in.bob));
    }
    const auto m = gh_multi_output(ps);
    std::uint64_t x = 0;
    for (auto _ : st) {
        const std::uint64_t mask = (std::uint64_t{1} << na) - 1;
        benchmark::DoNotOptimize(gh_evaluate(*m, store, x & mask, (x >> 3) & mask));
        ++x;
    }
}
BENCHMARK(BM_GhMultiOutput)->Arg(2)->Arg(4);

void BM_PhaseRemoval(benchmark::State& st) {
    const auto t = TruthTable::from_function(2, 2, [](auto x, auto y) { return (x & y) != 0; });
    std::uint64_t seed = 0;
    for (auto _ : st) benchmark::DoNotOptimize(run_phase_removal_check(t, 3, 1, seed++).gh_f);
}
BENCHMARK(BM_PhaseRemoval);

void BM_TCount(benchmark::State& st) {
    const auto n = static_cast<std::uint32_t>(st.range(0));
    const auto k = static_cast<std::uint32_t>(st.range(1));
    std::uint64_t seed = 0;
    for (auto _ : st) {
        const Circuit c = generate_random_circuit(n, k, seed);
        benchmark::DoNotOptimize(run_tcount_protocol(c, state(n, seed), seed).report.epr_charged);
        ++seed;
    }
}
BENCHMARK(BM_TCount)->Args({2, 3})->Args({4, 3});

void BM_TDepth(benchmark::State& st) {
    const auto n = static_cast<std::uint32_t>(st.range(0));
    const auto d = static_cast<std::uint32_t>(st.range(1));
    std::uint64_t seed = 0;
    for (auto _ : st) {
        const Circuit c = generate_tdepth_circuit(n, d, seed);
        benchmark::DoNotOptimize(run_tdepth_protocol(c, state(n, seed), seed).report.epr_charged);
        ++seed;
    }
}
BENCHMARK(BM_TDepth)->Args({2, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_RoundedProduct(benchmark::State& st) {
    std::mt19937_64 rng(5);
    std::vector<Unitary2> ws;
    for (int i = 0; i < st.range(0); ++i) ws.push_back(random_unitary2(rng));
    for (auto _ : st) benchmark::DoNotOptimize(rounded_product(ws, 16).error);
}
BENCHMARK(BM_RoundedProduct)->Arg(8)->Arg(64);

void BM_IppAttack(benchmark::State& st) {
    const auto t = static_cast<std::uint32_t>(st.range(0));
    std::uint64_t seed = 0;
    for (auto _ : st) {
        const auto inst = generate_ipp_instance(t, seed);
        benchmark::DoNotOptimize(run_ipp_attack(inst, build_registry(inst), seed & 1, seed).guess_alice);
        ++seed;
    }
}
BENCHMARK(BM_IppAttack)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
