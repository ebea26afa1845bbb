// Copyright 2026 The Querylab Authors
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

#include "querylab/circuits.hpp"
#include "querylab/collision_finding.hpp"
#include "querylab/extract.hpp"
#include "querylab/gamma.hpp"
#include "querylab/grover.hpp"
#include "querylab/instance.hpp"
#include "querylab/sampling.hpp"
#include "querylab/simulator.hpp"

namespace querylab {
namespace {

void BM_SimulateExact(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto alg = builtin_algorithm("mixer", n);
    Rng rng(7);
    auto inst = sample_paired(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(acceptance_probability(alg, inst));
}
BENCHMARK(BM_SimulateExact)->Arg(4)->Arg(8);

void BM_SimulateFloat(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto alg = to_float(builtin_algorithm("mixer", n));
    Rng rng(7);
    auto inst = sample_paired(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(acceptance_probability(alg, inst));
}
BENCHMARK(BM_SimulateFloat)->Arg(4)->Arg(8)->Arg(16);

void BM_ExtractPolynomial(benchmark::State &state) {
    auto alg = builtin_algorithm("mixer", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(extract_polynomial(alg));
}
BENCHMARK(BM_ExtractPolynomial)->Arg(4)->Arg(8);

// closed form vs one enumeration pass over all supports
void BM_GammaClosed(benchmark::State &state) {
    auto I = *Monomial::from({Indicator{Register::X, 1, 1}, Indicator{Register::X, 2, 1},
                              Indicator{Register::X, 3, 2}});
    for (auto _ : state) benchmark::DoNotOptimize(gamma_closed(I, 2, 6, 6, 2));
}
BENCHMARK(BM_GammaClosed);

void BM_GammaBruteforceTable(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(gamma_bruteforce_table(2, 6, 6, 3));
}
BENCHMARK(BM_GammaBruteforceTable)->Unit(benchmark::kMillisecond);

void BM_Bht(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(11);
    for (auto _ : state) {
        auto inst = sample_paired(n, rng);
        benchmark::DoNotOptimize(bht_collision(inst, rng));
    }
}
BENCHMARK(BM_Bht)->Arg(27)->Arg(64);

void BM_Grover(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(grover_search<double>(m, [m](int i) { return i == m - 1; }, 3));
}
BENCHMARK(BM_Grover)->Arg(16)->Arg(64);

}  // namespace
}  // namespace querylab

BENCHMARK_MAIN();
