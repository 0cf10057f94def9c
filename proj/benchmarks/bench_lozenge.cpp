/*
 * Copyright 2026 The lozenge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include "lozenge/boxcount.hpp"
#include "lozenge/msf.hpp"
#include "lozenge/sampling.hpp"
#include "lozenge/tiling.hpp"

using namespace lozenge;

static void BM_EnumerateTilings(benchmark::State &state) {
    const int a = static_cast<int>(state.range(0));
    const int bc = static_cast<int>(state.range(1));
    const auto h = PuncturedHexagon::central(a, bc, bc);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tilings(h, 1));
}
BENCHMARK(BM_EnumerateTilings)->Args({2, 4})->Args({3, 3})->Args({3, 5})->Unit(benchmark::kMillisecond);

static void BM_PathDeterminants(benchmark::State &state) {
    const int a = static_cast<int>(state.range(0));
    const auto h = PuncturedHexagon::central(a, a + 2, a + 2);
    for (auto _ : state) benchmark::DoNotOptimize(count_via_path_determinants(h));
}
BENCHMARK(BM_PathDeterminants)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State &state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theorem1_count(s, s, s));
}
BENCHMARK(BM_ClosedForm)->Arg(5)->Arg(21);

static void BM_Determinant(benchmark::State &state) {
    SeededRng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_integer_matrix(n, n, -9, 9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 32);

static void BM_Pfaffian(benchmark::State &state) {
    SeededRng rng(2);
    const auto m = random_skew(static_cast<std::size_t>(state.range(0)), -9, 9, rng);
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->RangeMultiplier(2)->Range(4, 32);

static void BM_SchurProductSum(benchmark::State &state) {
    const int a = static_cast<int>(state.range(0));
    SeededRng rng(3);
    const EvalPoint pts = random_distinct_points(static_cast<std::size_t>(a) + 1, rng);
    const EvalPoint xn = pts.prefix(static_cast<std::size_t>(a));
    for (auto _ : state) benchmark::DoNotOptimize(theorem3_lhs(a, a, a, pts, xn));
}
BENCHMARK(BM_SchurProductSum)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

static void BM_PfaffianChain(benchmark::State &state) {
    const int a = static_cast<int>(state.range(0));
    SeededRng rng(4);
    const EvalPoint pts = random_distinct_points(static_cast<std::size_t>(a) + 2, rng);
    const EvalPoint xn = pts.prefix(static_cast<std::size_t>(a) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(chain_5_3_sides(a, a, a + 1, pts, xn));
}
BENCHMARK(BM_PfaffianChain)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
