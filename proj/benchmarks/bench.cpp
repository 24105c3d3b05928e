/*
   Copyright 2026 The wrgw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "wrgw/degrees.hpp"
#include "wrgw/rng.hpp"

using namespace wrgw;

namespace {

ScalarMatrix random_matrix(const Field& k, std::size_t n, SplitMix64& rng) {
    ScalarMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, k.is_prime_field()
                            ? Scalar(k, static_cast<long>(rng.below(k.characteristic())))
                            : Scalar(k, rng.in_box(99)));
    return m;
}

void BM_det(benchmark::State& state, Field k) {
    SplitMix64 rng(1);
    auto n = static_cast<std::size_t>(state.range(0));
    ScalarMatrix m = random_matrix(k, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}

void BM_local_degree(benchmark::State& state, Field k, int m, int p) {
    SampleOptions o;
    o.require_simple = true;
    auto inst = sample_instance(k, m, p, o);
    if (!inst) { state.SkipWithError("no instance"); return; }
    for (auto _ : state) benchmark::DoNotOptimize(local_degree(inst->w, inst->s_list));
}

void BM_fiber_enumerate(benchmark::State& state) {
    Field k = Field::prime(11);
    std::vector<Scalar> s{Scalar(k, 0), Scalar(k, 1), Scalar(k, 2), Scalar(k, 5)};
    for (auto _ : state) benchmark::DoNotOptimize(fiber_enumerate(k, 2, 2, s));
}

void BM_sample_normalized(benchmark::State& state) {
    SplitMix64 seeds(3);
    SampleOptions o;
    o.random_budget = 0;
    for (auto _ : state) {
        o.seed = seeds.next();
        benchmark::DoNotOptimize(sample_instance(Field::prime(7), 2, 3, o));
    }
}

void BM_n_complex(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(n_complex(8, 8));
}

} // namespace

BENCHMARK_CAPTURE(BM_det, rational, Field::rationals())->DenseRange(3, 9, 2);
BENCHMARK_CAPTURE(BM_det, f101, Field::prime(101))->DenseRange(3, 9, 2);
BENCHMARK_CAPTURE(BM_local_degree, f11_22, Field::prime(11), 2, 2);
BENCHMARK_CAPTURE(BM_local_degree, f11_23, Field::prime(11), 2, 3);
BENCHMARK_CAPTURE(BM_local_degree, q_22, Field::rationals(), 2, 2);
BENCHMARK(BM_fiber_enumerate);
BENCHMARK(BM_sample_normalized);
BENCHMARK(BM_n_complex);

BENCHMARK_MAIN();
