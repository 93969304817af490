// Copyright 2026 The Schwinger Authors
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

#include "schwinger/fock_kernel.h"
#include "schwinger/focksim.h"

namespace {

using schwinger::Amplitude;

const char *const kGraphs[] = {"chain3x2", "square4x2", "ghz4x2"};

std::vector<Amplitude> random_vector(size_t n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(n);
    for (auto &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

template <bool kParallel>
void BM_GeneratorApply(benchmark::State &state) {
    const auto graph = schwinger::builtin(kGraphs[state.range(0)]).graph;
    const schwinger::GeneratorKernel kernel(graph, static_cast<int>(state.range(1)));
    const auto in = random_vector(kernel.size());
    std::vector<Amplitude> out(kernel.size());
    for (auto _ : state) {
        if constexpr (kParallel) {
            kernel.apply_parallel(in, out);
        } else {
            kernel.apply_serial(in, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetLabel(kGraphs[state.range(0)]);
    state.counters["basis"] = static_cast<double>(kernel.size());
}

template <bool kParallel>
void BM_EvolveVacuum(benchmark::State &state) {
    const auto graph = schwinger::builtin(kGraphs[state.range(0)]).graph;
    schwinger::EvolveOptions options;
    options.parallel = kParallel;
    for (auto _ : state) {
        auto s = schwinger::evolve_vacuum(graph, 0.2, static_cast<int>(state.range(1)), options);
        benchmark::DoNotOptimize(s.norm_deficit);
    }
    state.SetLabel(kGraphs[state.range(0)]);
}

void Args(benchmark::internal::Benchmark *b) {
    b->Args({0, 12})->Args({1, 10})->Args({2, 10})->Args({1, 12})->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_GeneratorApply<false>)->Name("GeneratorApply/serial")->Apply(Args);
BENCHMARK(BM_GeneratorApply<true>)->Name("GeneratorApply/parallel")->Apply(Args);
BENCHMARK(BM_EvolveVacuum<false>)->Name("EvolveVacuum/serial")->Apply(Args);
BENCHMARK(BM_EvolveVacuum<true>)->Name("EvolveVacuum/parallel")->Apply(Args);

}  // namespace

BENCHMARK_MAIN();
