// Copyright 2026 The fiveq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "fiveq/circuits.h"
#include "fiveq/experiments.h"
#include "fiveq/noise.h"
#include "fiveq/recovery.h"
#include "fiveq/tomography.h"

namespace {

using namespace fiveq;

void BM_BuildEncoder(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_encoder());
  }
}
BENCHMARK(BM_BuildEncoder);

void BM_DeriveSyndromeTable(benchmark::State& state) {
  const auto enc = build_encoder();
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_syndrome_table(enc));
  }
}
BENCHMARK(BM_DeriveSyndromeTable);

void BM_NoiselessPipeline(benchmark::State& state) {
  const Pipeline pipeline(default_code(), LogicalGate::kHadamard, ErrorCondition::bit_flip(5));
  const Matrix input = pauli_matrix(Pauli::X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline.apply(input));
  }
}
BENCHMARK(BM_NoiselessPipeline);

void BM_DephasedPipeline(benchmark::State& state) {
  const Pipeline pipeline(default_code(), LogicalGate::kHadamard, ErrorCondition::bit_flip(5),
                          NoiseSchedule::uniform_dephasing(0.05));
  const Matrix input = pauli_matrix(Pauli::X);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline.apply(input));
  }
}
BENCHMARK(BM_DephasedPipeline);

void BM_ChiReconstruction(benchmark::State& state) {
  const Matrix h = ideal_gate_matrix(LogicalGate::kHadamard);
  const auto responses =
      measure_responses([&h](const Matrix& in) { return conjugate(h, in); }, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi_from_responses(responses));
  }
}
BENCHMARK(BM_ChiReconstruction);

void BM_NoiselessSweep(benchmark::State& state) {
  const auto code = default_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(code));
  }
}
BENCHMARK(BM_NoiselessSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
