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


#include "fiveq/experiments.h"

#include <algorithm>
#include <future>

namespace fiveq {

namespace {

std::size_t gate_index(LogicalGate g) {
  return static_cast<std::size_t>(std::find(kAllGates.begin(), kAllGates.end(), g) -
                                  kAllGates.begin());
}

double mean_of(const double* first, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += first[i];
  }
  return sum / static_cast<double>(n);
}

}  // namespace

ExperimentReport run_experiment(const std::shared_ptr<const CodeContext>& code, LogicalGate gate,
                                const ErrorCondition& error, const ExperimentOptions& options) {
  const Pipeline pipeline(code, gate, error, options.noise);
  const OperatorResponses propagated = measure_responses(pipeline, true);
  OperatorResponses assumed = propagated;
  assumed.responses[0] = pauli_matrix(Pauli::I);

  const ChiMatrix chi_propagated = chi_from_responses(propagated);
  const ChiMatrix chi_assumed = chi_from_responses(assumed);
  const ChiMatrix ideal = ideal_chi(gate);
  const double f_propagated = process_fidelity(chi_propagated, ideal);
  const double f_assumed = process_fidelity(chi_assumed, ideal);

  ExperimentReport report;
  report.gate = gate;
  report.error = error;
  report.identity_assumed = options.emulate_identity_omission;
  report.chi_effective = options.emulate_identity_omission ? chi_assumed : chi_propagated;
  report.chi_ideal = ideal;
  report.fidelity = options.emulate_identity_omission ? f_assumed : f_propagated;
  report.unitality_deviation = max_abs(propagated.responses[0] - pauli_matrix(Pauli::I));
  report.identity_omission_delta = f_assumed - f_propagated;

  if (options.noiseless()) {
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    const auto pops = pipeline.syndrome_populations(zero);
    const auto best = std::max_element(pops.begin(), pops.end());
    report.syndrome = static_cast<Syndrome>(best - pops.begin());
  }
  return report;
}

SweepResult run_sweep(const std::shared_ptr<const CodeContext>& code,
                      const ExperimentOptions& options) {
  const auto& conditions = all_conditions();
  SweepResult result;
  result.reports.resize(kAllGates.size() * kNumConditions);

  std::vector<std::future<void>> jobs;
  for (std::size_t g = 0; g < kAllGates.size(); ++g) {
    jobs.push_back(std::async(std::launch::async, [&, g] {
      for (std::size_t c = 0; c < kNumConditions; ++c) {
        result.reports[g * kNumConditions + c] =
            run_experiment(code, kAllGates[g], conditions[c], options);
      }
    }));
  }
  for (auto& job : jobs) {
    job.get();
  }

  for (std::size_t g = 0; g < kAllGates.size(); ++g) {
    double sum = 0.0;
    for (std::size_t c = 0; c < kNumConditions; ++c) {
      sum += result.reports[g * kNumConditions + c].fidelity;
    }
    result.gate_means[g] = sum / static_cast<double>(kNumConditions);
  }
  return result;
}

std::array<BaselineGate, 3> run_baseline() {
  std::array<BaselineGate, 3> out{};
  const auto& conditions = all_conditions();
  for (std::size_t g = 0; g < kAllGates.size(); ++g) {
    const LogicalGate gate = kAllGates[g];
    const Matrix gm = ideal_gate_matrix(gate);
    const ChiMatrix ideal = ideal_chi(gate);
    out[g].gate = gate;
    for (std::size_t c = 0; c < kNumConditions; ++c) {
      const auto& cond = conditions[c];
      // Errors on qubits 2..5 never touch the unencoded register qubit.
      const Matrix err = pauli_matrix(cond.qubit == 1 ? pauli_of(cond.kind) : Pauli::I);
      const Matrix total = err * gm;
      const auto responses =
          measure_responses([&total](const Matrix& in) { return conjugate(total, in); }, true);
      out[g].fidelities[c] = process_fidelity(chi_from_responses(responses), ideal);
    }
    out[g].mean = mean_of(out[g].fidelities.data(), kNumConditions);
  }
  return out;
}

std::array<AdvantageRow, 3> compute_advantage(const SweepResult& sweep,
                                              const std::array<BaselineGate, 3>& baseline) {
  std::array<AdvantageRow, 3> out{};
  for (const auto& b : baseline) {
    const std::size_t g = gate_index(b.gate);
    out[g].gate = b.gate;
    out[g].qec_mean = sweep.gate_means[g];
    out[g].baseline_mean = b.mean;
    out[g].margin = sweep.gate_means[g] - b.mean;
  }
  return out;
}

}  // namespace fiveq
