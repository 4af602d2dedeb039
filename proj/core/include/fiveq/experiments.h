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


#ifndef FIVEQ_EXPERIMENTS_H_
#define FIVEQ_EXPERIMENTS_H_

// Process-tomography experiments over the gate x error grid and the
// unencoded reference they are compared against.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fiveq/circuits.h"
#include "fiveq/noise.h"
#include "fiveq/qecerrors.h"
#include "fiveq/recovery.h"
#include "fiveq/tomography.h"

namespace fiveq {

/// Mean fidelity without error correction: 13 of the 16 conditions leave
/// the register qubit untouched.
inline constexpr double kBaselineMean = 13.0 / 16.0;

struct ExperimentOptions {
  std::optional<NoiseSchedule> noise;
  /// Assume Lambda(E) = E instead of propagating the identity input.
  bool emulate_identity_omission = false;
  /// Reserved; every pipeline is deterministic.
  std::optional<std::uint64_t> seed;

  bool noiseless() const { return !noise || noise->empty(); }
};

struct ExperimentReport {
  LogicalGate gate = LogicalGate::kIdentity;
  ErrorCondition error;
  ChiMatrix chi_effective{Matrix::Zero(4, 4)};
  ChiMatrix chi_ideal{Matrix::Zero(4, 4)};
  double fidelity = 0.0;
  /// Syndrome register readout; only reported for noiseless runs.
  std::optional<Syndrome> syndrome;
  /// max |Lambda(E) - E| of the effective channel.
  double unitality_deviation = 0.0;
  /// F with Lambda(E) assumed minus F with Lambda(E) propagated.
  double identity_omission_delta = 0.0;
  bool identity_assumed = false;
};

ExperimentReport run_experiment(const std::shared_ptr<const CodeContext>& code, LogicalGate gate,
                                const ErrorCondition& error, const ExperimentOptions& options = {});

struct SweepResult {
  /// Gate-major, then canonical error order.
  std::vector<ExperimentReport> reports;
  /// Indexed like kAllGates.
  std::array<double, 3> gate_means{};
};

/// All 48 experiments. Ordering is fixed regardless of evaluation order.
SweepResult run_sweep(const std::shared_ptr<const CodeContext>& code,
                      const ExperimentOptions& options = {});

struct BaselineGate {
  LogicalGate gate = LogicalGate::kIdentity;
  /// Canonical error order.
  std::array<double, kNumConditions> fidelities{};
  double mean = 0.0;
};

/// Bare single-qubit gate followed by each condition's action on qubit 1.
std::array<BaselineGate, 3> run_baseline();

struct AdvantageRow {
  LogicalGate gate = LogicalGate::kIdentity;
  double qec_mean = 0.0;
  double baseline_mean = 0.0;
  double margin = 0.0;
};

std::array<AdvantageRow, 3> compute_advantage(const SweepResult& sweep,
                                              const std::array<BaselineGate, 3>& baseline);

}  // namespace fiveq

#endif  // FIVEQ_EXPERIMENTS_H_
