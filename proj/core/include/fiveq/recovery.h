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


#ifndef FIVEQ_RECOVERY_H_
#define FIVEQ_RECOVERY_H_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>

#include "fiveq/circuits.h"
#include "fiveq/noise.h"
#include "fiveq/qcore.h"
#include "fiveq/qecerrors.h"

namespace fiveq {

class NonProductDecoding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyndromeCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SyndromeEntry {
  Syndrome syndrome = 0;
  ErrorCondition condition;
  /// Pauli applied to qubit 1 when this syndrome is present.
  Pauli correction = Pauli::I;
  /// Global phase left on the branch after correction; not undone.
  Complex phase = 1.0;
};

class SyndromeTable {
 public:
  /// Entries must cover every syndrome once, with 0000 -> (E, I).
  explicit SyndromeTable(const std::array<SyndromeEntry, kNumSyndromes>& entries);

  /// Entries ordered by syndrome value.
  const std::array<SyndromeEntry, kNumSyndromes>& entries() const { return entries_; }
  const SyndromeEntry& at(Syndrome s) const { return entries_.at(s); }
  const SyndromeEntry& entry_for(const ErrorCondition& c) const;

 private:
  std::array<SyndromeEntry, kNumSyndromes> entries_;
};

/// Brute-force syndrome table: decodes E_a U_en(|psi>|0000>) for
/// psi in {|0>, |1>, |+>, |+i>} and identifies the residual register Pauli.
/// Throws NonProductDecoding or SyndromeCollision.
SyndromeTable derive_syndrome_table(const UnitaryOperator& encoder, double tol = 1e-9);

/// C = sum_s C_s (x) |s><s| with C_s on qubit 1.
UnitaryOperator correction_unitary(const SyndromeTable& table);

StateVector apply_correction(const StateVector& state, const SyndromeTable& table);
DensityOperator apply_correction(const DensityOperator& rho, const SyndromeTable& table);

/// Encoder, decoder, and the correction derived from them.
struct CodeContext {
  explicit CodeContext(const EncoderFrame& frame = EncoderFrame::canonical());

  EncoderFrame frame;
  UnitaryOperator encoder;
  UnitaryOperator decoder;
  SyndromeTable table;
  UnitaryOperator correction;
};

/// Shared immutable context for the canonical frame.
std::shared_ptr<const CodeContext> default_code();

/// Encode -> logical gate -> error -> decode -> correct on qubit 1 with the
/// ancillas prepared in |0000>, noise channels interleaved per schedule.
/// The map on 2x2 inputs is linear, so deviation operators propagate too.
class Pipeline {
 public:
  Pipeline(std::shared_ptr<const CodeContext> code, LogicalGate gate, const ErrorCondition& error,
           const std::optional<NoiseSchedule>& noise = std::nullopt);
  Pipeline(std::shared_ptr<const CodeContext> code, UnitaryOperator logical, UnitaryOperator error,
           const std::optional<NoiseSchedule>& noise = std::nullopt);

  /// Full 32x32 register operator after correction.
  Matrix propagate(const Matrix& input) const;
  /// Reduced operator on qubit 1.
  Matrix apply(const Matrix& input) const;

  DensityOperator run(const DensityOperator& input) const;
  DensityOperator run(const StateVector& input) const;

  /// Diagonal of the qubits 2..5 marginal, indexed by syndrome.
  std::array<double, kNumSyndromes> syndrome_populations(const Matrix& input) const;

  const CodeContext& code() const { return *code_; }

 private:
  Matrix stage_noise(NoiseStage stage, Matrix rho) const;

  std::shared_ptr<const CodeContext> code_;
  UnitaryOperator logical_;
  UnitaryOperator error_;
  std::array<std::vector<KrausChannel>, kNumStages> noise_;
};

DensityOperator run_pipeline(LogicalGate gate, const ErrorCondition& error,
                             const DensityOperator& input,
                             const std::optional<NoiseSchedule>& noise = std::nullopt);
DensityOperator run_pipeline(LogicalGate gate, const ErrorCondition& error,
                             const StateVector& input,
                             const std::optional<NoiseSchedule>& noise = std::nullopt);

}  // namespace fiveq

#endif  // FIVEQ_RECOVERY_H_
