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


#include "fiveq/recovery.h"

#include <cmath>
#include <string>
#include <utility>

namespace fiveq {

namespace {

constexpr Eigen::Index kSyn = static_cast<Eigen::Index>(kNumSyndromes);

Matrix embed_input(const Matrix& input) {
  if (input.rows() != 2 || input.cols() != 2) {
    throw std::invalid_argument("pipeline input must be a 2x2 operator");
  }
  Matrix ancilla = Matrix::Zero(kSyn, kSyn);
  ancilla(0, 0) = 1.0;
  return tensor(input, ancilla);
}

std::array<Vector, 4> probe_states() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  std::array<Vector, 4> out;
  for (auto& v : out) {
    v = Vector::Zero(2);
  }
  out[0](0) = 1.0;
  out[1](1) = 1.0;
  out[2] << h, h;
  out[3] << h, i * h;
  return out;
}

}  // namespace

SyndromeTable::SyndromeTable(const std::array<SyndromeEntry, kNumSyndromes>& entries) {
  std::array<bool, kNumSyndromes> seen{};
  for (const auto& e : entries) {
    if (e.syndrome >= kNumSyndromes) {
      throw std::invalid_argument("SyndromeTable: syndrome out of range");
    }
    if (seen[e.syndrome]) {
      throw SyndromeCollision("SyndromeTable: syndrome " + syndrome_label(e.syndrome) +
                              " listed twice");
    }
    seen[e.syndrome] = true;
    entries_[e.syndrome] = e;
  }
  if (entries_[0].condition != ErrorCondition::none() || entries_[0].correction != Pauli::I) {
    throw std::invalid_argument("SyndromeTable: syndrome 0000 must map to E with correction I");
  }
}

const SyndromeEntry& SyndromeTable::entry_for(const ErrorCondition& c) const {
  for (const auto& e : entries_) {
    if (e.condition == c) {
      return e;
    }
  }
  throw std::out_of_range("SyndromeTable: no entry for " + label(c));
}

SyndromeTable derive_syndrome_table(const UnitaryOperator& encoder, double tol) {
  if (encoder.dim() != kDim) {
    throw std::invalid_argument("derive_syndrome_table: encoder must be 32x32");
  }
  const Matrix& enc = encoder.mat();
  const Matrix dec = enc.adjoint();
  const auto probes = probe_states();
  Vector ancilla = Vector::Zero(kSyn);
  ancilla(0) = 1.0;

  std::array<SyndromeEntry, kNumSyndromes> entries{};
  std::array<const ErrorCondition*, kNumSyndromes> owner{};

  for (const auto& cond : all_conditions()) {
    const Matrix err = error_unitary(cond).mat();
    std::optional<Syndrome> syndrome;
    std::array<Vector, 4> residual;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Vector out = dec * (err * (enc * tensor(Matrix(probes[k]), Matrix(ancilla)).col(0)));
      Eigen::Index best = 0;
      double best_pop = -1.0;
      for (Eigen::Index s = 0; s < kSyn; ++s) {
        const double pop = std::norm(out(s)) + std::norm(out(kSyn + s));
        if (pop > best_pop) {
          best_pop = pop;
          best = s;
        }
      }
      if (best_pop < 1.0 - tol) {
        throw NonProductDecoding("decoding " + label(cond) +
                                 " does not leave the syndrome register in a basis state");
      }
      const auto s = static_cast<Syndrome>(best);
      if (syndrome && *syndrome != s) {
        throw NonProductDecoding("syndrome for " + label(cond) + " depends on the input state");
      }
      syndrome = s;
      residual[k] = Vector(2);
      residual[k] << out(best), out(kSyn + best);
    }

    std::optional<std::pair<Pauli, Complex>> match;
    for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      const Matrix pm = pauli_matrix(p);
      const Complex c0 = (pm * probes[0]).dot(residual[0]);
      if (std::abs(std::abs(c0) - 1.0) > tol) {
        continue;
      }
      bool ok = true;
      for (std::size_t k = 1; k < probes.size() && ok; ++k) {
        const Complex ck = (pm * probes[k]).dot(residual[k]);
        ok = std::abs(ck - c0) <= tol;
      }
      if (ok) {
        match = std::make_pair(p, c0);
        break;
      }
    }
    if (!match) {
      throw NonProductDecoding("residual register action for " + label(cond) +
                               " is not a Pauli up to one global phase");
    }
    const Syndrome s = *syndrome;
    if (owner[s] != nullptr) {
      throw SyndromeCollision("conditions " + label(*owner[s]) + " and " + label(cond) +
                              " share syndrome " + syndrome_label(s));
    }
    owner[s] = &cond;
    // Pauli corrections are their own adjoints.
    entries[s] = {s, cond, match->first, match->second};
  }
  return SyndromeTable(entries);
}

UnitaryOperator correction_unitary(const SyndromeTable& table) {
  Matrix c = Matrix::Zero(kDim, kDim);
  for (const auto& e : table.entries()) {
    const Matrix cs = pauli_matrix(e.correction);
    for (Eigen::Index y = 0; y < 2; ++y) {
      for (Eigen::Index yp = 0; yp < 2; ++yp) {
        c(y * kSyn + e.syndrome, yp * kSyn + e.syndrome) = cs(y, yp);
      }
    }
  }
  return UnitaryOperator(std::move(c));
}

StateVector apply_correction(const StateVector& state, const SyndromeTable& table) {
  return apply_unitary(correction_unitary(table), state);
}

DensityOperator apply_correction(const DensityOperator& rho, const SyndromeTable& table) {
  return apply_unitary(correction_unitary(table), rho);
}

CodeContext::CodeContext(const EncoderFrame& f)
    : frame(f),
      encoder(build_encoder(f)),
      decoder(build_decoder(encoder)),
      table(derive_syndrome_table(encoder)),
      correction(correction_unitary(table)) {}

std::shared_ptr<const CodeContext> default_code() {
  static const auto code = std::make_shared<const CodeContext>();
  return code;
}

// Pipeline

Pipeline::Pipeline(std::shared_ptr<const CodeContext> code, LogicalGate gate,
                   const ErrorCondition& error, const std::optional<NoiseSchedule>& noise)
    : Pipeline(std::move(code), logical_gate(gate), error_unitary(error), noise) {}

Pipeline::Pipeline(std::shared_ptr<const CodeContext> code, UnitaryOperator logical,
                   UnitaryOperator error, const std::optional<NoiseSchedule>& noise)
    : code_(std::move(code)), logical_(std::move(logical)), error_(std::move(error)) {
  if (!code_) {
    throw std::invalid_argument("Pipeline: null code context");
  }
  if (logical_.dim() != kDim || error_.dim() != kDim) {
    throw std::invalid_argument("Pipeline: gate and error must act on 5 qubits");
  }
  if (noise) {
    noise->validate();
    for (NoiseStage s : kAllStages) {
      noise_[static_cast<std::size_t>(s)] = noise->channels(s);
    }
  }
}

Matrix Pipeline::stage_noise(NoiseStage stage, Matrix rho) const {
  for (const auto& ch : noise_[static_cast<std::size_t>(stage)]) {
    rho = apply_kraus(ch.kraus_ops(), rho);
  }
  return rho;
}

Matrix Pipeline::propagate(const Matrix& input) const {
  Matrix rho = embed_input(input);
  rho = stage_noise(NoiseStage::kAfterEncode, conjugate(code_->encoder.mat(), rho));
  rho = stage_noise(NoiseStage::kAfterGate, conjugate(logical_.mat(), rho));
  rho = stage_noise(NoiseStage::kAfterError, conjugate(error_.mat(), rho));
  rho = stage_noise(NoiseStage::kAfterDecode, conjugate(code_->decoder.mat(), rho));
  rho = stage_noise(NoiseStage::kAfterCorrect, conjugate(code_->correction.mat(), rho));
  return rho;
}

Matrix Pipeline::apply(const Matrix& input) const { return partial_trace(propagate(input), {1}); }

DensityOperator Pipeline::run(const DensityOperator& input) const {
  if (input.dim() != 2) {
    throw std::invalid_argument("Pipeline::run: input must be a single-qubit operator");
  }
  return input.with_matrix(apply(input.mat()), 1e-9);
}

DensityOperator Pipeline::run(const StateVector& input) const { return run(input.projector()); }

std::array<double, kNumSyndromes> Pipeline::syndrome_populations(const Matrix& input) const {
  const Matrix marginal = partial_trace(propagate(input), {2, 3, 4, 5});
  std::array<double, kNumSyndromes> out{};
  for (std::size_t s = 0; s < kNumSyndromes; ++s) {
    out[s] = marginal(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)).real();
  }
  return out;
}

DensityOperator run_pipeline(LogicalGate gate, const ErrorCondition& error,
                             const DensityOperator& input,
                             const std::optional<NoiseSchedule>& noise) {
  return Pipeline(default_code(), gate, error, noise).run(input);
}

DensityOperator run_pipeline(LogicalGate gate, const ErrorCondition& error,
                             const StateVector& input,
                             const std::optional<NoiseSchedule>& noise) {
  return Pipeline(default_code(), gate, error, noise).run(input);
}

}  // namespace fiveq
