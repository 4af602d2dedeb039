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


#include "fiveq/circuits.h"

#include <cmath>
#include <numbers>
#include <utility>

namespace fiveq {

namespace {

struct SignedKet {
  const char* bits;
  int sign;
};

constexpr std::array<SignedKet, 8> kZeroKets = {{
    {"00000", +1}, {"10111", -1}, {"01011", -1}, {"11100", +1},
    {"10010", +1}, {"00101", +1}, {"11001", +1}, {"01110", +1},
}};

constexpr std::array<SignedKet, 8> kOneKets = {{
    {"11111", +1}, {"01000", -1}, {"10100", +1}, {"00011", -1},
    {"01101", +1}, {"11010", +1}, {"00110", -1}, {"10001", -1},
}};

Eigen::Index ket_index(const char* bits) {
  Eigen::Index idx = 0;
  for (int i = 0; i < kNumQubits; ++i) {
    idx = (idx << 1) | (bits[i] == '1' ? 1 : 0);
  }
  return idx;
}

StateVector from_kets(const std::array<SignedKet, 8>& kets) {
  Vector v = Vector::Zero(kDim);
  const double amp = 1.0 / std::sqrt(8.0);
  for (const auto& k : kets) {
    v(ket_index(k.bits)) = k.sign * amp;
  }
  return StateVector(std::move(v));
}

}  // namespace

const CodewordPair& codewords() {
  static const CodewordPair pair{from_kets(kZeroKets), from_kets(kOneKets)};
  return pair;
}

Matrix code_projector() {
  const auto& cw = codewords();
  return cw.zero_l.amps() * cw.zero_l.amps().adjoint() + cw.one_l.amps() * cw.one_l.amps().adjoint();
}

std::string syndrome_label(Syndrome s) {
  std::string out(4, '0');
  for (int i = 0; i < 4; ++i) {
    if ((s >> (3 - i)) & 1) {
      out[static_cast<std::size_t>(i)] = '1';
    }
  }
  return out;
}

std::optional<Syndrome> parse_syndrome(std::string_view text) {
  if (text.size() != 4) {
    return std::nullopt;
  }
  Syndrome s = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      return std::nullopt;
    }
    s = static_cast<Syndrome>((s << 1) | (c == '1' ? 1 : 0));
  }
  return s;
}

// EncoderFrame

EncoderFrame::EncoderFrame(const std::array<FrameEntry, kNumConditions>& entries) {
  std::array<bool, kNumConditions> seen_condition{};
  std::array<bool, kNumSyndromes> seen_syndrome{};
  for (const auto& e : entries) {
    const std::size_t ci = canonical_index(e.condition);
    if (seen_condition[ci]) {
      throw std::invalid_argument("EncoderFrame: condition " + label(e.condition) + " repeated");
    }
    if (e.syndrome >= kNumSyndromes) {
      throw std::invalid_argument("EncoderFrame: syndrome out of range");
    }
    if (seen_syndrome[e.syndrome]) {
      throw std::invalid_argument("EncoderFrame: syndrome " + syndrome_label(e.syndrome) +
                                  " assigned twice");
    }
    seen_condition[ci] = true;
    seen_syndrome[e.syndrome] = true;
    entries_[ci] = e;
  }
  const auto& none = entries_[0];
  if (none.syndrome != 0 || none.register_frame != Pauli::I) {
    throw std::invalid_argument("EncoderFrame: E must map to syndrome 0000 with frame I");
  }
}

EncoderFrame EncoderFrame::canonical() {
  std::array<FrameEntry, kNumConditions> entries{};
  const auto& conds = all_conditions();
  for (std::size_t i = 0; i < kNumConditions; ++i) {
    const auto& c = conds[i];
    const Pauli frame = c.qubit == 1 ? pauli_of(c.kind) : Pauli::I;
    entries[i] = {c, static_cast<Syndrome>(i), frame};
  }
  return EncoderFrame(entries);
}

const FrameEntry& EncoderFrame::entry(const ErrorCondition& c) const {
  return entries_[canonical_index(c)];
}

UnitaryOperator build_encoder(const EncoderFrame& frame) { return build_encoder(frame, codewords()); }

UnitaryOperator build_encoder(const EncoderFrame& frame, const CodewordPair& cw) {
  if (cw.zero_l.dim() != kDim || cw.one_l.dim() != kDim) {
    throw std::invalid_argument("build_encoder: codewords must live on 5 qubits");
  }
  Matrix images(kDim, kDim);
  Matrix u(kDim, kDim);
  for (const auto& e : frame.entries()) {
    const Matrix err = error_unitary(e.condition).mat();
    Matrix w(kDim, 2);
    w.col(0) = err * cw.zero_l.amps();
    w.col(1) = err * cw.one_l.amps();
    const auto ci = static_cast<Eigen::Index>(canonical_index(e.condition));
    images.middleCols(2 * ci, 2) = w;
    // Columns |y>|s_a> for y = 0, 1 satisfy U [.. , ..] P_a = W_a.
    const Matrix block = w * pauli_matrix(e.register_frame).adjoint();
    for (Eigen::Index y = 0; y < 2; ++y) {
      u.col(y * static_cast<Eigen::Index>(kNumSyndromes) + e.syndrome) = block.col(y);
    }
  }
  const Matrix gram = images.adjoint() * images;
  const Matrix dev = gram - Matrix::Identity(kDim, kDim);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  const double worst = dev.cwiseAbs().maxCoeff(&r, &c);
  if (worst > 1e-9) {
    const auto& conds = all_conditions();
    throw EncoderConstructionError(
        "encoder images not orthonormal: <" + label(conds[static_cast<std::size_t>(r / 2)]) +
        "|" + std::to_string(r % 2) + "_L> vs <" + label(conds[static_cast<std::size_t>(c / 2)]) +
        "|" + std::to_string(c % 2) + "_L> deviates by " + std::to_string(worst));
  }
  return UnitaryOperator(std::move(u));
}

UnitaryOperator build_decoder(const UnitaryOperator& encoder) { return encoder.adjoint(); }

// Logical gates

std::string_view gate_label(LogicalGate g) {
  switch (g) {
    case LogicalGate::kIdentity:
      return "id";
    case LogicalGate::kNot:
      return "not";
    case LogicalGate::kHadamard:
      return "had";
  }
  return "?";
}

std::optional<LogicalGate> parse_gate(std::string_view text) {
  for (LogicalGate g : kAllGates) {
    if (gate_label(g) == text) {
      return g;
    }
  }
  return std::nullopt;
}

UnitaryOperator logical_identity() { return UnitaryOperator::identity(kDim); }

UnitaryOperator transversal_ry_pi() {
  Matrix m = ry(std::numbers::pi);
  Matrix out = m;
  for (int q = 1; q < kNumQubits; ++q) {
    out = tensor(out, m);
  }
  return UnitaryOperator(std::move(out));
}

UnitaryOperator logical_not() {
  return UnitaryOperator(Complex(0.0, 1.0) * transversal_ry_pi().mat());
}

UnitaryOperator logical_hadamard() {
  const auto& cw = codewords();
  const Vector& z = cw.zero_l.amps();
  const Vector& o = cw.one_l.amps();
  const double h = 1.0 / std::sqrt(2.0);
  Matrix m = Matrix::Identity(kDim, kDim) - code_projector();
  m += h * (z * z.adjoint() + z * o.adjoint() + o * z.adjoint() - o * o.adjoint());
  return UnitaryOperator(std::move(m));
}

UnitaryOperator logical_gate(LogicalGate g) {
  switch (g) {
    case LogicalGate::kIdentity:
      return logical_identity();
    case LogicalGate::kNot:
      return logical_not();
    case LogicalGate::kHadamard:
      return logical_hadamard();
  }
  throw std::invalid_argument("unknown logical gate");
}

Matrix ideal_gate_matrix(LogicalGate g) {
  switch (g) {
    case LogicalGate::kIdentity:
      return pauli_matrix(Pauli::I);
    case LogicalGate::kNot:
      return pauli_matrix(Pauli::Y);
    case LogicalGate::kHadamard:
      return (pauli_matrix(Pauli::X) + pauli_matrix(Pauli::Z)) / std::sqrt(2.0);
  }
  throw std::invalid_argument("unknown logical gate");
}

Matrix logical_block(const Matrix& g) {
  const auto& cw = codewords();
  Matrix basis(kDim, 2);
  basis.col(0) = cw.zero_l.amps();
  basis.col(1) = cw.one_l.amps();
  return basis.adjoint() * g * basis;
}

}  // namespace fiveq
