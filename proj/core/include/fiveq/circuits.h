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


#ifndef FIVEQ_CIRCUITS_H_
#define FIVEQ_CIRCUITS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fiveq/qcore.h"
#include "fiveq/qecerrors.h"

namespace fiveq {

struct CodewordPair {
  StateVector zero_l;
  StateVector one_l;
};

/// The two logical basis states, each an equal-weight signed superposition
/// of eight computational kets.
const CodewordPair& codewords();

/// Projector onto span{|0_L>, |1_L>}.
Matrix code_projector();

/// 4-bit state of qubits 2..5, qubit 2 most significant.
using Syndrome = std::uint8_t;
inline constexpr std::size_t kNumSyndromes = 16;

/// "b2b3b4b5", e.g. "0101".
std::string syndrome_label(Syndrome s);
std::optional<Syndrome> parse_syndrome(std::string_view text);

struct FrameEntry {
  ErrorCondition condition;
  Syndrome syndrome = 0;
  /// Register-qubit Pauli left behind by decoding after this condition.
  Pauli register_frame = Pauli::I;
};

/// How the encoder maps the 32 decoded states (register x syndrome) onto
/// the 32 error-displaced codewords E_a|x_L>.
class EncoderFrame {
 public:
  /// Throws std::invalid_argument unless every condition appears once,
  /// syndromes are distinct and E maps to syndrome 0000 with frame I.
  explicit EncoderFrame(const std::array<FrameEntry, kNumConditions>& entries);

  /// E -> 0000; B1..B5 -> 0001..0101; S1..S5 -> 0110..1010;
  /// BS1..BS5 -> 1011..1111. Register errors on qubit 1 keep their Pauli.
  static EncoderFrame canonical();

  /// Entries in canonical condition order.
  const std::array<FrameEntry, kNumConditions>& entries() const { return entries_; }
  const FrameEntry& entry(const ErrorCondition& c) const;

 private:
  std::array<FrameEntry, kNumConditions> entries_;
};

class EncoderConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-wise encoder: U_en (P_a|x> (x) |s_a>) = E_a |x_L>.
/// Throws EncoderConstructionError if the 32 images are not orthonormal.
UnitaryOperator build_encoder(const EncoderFrame& frame = EncoderFrame::canonical());
/// Same construction over an arbitrary candidate codeword pair.
UnitaryOperator build_encoder(const EncoderFrame& frame, const CodewordPair& words);
UnitaryOperator build_decoder(const UnitaryOperator& encoder);

enum class LogicalGate { kIdentity, kNot, kHadamard };

inline constexpr std::array<LogicalGate, 3> kAllGates = {
    LogicalGate::kIdentity, LogicalGate::kNot, LogicalGate::kHadamard};

/// "id", "not", "had".
std::string_view gate_label(LogicalGate g);
std::optional<LogicalGate> parse_gate(std::string_view text);

UnitaryOperator logical_identity();

/// Ry(pi)^(x)5 without any phase correction. Its logical block is -iY.
UnitaryOperator transversal_ry_pi();

/// i * Ry(pi)^(x)5, so that <1_L|N_L|0_L> = i and <0_L|N_L|1_L> = -i.
UnitaryOperator logical_not();

/// Hadamard on span{|0_L>,|1_L>}, identity on the 30-dim complement.
UnitaryOperator logical_hadamard();

UnitaryOperator logical_gate(LogicalGate g);

/// Single-qubit action each logical gate should produce: I, Y, H.
Matrix ideal_gate_matrix(LogicalGate g);

/// 2x2 matrix <i_L| G |j_L>.
Matrix logical_block(const Matrix& g);

}  // namespace fiveq

#endif  // FIVEQ_CIRCUITS_H_
