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


#include "fiveq/qecerrors.h"

#include <stdexcept>

namespace fiveq {

namespace {

ErrorCondition make(ErrorKind kind, int qubit) {
  if (qubit < 1 || qubit > kNumQubits) {
    throw std::out_of_range("error condition qubit must be in 1..5");
  }
  return {kind, qubit};
}

std::string_view prefix(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone:
      return "E";
    case ErrorKind::kBitFlip:
      return "B";
    case ErrorKind::kPhaseFlip:
      return "S";
    case ErrorKind::kBitPhaseFlip:
      return "BS";
  }
  return "?";
}

}  // namespace

ErrorCondition ErrorCondition::bit_flip(int qubit) { return make(ErrorKind::kBitFlip, qubit); }
ErrorCondition ErrorCondition::phase_flip(int qubit) { return make(ErrorKind::kPhaseFlip, qubit); }
ErrorCondition ErrorCondition::bit_phase_flip(int qubit) {
  return make(ErrorKind::kBitPhaseFlip, qubit);
}

const std::array<ErrorCondition, kNumConditions>& all_conditions() {
  static const std::array<ErrorCondition, kNumConditions> conditions = [] {
    std::array<ErrorCondition, kNumConditions> out{};
    std::size_t n = 0;
    out[n++] = ErrorCondition::none();
    for (ErrorKind kind : {ErrorKind::kBitFlip, ErrorKind::kPhaseFlip, ErrorKind::kBitPhaseFlip}) {
      for (int q = 1; q <= kNumQubits; ++q) {
        out[n++] = {kind, q};
      }
    }
    return out;
  }();
  return conditions;
}

std::size_t canonical_index(const ErrorCondition& c) {
  switch (c.kind) {
    case ErrorKind::kNone:
      return 0;
    case ErrorKind::kBitFlip:
      return static_cast<std::size_t>(c.qubit);
    case ErrorKind::kPhaseFlip:
      return static_cast<std::size_t>(5 + c.qubit);
    case ErrorKind::kBitPhaseFlip:
      return static_cast<std::size_t>(10 + c.qubit);
  }
  throw std::invalid_argument("unknown error kind");
}

std::string label(const ErrorCondition& c) {
  if (c.kind == ErrorKind::kNone) {
    return "E";
  }
  return std::string(prefix(c.kind)) + std::to_string(c.qubit);
}

std::optional<ErrorCondition> parse_condition(std::string_view text) {
  for (const auto& c : all_conditions()) {
    if (label(c) == text) {
      return c;
    }
  }
  return std::nullopt;
}

Pauli pauli_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone:
      return Pauli::I;
    case ErrorKind::kBitFlip:
      return Pauli::X;
    case ErrorKind::kPhaseFlip:
      return Pauli::Z;
    case ErrorKind::kBitPhaseFlip:
      return Pauli::Y;
  }
  return Pauli::I;
}

UnitaryOperator error_unitary(const ErrorCondition& c) {
  if (c.kind == ErrorKind::kNone) {
    return UnitaryOperator::identity(kDim);
  }
  return embed(pauli_matrix(pauli_of(c.kind)), c.qubit);
}

}  // namespace fiveq
