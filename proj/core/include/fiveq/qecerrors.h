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


#ifndef FIVEQ_QECERRORS_H_
#define FIVEQ_QECERRORS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fiveq/qcore.h"

namespace fiveq {

enum class ErrorKind {
  kNone,          // E
  kBitFlip,       // Bk, Pauli X
  kPhaseFlip,     // Sk, Pauli Z
  kBitPhaseFlip,  // BSk, Pauli Y
};

/// One of the 16 single-qubit error conditions. `qubit` is 0 for E.
struct ErrorCondition {
  ErrorKind kind = ErrorKind::kNone;
  int qubit = 0;

  static constexpr ErrorCondition none() { return {}; }
  static ErrorCondition bit_flip(int qubit);
  static ErrorCondition phase_flip(int qubit);
  static ErrorCondition bit_phase_flip(int qubit);

  friend constexpr bool operator==(const ErrorCondition&, const ErrorCondition&) = default;
};

inline constexpr std::size_t kNumConditions = 16;

/// Canonical order: E, B1..B5, S1..S5, BS1..BS5.
const std::array<ErrorCondition, kNumConditions>& all_conditions();

/// Position of `c` in all_conditions().
std::size_t canonical_index(const ErrorCondition& c);

std::string label(const ErrorCondition& c);
std::optional<ErrorCondition> parse_condition(std::string_view text);

Pauli pauli_of(ErrorKind kind);

/// Phase-free Pauli representative of the error on the 5-qubit register.
UnitaryOperator error_unitary(const ErrorCondition& c);

}  // namespace fiveq

#endif  // FIVEQ_QECERRORS_H_
