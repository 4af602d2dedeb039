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


#ifndef FIVEQ_NOISE_H_
#define FIVEQ_NOISE_H_

// Kraus noise channels and per-stage noise schedules for the encode ->
// gate -> error -> decode -> correct pipeline.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fiveq/qcore.h"

namespace fiveq {

/// Kraus set {sqrt(1-p) I, sqrt(p) Z_qubit}. Requires 0 <= p <= 1.
KrausChannel dephasing_channel(double p, int qubit);

/// Kraus set {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z} on `qubit`.
/// Requires 0 <= p <= 1; p = 3/4 fully depolarizes.
KrausChannel depolarizing_channel(double p, int qubit);

/// Dephasing probability (1 - exp(-t/t2)) / 2 accumulated over t ms.
/// Throws std::invalid_argument for t < 0 or t2 <= 0.
double p_from_t2(double t_ms, double t2_ms);

/// Placeholder per-qubit T2* until measured values are configured.
inline constexpr double kDefaultT2Ms = 100.0;
inline constexpr double kDefaultDurationMs = 40.0;

enum class ChannelKind { kNone, kDephasing, kDepolarizing };

std::string_view channel_label(ChannelKind k);
std::optional<ChannelKind> parse_channel(std::string_view text);

struct ChannelSpec {
  int qubit = 1;
  ChannelKind kind = ChannelKind::kNone;
  double p = 0.0;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

enum class NoiseStage {
  kAfterEncode,
  kAfterGate,
  kAfterError,
  kAfterDecode,
  kAfterCorrect,
};
inline constexpr std::size_t kNumStages = 5;
inline constexpr std::array<NoiseStage, kNumStages> kAllStages = {
    NoiseStage::kAfterEncode, NoiseStage::kAfterGate, NoiseStage::kAfterError,
    NoiseStage::kAfterDecode, NoiseStage::kAfterCorrect};

/// "after_encode", "after_gate", ...
std::string_view stage_label(NoiseStage s);
std::optional<NoiseStage> parse_stage(std::string_view text);

/// Channels applied between the ideal unitary stages, in listed order.
class NoiseSchedule {
 public:
  NoiseSchedule() = default;

  /// Dephasing p on every qubit after encode, gate, error and decode.
  static NoiseSchedule uniform_dephasing(double p);

  /// Dephasing from T2* decay: each of the four standard stages lasts
  /// total_ms / 4 and qubit q dephases with p_from_t2(total_ms / 4, t2[q-1]).
  static NoiseSchedule from_t2(const std::array<double, kNumQubits>& t2_ms, double total_ms);

  void add(NoiseStage stage, ChannelSpec spec);
  /// Appends every channel of `other` after this schedule's channels.
  void merge(const NoiseSchedule& other);

  const std::vector<ChannelSpec>& at(NoiseStage stage) const {
    return stages_[static_cast<std::size_t>(stage)];
  }
  bool empty() const;

  /// Throws std::invalid_argument for bad qubits or probabilities.
  void validate() const;

  /// Kraus channels realizing the stage, one per non-trivial spec.
  std::vector<KrausChannel> channels(NoiseStage stage) const;

  friend bool operator==(const NoiseSchedule&, const NoiseSchedule&) = default;

 private:
  std::array<std::vector<ChannelSpec>, kNumStages> stages_;
};

KrausChannel make_channel(const ChannelSpec& spec);

}  // namespace fiveq

#endif  // FIVEQ_NOISE_H_
