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


#include "fiveq/noise.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fiveq {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability " + std::to_string(p) +
                                " outside [0, 1]");
  }
}

}  // namespace

KrausChannel dephasing_channel(double p, int qubit) {
  check_probability(p, "dephasing_channel");
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(kDim, kDim));
  ops.push_back(std::sqrt(p) * embed_operator(pauli_matrix(Pauli::Z), qubit));
  return KrausChannel(std::move(ops));
}

KrausChannel depolarizing_channel(double p, int qubit) {
  check_probability(p, "depolarizing_channel");
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(kDim, kDim));
  for (Pauli pauli : {Pauli::X, Pauli::Y, Pauli::Z}) {
    ops.push_back(std::sqrt(p / 3.0) * embed_operator(pauli_matrix(pauli), qubit));
  }
  return KrausChannel(std::move(ops));
}

double p_from_t2(double t_ms, double t2_ms) {
  if (!(t2_ms > 0.0)) {
    throw std::invalid_argument("p_from_t2: T2 must be positive");
  }
  if (!(t_ms >= 0.0)) {
    throw std::invalid_argument("p_from_t2: duration must be non-negative");
  }
  return -std::expm1(-t_ms / t2_ms) / 2.0;
}

std::string_view channel_label(ChannelKind k) {
  switch (k) {
    case ChannelKind::kNone:
      return "none";
    case ChannelKind::kDephasing:
      return "dephasing";
    case ChannelKind::kDepolarizing:
      return "depolarizing";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view text) {
  for (ChannelKind k : {ChannelKind::kNone, ChannelKind::kDephasing, ChannelKind::kDepolarizing}) {
    if (channel_label(k) == text) {
      return k;
    }
  }
  return std::nullopt;
}

std::string_view stage_label(NoiseStage s) {
  switch (s) {
    case NoiseStage::kAfterEncode:
      return "after_encode";
    case NoiseStage::kAfterGate:
      return "after_gate";
    case NoiseStage::kAfterError:
      return "after_error";
    case NoiseStage::kAfterDecode:
      return "after_decode";
    case NoiseStage::kAfterCorrect:
      return "after_correct";
  }
  return "?";
}

std::optional<NoiseStage> parse_stage(std::string_view text) {
  for (NoiseStage s : kAllStages) {
    if (stage_label(s) == text) {
      return s;
    }
  }
  return std::nullopt;
}

NoiseSchedule NoiseSchedule::uniform_dephasing(double p) {
  check_probability(p, "uniform_dephasing");
  NoiseSchedule out;
  for (NoiseStage s : {NoiseStage::kAfterEncode, NoiseStage::kAfterGate, NoiseStage::kAfterError,
                       NoiseStage::kAfterDecode}) {
    for (int q = 1; q <= kNumQubits; ++q) {
      out.add(s, {q, ChannelKind::kDephasing, p});
    }
  }
  return out;
}

NoiseSchedule NoiseSchedule::from_t2(const std::array<double, kNumQubits>& t2_ms, double total_ms) {
  NoiseSchedule out;
  const double stage_ms = total_ms / 4.0;
  for (NoiseStage s : {NoiseStage::kAfterEncode, NoiseStage::kAfterGate, NoiseStage::kAfterError,
                       NoiseStage::kAfterDecode}) {
    for (int q = 1; q <= kNumQubits; ++q) {
      out.add(s, {q, ChannelKind::kDephasing, p_from_t2(stage_ms, t2_ms[static_cast<std::size_t>(q - 1)])});
    }
  }
  return out;
}

void NoiseSchedule::add(NoiseStage stage, ChannelSpec spec) {
  stages_[static_cast<std::size_t>(stage)].push_back(spec);
}

void NoiseSchedule::merge(const NoiseSchedule& other) {
  for (std::size_t i = 0; i < kNumStages; ++i) {
    stages_[i].insert(stages_[i].end(), other.stages_[i].begin(), other.stages_[i].end());
  }
}

bool NoiseSchedule::empty() const {
  for (const auto& stage : stages_) {
    for (const auto& spec : stage) {
      if (spec.kind != ChannelKind::kNone && spec.p != 0.0) {
        return false;
      }
    }
  }
  return true;
}

void NoiseSchedule::validate() const {
  for (const auto& stage : stages_) {
    for (const auto& spec : stage) {
      if (spec.qubit < 1 || spec.qubit > kNumQubits) {
        throw std::invalid_argument("noise schedule: qubit " + std::to_string(spec.qubit) +
                                    " outside 1..5");
      }
      check_probability(spec.p, "noise schedule");
    }
  }
}

std::vector<KrausChannel> NoiseSchedule::channels(NoiseStage stage) const {
  std::vector<KrausChannel> out;
  for (const auto& spec : at(stage)) {
    if (spec.kind != ChannelKind::kNone) {
      out.push_back(make_channel(spec));
    }
  }
  return out;
}

KrausChannel make_channel(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelKind::kNone:
      return KrausChannel::identity(kDim);
    case ChannelKind::kDephasing:
      return dephasing_channel(spec.p, spec.qubit);
    case ChannelKind::kDepolarizing:
      return depolarizing_channel(spec.p, spec.qubit);
  }
  throw std::invalid_argument("unknown channel kind");
}

}  // namespace fiveq
