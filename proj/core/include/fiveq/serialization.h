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


#ifndef FIVEQ_SERIALIZATION_H_
#define FIVEQ_SERIALIZATION_H_

// JSON and CSV encodings. Complex numbers are [re, im] pairs.

#include <string>

#include <nlohmann/json.hpp>

#include "fiveq/experiments.h"
#include "fiveq/noise.h"
#include "fiveq/recovery.h"
#include "fiveq/tomography.h"

namespace fiveq {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"basis": ["E","X","-iY","Z"], "matrix": 4x4 of [re, im]}.
Json to_json(const ChiMatrix& chi);
/// Accepts either the object form above or a bare 4x4 array.
ChiMatrix chi_from_json(const Json& j);

/// [{"syndrome": "0000", "condition": "E", "correction": "I", "phase": [1, 0]}, ...]
Json to_json(const SyndromeTable& table);
SyndromeTable syndrome_table_from_json(const Json& j);

/// Noise configuration:
///   {
///     "t2_ms": 100 | [t2_1, ..., t2_5],      optional
///     "duration_ms": 40,                      optional; needs or defaults t2_ms
///     "uniform_dephasing_p": 0.05,            optional
///     "stages": {"after_encode": [{"qubit": 1, "channel": "dephasing", "p": 0.01}], ...}
///   }
/// T2-derived dephasing comes first, then uniform dephasing, then the
/// explicit stage lists. Throws std::invalid_argument on malformed input.
NoiseSchedule noise_schedule_from_json(const Json& j);
/// Fully expanded {"stages": {...}} form.
Json to_json(const NoiseSchedule& schedule);

Json to_json(const ExperimentReport& report);
Json to_json(const SweepResult& sweep);
Json to_json(const std::array<BaselineGate, 3>& baseline);
Json to_json(const std::array<AdvantageRow, 3>& advantage);

/// "gate,error,fidelity" rows.
std::string to_csv(const std::vector<ExperimentReport>& reports);
std::string to_csv(const std::array<BaselineGate, 3>& baseline);
/// "gate,qec_mean,baseline_mean,margin" rows.
std::string to_csv(const std::array<AdvantageRow, 3>& advantage);

}  // namespace fiveq

#endif  // FIVEQ_SERIALIZATION_H_
