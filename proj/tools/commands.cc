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


#include "commands.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fiveq/circuits.h"
#include "fiveq/experiments.h"
#include "fiveq/qecerrors.h"
#include "fiveq/recovery.h"
#include "fiveq/serialization.h"
#include "fiveq/version.h"

namespace fiveq::tools {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const CommandOptions& options, bool csv_allowed) {
  if (options.format == "json") {
    return;
  }
  if (options.format == "csv" && csv_allowed) {
    return;
  }
  throw UsageError("unsupported --format '" + options.format + "'");
}

LogicalGate require_gate(const std::string& text) {
  const auto g = parse_gate(text);
  if (!g) {
    throw UsageError("unknown gate '" + text + "' (expected id, not or had)");
  }
  return *g;
}

ErrorCondition require_error(const std::string& text) {
  const auto c = parse_condition(text);
  if (!c) {
    throw UsageError("unknown error condition '" + text + "' (expected E, B1..B5, S1..S5, BS1..BS5)");
  }
  return *c;
}

ExperimentOptions experiment_options(const CommandOptions& options) {
  ExperimentOptions out;
  out.noise = resolve_noise(options);
  out.emulate_identity_omission = options.emulate_identity_omission;
  out.seed = options.seed;
  return out;
}

Json metadata(const ExperimentOptions& options) {
  Json meta{{"version", kVersion}};
  meta["noise"] = options.noise ? to_json(*options.noise) : Json(nullptr);
  meta["seed"] = options.seed ? Json(*options.seed) : Json(nullptr);
  meta["identity_assumed"] = options.emulate_identity_omission;
  return meta;
}

std::string ket_list(const StateVector& v) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < v.dim(); ++i) {
    const double a = v[i].real();
    if (std::abs(v[i]) < 1e-12) {
      continue;
    }
    if (!first) {
      os << ' ';
    }
    first = false;
    os << (a < 0 ? '-' : '+') << '|';
    for (int b = kNumQubits - 1; b >= 0; --b) {
      os << (((i >> b) & 1) ? '1' : '0');
    }
    os << "⟩";
  }
  return os.str();
}

Json describe_codeword(const StateVector& v, bool& amplitudes_ok) {
  const double expected = 1.0 / std::sqrt(8.0);
  Json amps = Json::array();
  int nonzero = 0;
  for (Eigen::Index i = 0; i < v.dim(); ++i) {
    if (std::abs(v[i]) < 1e-12) {
      continue;
    }
    ++nonzero;
    if (std::abs(std::abs(v[i]) - expected) > 1e-12 || std::abs(v[i].imag()) > 1e-12) {
      amplitudes_ok = false;
    }
    std::string bits;
    for (int b = kNumQubits - 1; b >= 0; --b) {
      bits += ((i >> b) & 1) ? '1' : '0';
    }
    amps.push_back(Json{{"ket", bits}, {"amplitude", complex_to_json(v[i])}});
  }
  if (nonzero != 8) {
    amplitudes_ok = false;
  }
  return Json{{"kets", ket_list(v)}, {"amplitudes", std::move(amps)},
              {"norm", v.amps().norm()}};
}

}  // namespace

std::optional<NoiseSchedule> resolve_noise(const CommandOptions& options) {
  std::optional<NoiseSchedule> schedule;
  auto merge = [&schedule](const NoiseSchedule& s) {
    if (!schedule) {
      schedule.emplace();
    }
    schedule->merge(s);
  };
  try {
    if (options.noise_path) {
      std::ifstream in(*options.noise_path);
      if (!in) {
        throw UsageError("cannot open noise config '" + *options.noise_path + "'");
      }
      Json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw UsageError("noise config is not valid JSON: " + std::string(e.what()));
      }
      merge(noise_schedule_from_json(j));
    }
    if (!options.t2_ms.empty() || options.duration_ms) {
      std::array<double, kNumQubits> t2{};
      t2.fill(kDefaultT2Ms);
      if (options.t2_ms.size() == 1) {
        t2.fill(options.t2_ms.front());
      } else if (options.t2_ms.size() == kNumQubits) {
        std::copy(options.t2_ms.begin(), options.t2_ms.end(), t2.begin());
      } else if (!options.t2_ms.empty()) {
        throw UsageError("--t2 takes 1 or 5 values");
      }
      merge(NoiseSchedule::from_t2(t2, options.duration_ms.value_or(kDefaultDurationMs)));
    }
    if (options.dephasing_p) {
      merge(NoiseSchedule::uniform_dephasing(*options.dephasing_p));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return schedule;
}

CommandResult cmd_codewords(const CommandOptions& options) {
  require_format(options, false);
  const auto& cw = codewords();
  bool amplitudes_ok = true;
  Json zero = describe_codeword(cw.zero_l, amplitudes_ok);
  Json one = describe_codeword(cw.one_l, amplitudes_ok);
  const Complex overlap = cw.zero_l.inner(cw.one_l);
  const bool orthogonal = std::abs(overlap) < 1e-12;
  const bool normalized = std::abs(cw.zero_l.amps().norm() - 1.0) < 1e-12 &&
                          std::abs(cw.one_l.amps().norm() - 1.0) < 1e-12;
  Json out{{"zero_L", std::move(zero)},
           {"one_L", std::move(one)},
           {"checks",
            {{"amplitudes", amplitudes_ok},
             {"orthogonal", orthogonal},
             {"normalized", normalized},
             {"overlap", complex_to_json(overlap)}}},
           {"version", kVersion}};
  CommandResult r;
  r.out = dump(out);
  if (!(amplitudes_ok && orthogonal && normalized)) {
    r.exit_code = kExitInternal;
    r.err = "codeword verification failed\n";
  }
  return r;
}

CommandResult cmd_syndrome_table(const CommandOptions& options) {
  require_format(options, false);
  const auto code = default_code();
  CommandResult r;
  r.out = dump(to_json(code->table));
  return r;
}

CommandResult cmd_run(const CommandOptions& options) {
  require_format(options, true);
  const LogicalGate gate = require_gate(options.gate);
  const ErrorCondition error = require_error(options.error);
  const ExperimentOptions exp = experiment_options(options);
  const ExperimentReport report = run_experiment(default_code(), gate, error, exp);
  CommandResult r;
  if (options.format == "csv") {
    r.out = to_csv(std::vector<ExperimentReport>{report});
  } else {
    Json out = to_json(report);
    out["metadata"] = metadata(exp);
    r.out = dump(out);
  }
  return r;
}

CommandResult cmd_sweep(const CommandOptions& options) {
  require_format(options, true);
  const ExperimentOptions exp = experiment_options(options);
  const SweepResult sweep = run_sweep(default_code(), exp);
  CommandResult r;
  if (options.format == "csv") {
    r.out = to_csv(sweep.reports);
  } else {
    Json out = to_json(sweep);
    out["metadata"] = metadata(exp);
    r.out = dump(out);
  }
  return r;
}

CommandResult cmd_baseline(const CommandOptions& options) {
  require_format(options, true);
  const auto baseline = run_baseline();
  CommandResult r;
  if (options.format == "csv") {
    r.out = to_csv(baseline);
  } else {
    Json out = to_json(baseline);
    out["reference_mean"] = kBaselineMean;
    out["metadata"] = Json{{"version", kVersion}};
    r.out = dump(out);
  }
  return r;
}

CommandResult cmd_advantage(const CommandOptions& options) {
  require_format(options, true);
  const ExperimentOptions exp = experiment_options(options);
  const auto advantage = compute_advantage(run_sweep(default_code(), exp), run_baseline());
  CommandResult r;
  if (options.format == "csv") {
    r.out = to_csv(advantage);
  } else {
    Json out = to_json(advantage);
    out["metadata"] = metadata(exp);
    r.out = dump(out);
  }
  return r;
}

CommandResult dispatch(const std::string& command, const CommandOptions& options) {
  try {
    if (command == "codewords") return cmd_codewords(options);
    if (command == "syndrome-table") return cmd_syndrome_table(options);
    if (command == "run") return cmd_run(options);
    if (command == "sweep") return cmd_sweep(options);
    if (command == "baseline") return cmd_baseline(options);
    if (command == "advantage") return cmd_advantage(options);
    throw UsageError("unknown command '" + command + "'");
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace fiveq::tools
