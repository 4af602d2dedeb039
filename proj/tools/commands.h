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


#ifndef FIVEQ_TOOLS_COMMANDS_H_
#define FIVEQ_TOOLS_COMMANDS_H_

// Subcommand bodies of the fiveq tool, separated from argument parsing so
// they can be driven directly from tests.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiveq/noise.h"

namespace fiveq::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::string gate = "id";
  std::string error = "E";
  std::optional<std::string> noise_path;
  std::optional<double> dephasing_p;
  std::vector<double> t2_ms;
  std::optional<double> duration_ms;
  std::string format = "json";
  bool emulate_identity_omission = false;
  std::optional<std::uint64_t> seed;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Noise schedule assembled from --noise, --t2/--duration and --dephasing-p,
/// or nullopt when none is given. Throws UsageError.
std::optional<NoiseSchedule> resolve_noise(const CommandOptions& options);

CommandResult cmd_codewords(const CommandOptions& options);
CommandResult cmd_syndrome_table(const CommandOptions& options);
CommandResult cmd_run(const CommandOptions& options);
CommandResult cmd_sweep(const CommandOptions& options);
CommandResult cmd_baseline(const CommandOptions& options);
CommandResult cmd_advantage(const CommandOptions& options);

/// Dispatches by subcommand name and maps exceptions onto exit codes.
CommandResult dispatch(const std::string& command, const CommandOptions& options);

}  // namespace fiveq::tools

#endif  // FIVEQ_TOOLS_COMMANDS_H_
