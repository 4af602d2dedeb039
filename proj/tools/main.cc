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


#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.h"
#include "fiveq/version.h"

namespace {

using fiveq::tools::CommandOptions;

void add_output_flags(CLI::App* cmd, CommandOptions& o) {
  cmd->add_option("--format", o.format, "Output format: json or csv");
}

void add_noise_flags(CLI::App* cmd, CommandOptions& o) {
  cmd->add_option("--noise", o.noise_path, "JSON noise configuration file");
  cmd->add_option("--dephasing-p", o.dephasing_p,
                  "Uniform dephasing probability on every qubit after each stage");
  cmd->add_option("--t2", o.t2_ms, "T2* in ms, one value or five comma-separated")
      ->delimiter(',');
  cmd->add_option("--duration", o.duration_ms, "Total duration in ms for T2* dephasing");
  cmd->add_flag("--emulate-paper-identity-omission", o.emulate_identity_omission,
                "Assume the identity input maps to itself during tomography");
  cmd->add_option("--seed", o.seed, "Reserved; pipelines are deterministic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five-qubit code logical gate simulator with process tomography"};
  app.set_version_flag("--version", std::string(fiveq::kVersion));
  app.require_subcommand(1);

  CommandOptions options;

  auto* codewords = app.add_subcommand("codewords", "Print and verify the logical codewords");
  add_output_flags(codewords, options);

  auto* table = app.add_subcommand("syndrome-table", "Emit the derived syndrome table");
  add_output_flags(table, options);

  auto* run = app.add_subcommand("run", "Tomography of one gate/error pipeline");
  run->add_option("--gate", options.gate, "Logical gate: id, not, had");
  run->add_option("--error", options.error, "Error condition: E, B1..B5, S1..S5, BS1..BS5");
  add_output_flags(run, options);
  add_noise_flags(run, options);

  auto* sweep = app.add_subcommand("sweep", "All 48 gate/error experiments");
  add_output_flags(sweep, options);
  add_noise_flags(sweep, options);

  auto* baseline = app.add_subcommand("baseline", "Unencoded reference fidelities");
  add_output_flags(baseline, options);

  auto* advantage = app.add_subcommand("advantage", "Sweep means minus the unencoded reference");
  add_output_flags(advantage, options);
  add_noise_flags(advantage, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fiveq::tools::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto result = fiveq::tools::dispatch(command, options);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
