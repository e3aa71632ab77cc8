// Copyright 2026 The unicomp Authors. All Rights Reserved.
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

#ifndef UNICOMP_COMMANDS_HPP_
#define UNICOMP_COMMANDS_HPP_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unicomp/config.hpp"
#include "unicomp/diagnostics.hpp"
#include "unicomp/error.hpp"

namespace unicomp {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitInfeasible = 3,
  kExitDivergence = 4,
  kExitVerifyFailed = 5,
};

int exit_code_for(ErrorKind kind);

struct CommandOptions {
  bool force = false;
  std::optional<std::string> output_root;  // beats UNICOMP_OUTPUT_ROOT
  // Replaces the per-horizon metric in sweeps (test hook).
  std::function<double(long T)> injected_metric;
};

struct SweepRow {
  long T = 0;
  double metric = 0.0;
  double alpha = 0.0;
  long region_violations = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by T
  RateFit fit;
};

// Resolved output directory for a config (root override applied).
std::string output_directory(const RunConfig& config, const CommandOptions& options);

SweepResult sweep(const RunConfig& config, std::vector<long> horizons,
                  const CommandOptions& options = {});

// Each writes its report to `out`, a one-line reason to `err` on failure, and
// returns an exit code.
int cmd_run(const std::string& config_path, const CommandOptions& options, std::ostream& out,
            std::ostream& err);
int cmd_sweep(const std::string& config_path, const std::vector<long>& horizons,
              const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_params(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace unicomp

#endif  // UNICOMP_COMMANDS_HPP_
