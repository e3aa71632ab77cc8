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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unicomp/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"unicomp: compressed decentralized optimization runner"};
  app.require_subcommand(1);
  app.fallthrough();
  unicomp::CommandOptions opts;
  std::string root;
  app.add_option("--output-root", root, "Output root (overrides UNICOMP_OUTPUT_ROOT)");
  app.add_flag("--force", opts.force, "Overwrite existing outputs");

  std::string config;
  std::vector<long> horizons;
  auto* run = app.add_subcommand("run", "Run one experiment and write trace, summary and plots");
  run->add_option("config", config, "Config file")->required();
  auto* sweep = app.add_subcommand("sweep", "Run a horizon sweep and fit the averaged metric");
  sweep->add_option("config", config, "Config file")->required();
  sweep->add_option("--horizons", horizons, "Horizons T")->required()->expected(3, -1);
  auto* verify = app.add_subcommand("verify", "Check the compressor against its contract");
  verify->add_option("config", config, "Config file")->required();
  auto* params = app.add_subcommand("params", "Print constants and chosen hyperparameters");
  params->add_option("config", config, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : unicomp::kExitConfig;
  }
  if (!root.empty()) opts.output_root = root;

  if (*run) return unicomp::cmd_run(config, opts, std::cout, std::cerr);
  if (*sweep) return unicomp::cmd_sweep(config, horizons, opts, std::cout, std::cerr);
  if (*verify) return unicomp::cmd_verify(config, opts, std::cout, std::cerr);
  return unicomp::cmd_params(config, opts, std::cout, std::cerr);
}
