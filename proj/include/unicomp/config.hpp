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

#ifndef UNICOMP_CONFIG_HPP_
#define UNICOMP_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>
#include "unicomp/algorithm.hpp"
#include "unicomp/compressor.hpp"
#include "unicomp/constants.hpp"
#include "unicomp/graph.hpp"
#include "unicomp/problem.hpp"

namespace unicomp {

struct ProblemConfig {
  std::string family = "quadratic";
  int d = 4;
  std::uint64_t seed = 1;
  double condition = 10.0;
  double lambda = 0.1;
  int samples = 20;
};

struct GraphConfig {
  TopologySpec topology;
  int n = 4;
};

struct CompressorConfig {
  CompressorSpec spec;
  // Per-field overrides of the derived contract.
  std::optional<ContractClass> cls;
  std::optional<double> p, r, C, delta;
  long verify_samples = 10000;
  long verify_trials = 10000;
};

struct AlgorithmConfig {
  bool theoretical = false;
  std::optional<Regime> regime;
  long T = 100;
  InitMode init_mode = InitMode::kStandard;
  bool init_mode_set = false;
  std::uint64_t seed = 1;
  double x0_scale = 1.0;
  int workers = 1;
  bool enforce = true;
  std::optional<double> alpha, alpha_scale, gamma, tau1, omega;
  std::optional<double> s0, rate, tau0, tau4, eps8, kappa4, kappa4_a, kappa4_b;
  std::optional<ScalingSchedule::Mode> schedule;
  double gamma_margin = 1.05;
  double tau_margin = 1.05;
  double alpha_fraction = 0.5;
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
  bool svg = true;
  bool per_agent_trace = false;
};

struct RunConfig {
  ProblemConfig problem;
  GraphConfig graph;
  CompressorConfig compressor;
  AlgorithmConfig algorithm;
  OutputConfig output;
};

// Sectioned key = value text; dotted keys nest ("inner.kind = one_bit").
nlohmann::json parse_ini(const std::string& text);

RunConfig config_from_json(const nlohmann::json& j);
// Dispatches on the first non-space character: '{' means JSON.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

CompressorSpec compressor_from_json(const nlohmann::json& j);
AssumptionContract effective_contract(const CompressorConfig& c, int d);

// Everything needed to call run().
struct Experiment {
  NetworkGraph graph;
  ProblemPtr problem;
  CompressorSpec compressor;
  AssumptionContract contract;
  StateMat x0;
  TheoremParams params;
  RunOptions options;
};

// Builds graph/problem/x0 and resolves hyperparameters for horizon T
// (config value when T is empty).
Experiment prepare(const RunConfig& config, std::optional<long> T = {});

}  // namespace unicomp

#endif  // UNICOMP_CONFIG_HPP_
