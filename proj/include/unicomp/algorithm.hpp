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

#ifndef UNICOMP_ALGORITHM_HPP_
#define UNICOMP_ALGORITHM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicomp/compressor.hpp"
#include "unicomp/graph.hpp"
#include "unicomp/linalg.hpp"
#include "unicomp/problem.hpp"

namespace unicomp {

struct ScalingSchedule {
  enum class Mode { kConstant, kGeometric, kRecursive };
  Mode mode = Mode::kConstant;
  double s0 = 1.0;
  double rate = 1.0;    // geometric ratio
  double eps8 = 0.0;    // recursive contraction
  double kappa4 = 0.0;  // recursive additive term

  static ScalingSchedule constant(double s0);
  static ScalingSchedule geometric(double s0, double rate);
  static ScalingSchedule recursive(double s0, double eps8, double kappa4);

  // s_{k+1} from s_k.
  double advance(double s) const;
};

std::string schedule_mode_name(ScalingSchedule::Mode mode);

void validate(const ScalingSchedule& schedule);

// s_k obtained by k successive advances from s0 (bitwise identical to the runner).
double scaling_value(const ScalingSchedule& schedule, long k, std::optional<long> T = {});

struct HyperParams {
  double alpha = 0.01;
  double beta = 1.0;
  double gamma = 1.0;
  double omega = 1.0;
  double tau1 = 1.0;
  ScalingSchedule schedule;
};

enum class InitMode { kStandard, kExactFirstRound, kSharedX0 };
InitMode parse_init_mode(const std::string& name);
std::string init_mode_name(InitMode mode);

struct AlgorithmState {
  StateMat x;      // x_{i,k}
  StateMat v;      // v_{i,k}
  StateMat x_hat;  // x̂_{i,k-1}
  StateMat y;      // y_{i,k-1}
  long k = 0;
  double s = 1.0;  // s_k
  std::uint64_t bits_cum = 0;
};

StateMat initial_points(int n, int d, InitMode mode, std::uint64_t seed, double scale);

AlgorithmState init_state(const Problem& problem, const NetworkGraph& graph,
                          const HyperParams& hyper, InitMode init_mode,
                          std::uint64_t x0_seed, double x0_scale = 1.0);

AlgorithmState init_state_from(const NetworkGraph& graph, const HyperParams& hyper,
                               const StateMat& x0, InitMode init_mode);

struct StepReport {
  std::vector<double> pre_p;    // ||x_i - x̂_{i,k-1}||_p
  std::vector<double> post_p;   // ||x_i - x̂_{i,k}||_p
  std::vector<double> pre_sq;   // ||x_i - x̂_{i,k-1}||_2^2
  std::vector<double> post_sq;  // ||x_i - x̂_{i,k}||_2^2
  std::uint64_t bits = 0;
  double y_residual = 0.0;      // max |y - L x̂|
  double v_mean = 0.0;          // max |mean_i v_i|
  double mean_dynamics = 0.0;   // ||x̄_{k+1} - (x̄_k - alpha ḡ_k)||
};

struct StepOptions {
  double norm_p = 2.0;
  int workers = 1;
};

// One round of the method; consumes s_k then advances it.
StepReport step(AlgorithmState& state, const Problem& problem, const NetworkGraph& graph,
                const CompressorSpec& compressor, const HyperParams& hyper,
                const StepOptions& options = {});

struct TraceRow {
  long k = 0;
  double f_bar = 0.0;
  double grad_sq = 0.0;
  double consensus = 0.0;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0, e5 = 0.0;
  double s_k = 0.0;
  std::uint64_t bits_cum = 0;
  bool region_ok = true;
  double w_F_sq = 0.0;      // ||w||_F^2
  double max_pre_p = 0.0;   // max_i ||x_i - x̂_{i,k-1}||_p
};

struct AgentRecord {
  long k = 0;
  double s_k = 0.0;
  std::vector<double> pre_p, post_p, pre_sq, post_sq;
};

struct RunOptions {
  long T = 0;
  InitMode init_mode = InitMode::kStandard;
  std::uint64_t seed = 0;
  double x0_scale = 1.0;
  std::optional<StateMat> x0;
  int workers = 1;
  bool record_agents = false;
  std::optional<AssumptionContract> contract;  // enables the region check
};

struct RunTrace {
  std::vector<TraceRow> rows;
  std::vector<AgentRecord> agents;
  AlgorithmState final_state;
  bool lower_gap = false;  // e4 uses f_low instead of f*
  long region_violations = 0;
  double max_y_residual = 0.0;
  double max_v_mean = 0.0;
  double max_mean_dynamics = 0.0;
  HyperParams hyper;
};

// Seeds feeding each named substream.
std::uint64_t substream_seed(std::uint64_t seed, const std::string& name);

RunTrace run(const Problem& problem, const NetworkGraph& graph,
             const CompressorSpec& compressor, const HyperParams& hyper,
             const RunOptions& options);

}  // namespace unicomp

#endif  // UNICOMP_ALGORITHM_HPP_
