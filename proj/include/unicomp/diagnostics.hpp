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

#ifndef UNICOMP_DIAGNOSTICS_HPP_
#define UNICOMP_DIAGNOSTICS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "unicomp/algorithm.hpp"

namespace unicomp {

struct LyapunovComponents {
  double f_bar = 0.0;
  double grad_sq = 0.0;
  double consensus = 0.0;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0, e5 = 0.0;
  double w_F_sq = 0.0;
  bool lower_gap = false;

  double L1() const { return e1 + e2 + e3 + e4; }
  double L2() const { return L1() + e5; }
  double L1_hat() const { return 2.0 * e1 + w_F_sq + e4; }
};

LyapunovComponents lyapunov_components(const AlgorithmState& state, const Problem& problem,
                                       const NetworkGraph& graph, const HyperParams& hyper);

inline double row_L1(const TraceRow& r) { return r.e1 + r.e2 + r.e3 + r.e4; }
inline double row_L1_hat(const TraceRow& r) { return 2.0 * r.e1 + r.w_F_sq + r.e4; }

struct CheckReport {
  long checked = 0;
  long violations = 0;
  double worst = 0.0;  // largest lhs / rhs ratio seen
  bool pass() const { return violations == 0; }
};

CheckReport lyapunov_sandwich_check(const RunTrace& trace, double eps1, double eps2);

struct DescentConstants {
  double alpha = 0.0;
  double eps6 = 0.0;
  double n = 1.0;
  double d_tilde = 1.0;
  double eps5 = 0.0;
  double psi2 = 0.0;
  double C = 0.0;
};

// L1_{k+1} <= (1 - alpha eps6) L1_k + alpha n d~^2 (1 - 2 eps5) psi2 C^2 s_k^2
CheckReport lyapunov_descent_check(const RunTrace& trace, const DescentConstants& c);

enum class RateModel { kPowerLaw, kGeometric };

struct RateFit {
  double slope = 0.0;  // power-law exponent, or geometric ratio
  double intercept = 0.0;
  double r_squared = 0.0;
  long points = 0;
};

RateFit rate_fit(const std::vector<std::pair<double, double>>& series, RateModel model,
                 double burn_in_fraction = 0.1);

// Deterministic contraction for locally bounded compressors (needs agent records).
CheckReport contraction_check(const RunTrace& trace, const AssumptionContract& contract,
                              const HyperParams& hyper);

// Mean-square contraction aggregated over independent runs of the same configuration.
CheckReport global_contraction_check(const std::vector<RunTrace>& traces,
                                     const AssumptionContract& contract,
                                     const HyperParams& hyper);

// (1/T) sum_{k<T} (grad_sq_k + consensus_k)
double averaged_metric(const RunTrace& trace);

std::string trace_csv(const RunTrace& trace);

}  // namespace unicomp

#endif  // UNICOMP_DIAGNOSTICS_HPP_
