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

#ifndef UNICOMP_CONSTANTS_HPP_
#define UNICOMP_CONSTANTS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unicomp/algorithm.hpp"
#include "unicomp/compressor.hpp"
#include "unicomp/graph.hpp"
#include "unicomp/problem.hpp"

namespace unicomp {

struct ConstantInputs {
  int n = 1;
  double rho = 1.0;
  double rho2 = 1.0;
  double ell = 1.0;
  double gamma = 1.0;
  double tau1 = 1.0;
  double omega = 1.0;
  double alpha = 0.0;
  AssumptionContract contract;
  NormContext norms;
  std::optional<double> T;
  std::optional<double> L10;       // upper bound on L_{1,0}
  std::optional<double> s0;
  std::optional<double> nu;
  std::optional<double> kappa_nu;
  std::optional<double> tau0;
  std::optional<double> psi5;
  double kappa3_hat = 1.0;
};

class ConstantTable {
 public:
  void set(const std::string& name, double value) { values_[name] = value; }
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  double at(const std::string& name) const;
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

ConstantTable compute_constants(const ConstantInputs& in);

ConstantTable compute_constants(const NetworkGraph& graph, double ell, double gamma,
                                double tau1, double omega, double alpha,
                                const AssumptionContract& contract, const NormContext& norms,
                                std::optional<double> T, std::optional<double> f_gap_bound);

// Smallest alpha > 0 with alpha * min(a1 - alpha b1, a2 - alpha b2) = 1, or +inf.
double smaller_positive_root(double a1, double b1, double a2, double b2);

enum class Regime {
  kT1LocalNonconvex,
  kT2LocalExactFirst,
  kT3LocalPL,
  kT5GlobalNonconvex,
  kT6GlobalPL,
};

Regime parse_regime(const std::string& name);
std::string regime_name(Regime regime);
bool regime_is_local(Regime regime);

struct TheoremInputs {
  const NetworkGraph* graph = nullptr;
  const Problem* problem = nullptr;
  AssumptionContract contract;
  long T = 0;
  StateMat x0;
  std::optional<double> gamma;
  std::optional<double> tau1;
  std::optional<double> omega;
  std::optional<double> alpha;
  std::optional<double> s0;
  std::optional<double> rate;  // geometric ratio for the linear regimes
  std::optional<double> tau0;
  std::optional<double> tau4;
  double gamma_margin = 1.05;
  double tau_margin = 1.05;
  double alpha_fraction = 0.5;
  bool enforce = true;
};

struct TheoremParams {
  HyperParams hyper;
  InitMode init_mode = InitMode::kStandard;
  ConstantTable table;
  std::vector<std::string> violations;
  bool feasible() const { return violations.empty(); }
};

TheoremParams theorem_params(Regime regime, const TheoremInputs& in);

// L_{1,0} bound from the initial state with f* replaced by f_low.
double initial_lyapunov_bound(const Problem& problem, const NetworkGraph& graph,
                              const AlgorithmState& state, const HyperParams& hyper);

// Smallest power-of-two multiple of `start` exceeding kappa3_tilde at its own
// alpha; returns nullopt if none below `limit`.
std::optional<double> t1_min_horizon(const ConstantInputs& base, double start, double limit);

}  // namespace unicomp

#endif  // UNICOMP_CONSTANTS_HPP_
