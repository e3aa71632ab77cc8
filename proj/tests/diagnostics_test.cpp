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

#include <gtest/gtest.h>

#include <cmath>

#include "unicomp/constants.hpp"
#include "unicomp/diagnostics.hpp"
#include "unicomp/error.hpp"

namespace unicomp {
namespace {

QuadraticProblem two_agent_quadratic() {
  Mat A2(2, 2);
  A2 << 2, 0, 0, 1;
  Vec b1(2), b2(2);
  b1 << 1, 0;
  b2 << 0, 1;
  return QuadraticProblem({Mat::Identity(2, 2), A2}, {b1, b2});
}

TEST(Lyapunov, HandComputedComponents) {
  const QuadraticProblem p = two_agent_quadratic();
  const NetworkGraph g = graph_from_edges(2, {{0, 1}});
  HyperParams h;
  StateMat x0(2, 2);
  x0 << 1, 2, 3, 4;
  const AlgorithmState st = init_state_from(g, h, x0, InitMode::kStandard);
  const LyapunovComponents lc = lyapunov_components(st, p, g, h);
  EXPECT_NEAR(lc.consensus, 2.0, 1e-15);
  EXPECT_NEAR(lc.e1, 2.0, 1e-15);
  EXPECT_NEAR(lc.f_bar, 7.5, 1e-14);
  EXPECT_NEAR(lc.grad_sq, 26.5, 1e-13);
  EXPECT_NEAR(lc.e4, 14.35, 1e-13);
  EXPECT_NEAR(lc.e5, 30.0, 1e-14);
  EXPECT_FALSE(lc.lower_gap);
  EXPECT_GE(lc.e2, 0.0);
  EXPECT_NEAR(lc.L2(), lc.L1() + 30.0, 1e-12);
}

TEST(Lyapunov, ConsensusStateHasNoCrossTerm) {
  const ProblemPtr p = make_nonconvex(4, 3, 1);
  const NetworkGraph g = build_graph({Topology::kRing}, 4);
  HyperParams h;
  StateMat x0 = StateMat::Constant(4, 3, 0.7);
  const LyapunovComponents lc =
      lyapunov_components(init_state_from(g, h, x0, InitMode::kExactFirstRound), *p, g, h);
  EXPECT_EQ(lc.e1, 0.0);
  EXPECT_NEAR(lc.e3, 0.0, 1e-15);
  EXPECT_EQ(lc.e5, 0.0);
  EXPECT_TRUE(lc.lower_gap);
  EXPECT_NEAR(lc.e4, 4.0 * p->value(x0.row(0).transpose()), 1e-12);
}

TEST(Lyapunov, ComponentSignsAndConsensusIdentity) {
  const ProblemPtr p = make_nonconvex(5, 4, 3);
  const NetworkGraph g = build_graph({Topology::kRing}, 5);
  HyperParams h;
  h.alpha = 0.05;
  h.schedule = ScalingSchedule::geometric(10.0, 0.97);
  RunOptions o;
  o.T = 80;
  o.seed = 6;
  const RunTrace t = run(*p, g, CompressorSpec::unbiased_kbit(2), h, o);
  for (const TraceRow& r : t.rows) {
    EXPECT_NEAR(5.0 * r.consensus, 2.0 * r.e1, 1e-12 * (1.0 + r.e1));
    EXPECT_GE(r.e1, 0.0);
    EXPECT_GE(r.e2, 0.0);
    EXPECT_GE(r.e4, 0.0);
    EXPECT_GE(r.e5, 0.0);
  }
}

TraceRow row(double e1, double e2, double e3, double e4, double w, double s = 1.0) {
  TraceRow r;
  r.e1 = e1;
  r.e2 = e2;
  r.e3 = e3;
  r.e4 = e4;
  r.w_F_sq = w;
  r.s_k = s;
  return r;
}

TEST(Checks, SandwichCountsBothSides) {
  RunTrace t;
  t.rows = {row(1, 1, 0, 1, 1), row(10, 0, 0, 0, 0)};
  // Row 0: L1 = 3, L1_hat = 4. Row 1: L1 = 10, L1_hat = 20.
  EXPECT_TRUE(lyapunov_sandwich_check(t, 0.5, 1.0).pass());
  const CheckReport bad = lyapunov_sandwich_check(t, 0.8, 1.0);
  EXPECT_EQ(bad.checked, 4);
  EXPECT_EQ(bad.violations, 2);
  EXPECT_NEAR(bad.worst, 1.6, 1e-15);
}

TEST(Checks, DescentInequality) {
  RunTrace t;
  t.rows = {row(4, 0, 0, 0, 0, 2.0), row(3.5, 0, 0, 0, 0, 1.0), row(3.6, 0, 0, 0, 0, 1.0)};
  DescentConstants c;
  c.alpha = 0.5;
  c.eps6 = 0.5;
  c.n = 1;
  c.d_tilde = 1;
  c.eps5 = 0.25;
  c.psi2 = 0.1;
  c.C = 1.0;
  // additive = 0.025; rhs0 = 3.1, rhs1 = 2.65.
  const CheckReport rep = lyapunov_descent_check(t, c);
  EXPECT_EQ(rep.checked, 2);
  EXPECT_EQ(rep.violations, 2);
  c.eps6 = 0.0;
  c.psi2 = 2.0;
  EXPECT_TRUE(lyapunov_descent_check(t, c).pass());
}

TEST(RateFit, ExactPowerLaw) {
  std::vector<std::pair<double, double>> s;
  for (double T : {100.0, 400.0, 1600.0, 6400.0}) s.push_back({T, 3.0 / std::sqrt(T)});
  const RateFit f = rate_fit(s, RateModel::kPowerLaw, 0.0);
  EXPECT_NEAR(f.slope, -0.5, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-10);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.points, 4);
}

TEST(RateFit, ExactGeometric) {
  std::vector<std::pair<double, double>> s;
  for (int k = 0; k < 50; ++k) s.push_back({double(k), 2.0 * std::pow(0.9, k)});
  const RateFit f = rate_fit(s, RateModel::kGeometric);
  EXPECT_NEAR(f.slope, 0.9, 1e-12);
  EXPECT_EQ(f.points, 45);
}

TEST(RateFit, BurnInSkipsLeadingPoints) {
  std::vector<std::pair<double, double>> s = {{1, 1e6}, {2, 4}, {3, 2}, {4, 1}};
  EXPECT_NEAR(rate_fit(s, RateModel::kGeometric, 0.25).slope, 0.5, 1e-12);
}

TEST(RateFit, DegenerateInputs) {
  auto kind = [](std::vector<std::pair<double, double>> s, RateModel m) {
    try {
      rate_fit(s, m, 0.0);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  EXPECT_EQ(kind({{1, 1}, {2, 2}}, RateModel::kPowerLaw), ErrorKind::kDegenerateSeries);
  EXPECT_EQ(kind({{1, 1}, {2, 0}, {3, 1}}, RateModel::kPowerLaw), ErrorKind::kDegenerateSeries);
  EXPECT_EQ(kind({{0, 1}, {2, 1}, {3, 1}}, RateModel::kPowerLaw), ErrorKind::kDegenerateSeries);
  EXPECT_EQ(kind({{2, 1}, {2, 3}, {2, 1}}, RateModel::kGeometric), ErrorKind::kDegenerateSeries);
  EXPECT_THROW(rate_fit({{1, 1}, {2, 1}, {3, 1}}, RateModel::kGeometric, 1.0), Error);
}

TEST(Checks, DeterministicContraction) {
  RunTrace t;
  AgentRecord ar;
  ar.s_k = 2.0;
  ar.pre_p = {1.0, 5.0};  // second agent outside C s_k = 2, skipped
  ar.post_p = {1.0, 100.0};
  t.agents.push_back(ar);
  const AssumptionContract c{ContractClass::kLocal, kInf, 1.0, 1.0, 0.5};
  HyperParams h;
  // factor = 1 - 0.75 = 0.25, budget^2 = 4: bound 1.
  CheckReport rep = contraction_check(t, c, h);
  EXPECT_EQ(rep.checked, 1);
  EXPECT_TRUE(rep.pass());
  t.agents[0].post_p[0] = 1.01;
  EXPECT_FALSE(contraction_check(t, c, h).pass());
  EXPECT_THROW(contraction_check(t, AssumptionContract{}, h), Error);
  EXPECT_THROW(contraction_check(RunTrace{}, c, h), Error);
}

TEST(Checks, GlobalContractionNeedsRuns) {
  const AssumptionContract c{ContractClass::kGlobal, 2.0, 1.0, 0.0, 0.5};
  HyperParams h;
  EXPECT_THROW(global_contraction_check({RunTrace{}}, c, h), Error);
  RunTrace a;
  AgentRecord ar;
  ar.s_k = 1.0;
  ar.pre_sq = {4.0};
  ar.post_sq = {3.0};  // bound (1 - 0.5) * 4 = 2
  a.agents = {ar};
  RunTrace b = a;
  EXPECT_FALSE(global_contraction_check({a, b}, c, h).pass());
  a.agents[0].post_sq = {1.0};
  b.agents[0].post_sq = {2.0};
  EXPECT_TRUE(global_contraction_check({a, b}, c, h).pass());
}

TEST(Metrics, AveragedMetricExcludesFinalRow) {
  RunTrace t;
  t.rows.resize(3);
  t.rows[0].grad_sq = 1;
  t.rows[0].consensus = 1;
  t.rows[1].grad_sq = 3;
  t.rows[2].grad_sq = 100;
  EXPECT_DOUBLE_EQ(averaged_metric(t), 2.5);
  t.rows.resize(1);
  EXPECT_THROW(averaged_metric(t), Error);
}

TEST(Metrics, CsvLayout) {
  RunTrace t;
  t.rows.resize(2);
  t.rows[1].k = 1;
  t.rows[1].bits_cum = 96;
  t.rows[1].f_bar = 0.1;
  const std::string csv = trace_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "k,f_bar,grad_sq,consensus,e1,e2,e3,e4,e5,s_k,bits_cum,region_ok");
  EXPECT_NE(csv.find("\n1,0.10000000000000001,"), std::string::npos);
  EXPECT_NE(csv.find(",96,1\n"), std::string::npos);
  t.lower_gap = true;
  EXPECT_NE(trace_csv(t).find("e4_lower_gap"), std::string::npos);
}

TEST(Lyapunov, SandwichHoldsAlongRun) {
  const ProblemPtr p = make_quadratic(5, 3, 4, 4.0);
  const NetworkGraph g = build_graph({Topology::kRing}, 5);
  const AssumptionContract c{ContractClass::kLocal, kInf, 1.0, 1.0, 0.5};
  TheoremInputs in;
  in.graph = &g;
  in.problem = p.get();
  in.contract = c;
  in.x0 = initial_points(5, 3, InitMode::kStandard, 3, 1.0);
  const TheoremParams tp = theorem_params(Regime::kT3LocalPL, in);
  RunOptions o;
  o.T = 100;
  o.x0 = in.x0;
  const RunTrace t = run(*p, g, CompressorSpec::one_bit(1.0), tp.hyper, o);
  EXPECT_TRUE(lyapunov_sandwich_check(t, tp.table.at("eps1"), tp.table.at("eps2")).pass());
}

}  // namespace
}  // namespace unicomp
