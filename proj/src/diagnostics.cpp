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

#include "unicomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "unicomp/error.hpp"

namespace unicomp {
namespace {

constexpr double kRelTol = 1e-12;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void note(CheckReport& rep, double lhs, double rhs) {
  ++rep.checked;
  const double slack = kRelTol * (std::abs(lhs) + std::abs(rhs)) + 1e-300;
  if (lhs > rhs + slack) ++rep.violations;
  if (rhs > 0.0) rep.worst = std::max(rep.worst, lhs / rhs);
  else if (lhs > slack) rep.worst = kInf;
}

}  // namespace

LyapunovComponents lyapunov_components(const AlgorithmState& state, const Problem& problem,
                                       const NetworkGraph& graph, const HyperParams& hyper) {
  const int n = graph.n;
  const int d = problem.d();
  require(state.x.rows() == n && state.x.cols() == d, ErrorKind::kDimensionMismatch,
          "state shape does not match problem and graph");
  LyapunovComponents lc;
  const Eigen::RowVectorXd xbar_row = state.x.colwise().mean();
  const Vec xbar = xbar_row.transpose();
  const StateMat Xc = state.x.rowwise() - xbar_row;
  const double spread = Xc.squaredNorm();
  lc.consensus = spread / n;
  lc.e1 = 0.5 * spread;
  lc.f_bar = problem.value(xbar);
  lc.grad_sq = problem.gradient(xbar).squaredNorm();

  StateMat G0(n, d);
  for (int i = 0; i < n; ++i) G0.row(i) = problem.local_gradient(i, xbar).transpose();
  const StateMat W = state.v + G0 / hyper.gamma;
  const StateMat FW = graph.F * W;
  lc.w_F_sq = W.cwiseProduct(FW).sum();
  lc.e2 = 0.5 * (hyper.beta + hyper.gamma) / hyper.gamma * lc.w_F_sq;
  lc.e3 = Xc.cwiseProduct(FW).sum();
  lc.lower_gap = !problem.f_star().has_value();
  const double fref = lc.lower_gap ? problem.f_low() : *problem.f_star();
  lc.e4 = n * (lc.f_bar - fref);
  lc.e5 = (state.x - state.x_hat).squaredNorm();
  return lc;
}

CheckReport lyapunov_sandwich_check(const RunTrace& trace, double eps1, double eps2) {
  CheckReport rep;
  for (const TraceRow& r : trace.rows) {
    const double l1 = row_L1(r), lh = row_L1_hat(r);
    note(rep, eps1 * lh, l1);
    note(rep, l1, eps2 * lh);
  }
  return rep;
}

CheckReport lyapunov_descent_check(const RunTrace& trace, const DescentConstants& c) {
  CheckReport rep;
  const double additive =
      c.alpha * c.n * c.d_tilde * c.d_tilde * (1.0 - 2.0 * c.eps5) * c.psi2 * c.C * c.C;
  for (std::size_t k = 0; k + 1 < trace.rows.size(); ++k) {
    const TraceRow& a = trace.rows[k];
    const TraceRow& b = trace.rows[k + 1];
    const double rhs = (1.0 - c.alpha * c.eps6) * row_L1(a) + additive * a.s_k * a.s_k;
    note(rep, row_L1(b), rhs);
  }
  return rep;
}

RateFit rate_fit(const std::vector<std::pair<double, double>>& series, RateModel model,
                 double burn_in_fraction) {
  require(burn_in_fraction >= 0.0 && burn_in_fraction < 1.0, ErrorKind::kInvalidArgument,
          "burn-in fraction must lie in [0, 1)");
  std::vector<std::pair<double, double>> pts = series;
  std::sort(pts.begin(), pts.end());
  const auto skip = static_cast<std::size_t>(std::floor(burn_in_fraction * pts.size()));
  std::vector<double> xs, ys;
  for (std::size_t i = skip; i < pts.size(); ++i) {
    const auto [t, v] = pts[i];
    require(std::isfinite(v) && v > 0.0, ErrorKind::kDegenerateSeries,
            "series values must be positive and finite");
    if (model == RateModel::kPowerLaw) {
      require(t > 0.0, ErrorKind::kDegenerateSeries, "power-law fit needs positive abscissae");
      xs.push_back(std::log(t));
    } else {
      xs.push_back(t);
    }
    ys.push_back(std::log(v));
  }
  require(xs.size() >= 3, ErrorKind::kDegenerateSeries, "need at least three points to fit");
  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  require(sxx > 0.0, ErrorKind::kDegenerateSeries, "abscissae are all equal");
  const double slope = sxy / sxx;
  const double icpt = my - slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (icpt + slope * xs[i]);
    ssr += e * e;
  }
  RateFit fit;
  fit.points = static_cast<long>(xs.size());
  fit.intercept = icpt;
  fit.slope = model == RateModel::kPowerLaw ? slope : std::exp(slope);
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : (ssr <= 1e-24 ? 1.0 : 0.0);
  return fit;
}

CheckReport contraction_check(const RunTrace& trace, const AssumptionContract& contract,
                              const HyperParams& hyper) {
  require(contract.cls == ContractClass::kLocal, ErrorKind::kWrongClass,
          "deterministic contraction applies to local contracts");
  require(!trace.agents.empty(), ErrorKind::kMissingOracle,
          "contraction check needs per-agent records");
  const double wr = hyper.omega * contract.r;
  const double factor = 1.0 - wr * (2.0 * contract.delta - contract.delta * contract.delta);
  CheckReport rep;
  for (const AgentRecord& ar : trace.agents) {
    const double budget = contract.C * ar.s_k;
    for (std::size_t i = 0; i < ar.pre_p.size(); ++i) {
      if (ar.pre_p[i] > budget * (1.0 + kRelTol)) continue;
      note(rep, ar.post_p[i] * ar.post_p[i], factor * budget * budget);
    }
  }
  return rep;
}

CheckReport global_contraction_check(const std::vector<RunTrace>& traces,
                                     const AssumptionContract& contract,
                                     const HyperParams& hyper) {
  require(contract.cls == ContractClass::kGlobal, ErrorKind::kWrongClass,
          "mean-square contraction applies to global contracts");
  require(traces.size() >= 2, ErrorKind::kInvalidArgument, "need at least two runs");
  const std::size_t steps = traces.front().agents.size();
  for (const RunTrace& t : traces)
    require(t.agents.size() == steps && steps > 0, ErrorKind::kMissingOracle,
            "runs need matching per-agent records");
  const double wr = hyper.omega * contract.r;
  const double m = static_cast<double>(traces.size());
  CheckReport rep;
  for (std::size_t k = 0; k < steps; ++k) {
    const double s = traces.front().agents[k].s_k;
    const double n = static_cast<double>(traces.front().agents[k].pre_sq.size());
    double mean = 0, m2 = 0;
    for (std::size_t t = 0; t < traces.size(); ++t) {
      const AgentRecord& ar = traces[t].agents[k];
      double dk = 0.0;
      for (std::size_t i = 0; i < ar.pre_sq.size(); ++i)
        dk += ar.post_sq[i] - (1.0 - wr * contract.delta) * ar.pre_sq[i];
      const double delta = dk - mean;
      mean += delta / static_cast<double>(t + 1);
      m2 += delta * (dk - mean);
    }
    const double se = std::sqrt(m2 / (m - 1.0) / m);
    note(rep, mean, n * wr * contract.C * s * s + 3.0 * se);
  }
  return rep;
}

double averaged_metric(const RunTrace& trace) {
  require(trace.rows.size() >= 2, ErrorKind::kDegenerateSeries, "trace too short");
  const std::size_t T = trace.rows.size() - 1;
  double acc = 0.0;
  for (std::size_t k = 0; k < T; ++k) acc += trace.rows[k].grad_sq + trace.rows[k].consensus;
  return acc / static_cast<double>(T);
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream out;
  out << "k,f_bar,grad_sq,consensus,e1,e2,e3," << (trace.lower_gap ? "e4_lower_gap" : "e4")
      << ",e5,s_k,bits_cum,region_ok\n";
  for (const TraceRow& r : trace.rows) {
    out << r.k << ',' << fmt(r.f_bar) << ',' << fmt(r.grad_sq) << ',' << fmt(r.consensus) << ','
        << fmt(r.e1) << ',' << fmt(r.e2) << ',' << fmt(r.e3) << ',' << fmt(r.e4) << ','
        << fmt(r.e5) << ',' << fmt(r.s_k) << ',' << r.bits_cum << ','
        << (r.region_ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace unicomp
