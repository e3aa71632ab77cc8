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

#include "unicomp/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "unicomp/diagnostics.hpp"
#include "unicomp/error.hpp"
#include "unicomp/random.hpp"

namespace unicomp {
namespace {

void parallel_for(int n, int workers, const std::function<void(int)>& body) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int w = std::min(workers, n);
  std::vector<std::jthread> pool;
  pool.reserve(w - 1);
  auto chunk = [&](int c) {
    for (int i = c; i < n; i += w) body(i);
  };
  for (int c = 1; c < w; ++c) pool.emplace_back(chunk, c);
  chunk(0);
}

}  // namespace

ScalingSchedule ScalingSchedule::constant(double s0) {
  ScalingSchedule s;
  s.mode = Mode::kConstant;
  s.s0 = s0;
  return s;
}

ScalingSchedule ScalingSchedule::geometric(double s0, double rate) {
  ScalingSchedule s;
  s.mode = Mode::kGeometric;
  s.s0 = s0;
  s.rate = rate;
  return s;
}

ScalingSchedule ScalingSchedule::recursive(double s0, double eps8, double kappa4) {
  ScalingSchedule s;
  s.mode = Mode::kRecursive;
  s.s0 = s0;
  s.eps8 = eps8;
  s.kappa4 = kappa4;
  return s;
}

double ScalingSchedule::advance(double s) const {
  switch (mode) {
    case Mode::kConstant: return s;
    case Mode::kGeometric: return s * rate;
    case Mode::kRecursive: return std::sqrt((1.0 - eps8) * s * s + kappa4);
  }
  return s;
}

std::string schedule_mode_name(ScalingSchedule::Mode mode) {
  switch (mode) {
    case ScalingSchedule::Mode::kConstant: return "constant";
    case ScalingSchedule::Mode::kGeometric: return "geometric";
    case ScalingSchedule::Mode::kRecursive: return "recursive";
  }
  return "unknown";
}

void validate(const ScalingSchedule& schedule) {
  require(schedule.s0 > 0.0 && std::isfinite(schedule.s0), ErrorKind::kInvalidScale,
          "s0 must be positive and finite");
  if (schedule.mode == ScalingSchedule::Mode::kGeometric)
    require(schedule.rate > 0.0 && schedule.rate < 1.0, ErrorKind::kInvalidScale,
            "geometric rate must lie in (0, 1)");
  if (schedule.mode == ScalingSchedule::Mode::kRecursive) {
    require(schedule.eps8 > 0.0 && schedule.eps8 < 1.0, ErrorKind::kInvalidScale,
            "recursive contraction must lie in (0, 1)");
    require(schedule.kappa4 >= 0.0, ErrorKind::kInvalidScale,
            "recursive additive term must be nonnegative");
  }
}

double scaling_value(const ScalingSchedule& schedule, long k, std::optional<long> T) {
  require(k >= 0, ErrorKind::kOutOfRange, "iteration index must be nonnegative");
  if (schedule.mode == ScalingSchedule::Mode::kRecursive)
    require(T.has_value(), ErrorKind::kInvalidArgument, "recursive schedule needs a horizon");
  double s = schedule.s0;
  for (long i = 0; i < k; ++i) s = schedule.advance(s);
  return s;
}

InitMode parse_init_mode(const std::string& name) {
  if (name == "standard") return InitMode::kStandard;
  if (name == "exact_first_round") return InitMode::kExactFirstRound;
  if (name == "shared_x0") return InitMode::kSharedX0;
  fail(ErrorKind::kInvalidArgument, "unknown init mode '" + name + "'");
}

std::string init_mode_name(InitMode mode) {
  switch (mode) {
    case InitMode::kStandard: return "standard";
    case InitMode::kExactFirstRound: return "exact_first_round";
    case InitMode::kSharedX0: return "shared_x0";
  }
  return "unknown";
}

std::uint64_t substream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = splitmix64(seed);
  for (char c : name) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return h;
}

StateMat initial_points(int n, int d, InitMode mode, std::uint64_t seed, double scale) {
  StateMat x(n, d);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t agent = mode == InitMode::kSharedX0 ? 0 : static_cast<std::uint64_t>(i);
    CounterRng rng(seed, Stream::kInitial, agent, 0);
    for (int j = 0; j < d; ++j) x(i, j) = scale * rng.normal();
  }
  return x;
}

AlgorithmState init_state_from(const NetworkGraph& graph, const HyperParams& hyper,
                               const StateMat& x0, InitMode init_mode) {
  require(x0.rows() == graph.n, ErrorKind::kDimensionMismatch, "x0 rows differ from n");
  AlgorithmState st;
  const auto n = x0.rows(), d = x0.cols();
  st.x = x0;
  st.v = StateMat::Zero(n, d);
  st.k = 0;
  st.s = hyper.schedule.s0;
  st.bits_cum = 0;
  if (init_mode == InitMode::kExactFirstRound) {
    st.x_hat = x0;
    st.y = graph.laplacian * x0;
    st.bits_cum = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d) * kFloatBits;
  } else {
    st.x_hat = StateMat::Zero(n, d);
    st.y = StateMat::Zero(n, d);
  }
  return st;
}

AlgorithmState init_state(const Problem& problem, const NetworkGraph& graph,
                          const HyperParams& hyper, InitMode init_mode,
                          std::uint64_t x0_seed, double x0_scale) {
  require(problem.n() == graph.n, ErrorKind::kDimensionMismatch,
          "problem and graph agent counts differ");
  return init_state_from(graph, hyper,
                         initial_points(problem.n(), problem.d(), init_mode, x0_seed, x0_scale),
                         init_mode);
}

StepReport step(AlgorithmState& state, const Problem& problem, const NetworkGraph& graph,
                const CompressorSpec& compressor, const HyperParams& hyper,
                const StepOptions& options) {
  const int n = graph.n;
  const int d = problem.d();
  require(state.x.rows() == n && state.x.cols() == d, ErrorKind::kDimensionMismatch,
          "state shape does not match problem and graph");
  const double s = state.s;
  const double ws = hyper.omega * s;

  StepReport rep;
  rep.pre_p.resize(n);
  rep.post_p.resize(n);
  rep.pre_sq.resize(n);
  rep.post_sq.resize(n);

  StateMat Q(n, d), G(n, d);
  std::vector<std::uint64_t> bits(n, 0);
  parallel_for(n, options.workers, [&](int i) {
    const Vec xi = state.x.row(i).transpose();
    const Vec diff = xi - state.x_hat.row(i).transpose();
    rep.pre_p[i] = p_norm(diff, options.norm_p);
    rep.pre_sq[i] = diff.squaredNorm();
    const Compressed c = compress(compressor, (diff / s).eval(),
                                  static_cast<std::uint64_t>(state.k),
                                  static_cast<std::uint64_t>(i));
    Q.row(i) = c.q.transpose();
    bits[i] = c.bits;
    G.row(i) = problem.local_gradient(i, xi).transpose();
  });

  // Exchange and surrogate / auxiliary updates.
  state.x_hat += ws * Q;
  const StateMat LQ = graph.laplacian * Q;
  state.y += ws * LQ;
  for (int i = 0; i < n; ++i) {
    const Vec diff = (state.x.row(i) - state.x_hat.row(i)).transpose();
    rep.post_p[i] = p_norm(diff, options.norm_p);
    rep.post_sq[i] = diff.squaredNorm();
    rep.bits += bits[i];
  }

  // Primal and dual updates.
  const Eigen::RowVectorXd xbar_old = state.x.colwise().mean();
  const Eigen::RowVectorXd gbar = G.colwise().mean();
  StateMat x_next = state.x - hyper.alpha * (hyper.beta * state.y + hyper.gamma * state.v + G);
  state.v += (hyper.alpha * hyper.gamma) * state.y;
  state.x = std::move(x_next);

  state.bits_cum += rep.bits;
  state.k += 1;
  state.s = hyper.schedule.advance(s);

  if (!state.x.allFinite() || !state.v.allFinite() || !state.x_hat.allFinite())
    throw DivergenceError(state.k - 1, "non-finite state at iteration " +
                                           std::to_string(state.k - 1));

  rep.y_residual = (state.y - graph.laplacian * state.x_hat).cwiseAbs().maxCoeff();
  rep.v_mean = state.v.colwise().mean().cwiseAbs().maxCoeff();
  rep.mean_dynamics =
      (state.x.colwise().mean() - (xbar_old - hyper.alpha * gbar)).norm();
  return rep;
}

RunTrace run(const Problem& problem, const NetworkGraph& graph,
             const CompressorSpec& compressor, const HyperParams& hyper,
             const RunOptions& options) {
  require(options.T >= 1, ErrorKind::kInvalidArgument, "horizon T must be at least 1");
  require(problem.n() == graph.n, ErrorKind::kDimensionMismatch,
          "problem and graph agent counts differ");
  require(hyper.alpha >= 0.0 && hyper.beta > 0.0 && hyper.gamma > 0.0 && hyper.omega > 0.0,
          ErrorKind::kInvalidArgument, "alpha must be nonnegative; beta, gamma, omega positive");
  validate(compressor, problem.d());
  validate(hyper.schedule);

  const CompressorSpec spec = with_seed(compressor, substream_seed(options.seed, "compressor"));
  const int n = graph.n;
  const int d = problem.d();
  const StateMat x0 = options.x0 ? *options.x0
                                 : initial_points(n, d, options.init_mode,
                                                  substream_seed(options.seed, "x0"),
                                                  options.x0_scale);
  require(x0.rows() == n && x0.cols() == d, ErrorKind::kDimensionMismatch,
          "initial point has wrong shape");

  RunTrace trace;
  trace.hyper = hyper;
  AlgorithmState state = init_state_from(graph, hyper, x0, options.init_mode);

  const bool local = options.contract && options.contract->cls == ContractClass::kLocal;
  StepOptions sopt;
  sopt.norm_p = local ? options.contract->p : 2.0;
  sopt.workers = options.workers;

  double region_budget_factor = local ? options.contract->C : kInf;
  if (local) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, p_norm((state.x.row(i) - state.x_hat.row(i)).transpose().eval(),
                                     sopt.norm_p));
    require(worst <= region_budget_factor * state.s * (1.0 + 1e-12), ErrorKind::kInvalidScale,
            "s0 below max_i ||x_i0||_p / C");
  }

  trace.rows.reserve(static_cast<std::size_t>(options.T) + 1);
  auto record = [&](const AlgorithmState& st) {
    TraceRow row;
    const LyapunovComponents lc = lyapunov_components(st, problem, graph, hyper);
    row.k = st.k;
    row.f_bar = lc.f_bar;
    row.grad_sq = lc.grad_sq;
    row.consensus = lc.consensus;
    row.e1 = lc.e1;
    row.e2 = lc.e2;
    row.e3 = lc.e3;
    row.e4 = lc.e4;
    row.e5 = lc.e5;
    row.w_F_sq = lc.w_F_sq;
    row.s_k = st.s;
    row.bits_cum = st.bits_cum;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, p_norm((st.x.row(i) - st.x_hat.row(i)).transpose().eval(),
                                     sopt.norm_p));
    row.max_pre_p = worst;
    row.region_ok = !local || worst <= region_budget_factor * st.s * (1.0 + 1e-12);
    if (!row.region_ok) ++trace.region_violations;
    trace.lower_gap = lc.lower_gap;
    trace.rows.push_back(row);
  };

  for (long k = 0; k < options.T; ++k) {
    record(state);
    const double s_k = state.s;
    StepReport rep = step(state, problem, graph, spec, hyper, sopt);
    trace.max_y_residual = std::max(trace.max_y_residual, rep.y_residual);
    trace.max_v_mean = std::max(trace.max_v_mean, rep.v_mean);
    trace.max_mean_dynamics = std::max(trace.max_mean_dynamics, rep.mean_dynamics);
    if (options.record_agents) {
      AgentRecord ar;
      ar.k = k;
      ar.s_k = s_k;
      ar.pre_p = std::move(rep.pre_p);
      ar.post_p = std::move(rep.post_p);
      ar.pre_sq = std::move(rep.pre_sq);
      ar.post_sq = std::move(rep.post_sq);
      trace.agents.push_back(std::move(ar));
    }
  }
  record(state);
  trace.final_state = std::move(state);
  return trace;
}

}  // namespace unicomp
