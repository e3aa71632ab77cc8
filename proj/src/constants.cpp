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

#include "unicomp/constants.hpp"

#include <algorithm>
#include <cmath>

#include "unicomp/diagnostics.hpp"
#include "unicomp/error.hpp"

namespace unicomp {
namespace {

struct Interval {
  bool exists = false;
  double lo = 0.0;
  double hi = kInf;
};

// {alpha > 0 : a alpha - b alpha^2 >= 1}, assumed to be an interval.
Interval reach_one(double a, double b) {
  Interval iv;
  if (b == 0.0) {
    if (a > 0.0) {
      iv.exists = true;
      iv.lo = 1.0 / a;
    }
    return iv;
  }
  const double disc = a * a - 4.0 * b;
  if (disc < 0.0) return iv;  // b > 0 here: the parabola never reaches 1
  const double sq = std::sqrt(disc);
  if (b > 0.0) {
    const double r_lo = (a - sq) / (2.0 * b);
    const double r_hi = (a + sq) / (2.0 * b);
    if (r_hi <= 0.0) return iv;
    iv.exists = true;
    iv.lo = std::max(r_lo, 0.0);
    iv.hi = r_hi;
    return iv;
  }
  // b < 0: convex, exactly one positive root
  iv.exists = true;
  iv.lo = (a - sq) / (2.0 * b);
  return iv;
}

double pos_div(double num, double den) { return den > 0.0 ? num / den : kInf; }

// Zero when nonpositive or non-finite.
double usable(double alpha) { return std::isfinite(alpha) && alpha > 0.0 ? alpha : 0.0; }

double max_row_norm(const StateMat& x, double p) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    worst = std::max(worst, p_norm(x.row(i).transpose().eval(), p));
  return worst;
}

}  // namespace

double ConstantTable::at(const std::string& name) const {
  auto it = values_.find(name);
  require(it != values_.end(), ErrorKind::kMissingOracle, "constant '" + name + "' not computed");
  return it->second;
}

double smaller_positive_root(double a1, double b1, double a2, double b2) {
  const Interval i1 = reach_one(a1, b1);
  const Interval i2 = reach_one(a2, b2);
  if (!i1.exists || !i2.exists) return kInf;
  const double lo = std::max(i1.lo, i2.lo);
  const double hi = std::min(i1.hi, i2.hi);
  return lo <= hi ? lo : kInf;
}

ConstantTable compute_constants(const ConstantInputs& in) {
  require(in.rho2 > 0.0 && in.rho >= in.rho2, ErrorKind::kInvalidArgument,
          "graph spectrum must satisfy 0 < rho2 <= rho");
  require(in.ell > 0.0 && in.gamma > 0.0 && in.tau1 > 0.0 && in.omega > 0.0 &&
              in.alpha >= 0.0,
          ErrorKind::kInvalidArgument, "ell, gamma, tau1, omega positive; alpha nonnegative");
  ConstantTable t;
  const double n = in.n, rho = in.rho, rho2 = in.rho2, l = in.ell, g = in.gamma;
  const double a = in.alpha, tau1 = in.tau1, beta = tau1 * g;
  const double dh = in.norms.d_hat, dt = in.norms.d_tilde;
  const double r = in.contract.r, C = in.contract.C, delta = in.contract.delta;
  const double sqn = std::sqrt(n);

  t.set("beta", beta);
  t.set("kappa1", 4.0 / rho2);
  const double k1 = t.at("kappa1");
  t.set("kappa2", std::max({2.0 + 2.0 * l * l, 5.0 / rho2,
                            std::cbrt(16.0 * l * l * (k1 + 1.0) * (k1 + 1.0) / rho2),
                            2.0 * std::sqrt(2.0) * l / rho2}));

  const double phi1 = 0.5 * (rho2 * beta - (3.0 * g + 2.0 + 2.0 * l * l));
  const double phi2 = 3.0 * rho * rho * beta * beta - rho2 * beta * g + (rho + 2.0) * g * g +
                      1.0 + 2.5 * l * l;
  const double phi3 = g / 2.0 - 2.5 / rho2;
  const double phi4 = 2.0 * rho * g * g + rho / 2.0;
  const double phi5 = 0.125 - (beta + g) * (beta + g) / std::pow(g, 5) / rho2 * l * l -
                      l * l / (2.0 * g * g * rho2 * rho2);
  const double phi6 = (beta + g) / (2.0 * g * g * g) / rho2 * l * l +
                      l * l / (2.0 * g * g * rho2 * rho2) + l * l / (2.0 * rho2 * rho2) +
                      l * l / 2.0 + l / 2.0;
  const double phi7 = (rho + 1.0) * g + 0.5 * rho * beta;
  const double phi8 = 3.0 * rho * rho * beta * beta + (rho - 2.0 * rho2) * beta * g +
                      (rho + 2.0) * g * g + 1.0;
  t.set("phi1", phi1);
  t.set("phi2", phi2);
  t.set("phi3", phi3);
  t.set("phi4", phi4);
  t.set("phi5", phi5);
  t.set("phi6", phi6);
  t.set("phi7", phi7);
  t.set("phi8", phi8);
  const double k0hat = std::min({phi1 / phi2, phi3 / phi4, phi5 / phi6});
  t.set("kappa0_hat", k0hat);

  const double eps1 = (tau1 * rho2 - 1.0) / (2.0 * tau1 * rho2);
  const double eps2 = std::max((1.0 + tau1 * rho2) / 2.0,
                               (1.0 + tau1) / 2.0 + 1.0 / (2.0 * tau1 * rho2 * rho2));
  const double eps3 = std::min(phi1 - a * phi2, phi3 - a * phi4);
  const double eps5 = in.omega * r * (delta - delta * delta / 2.0);
  const double eps8 = (eps5 + 2.0 * eps5 * eps5) / 2.0;
  const double one_m = 1.0 - 2.0 * eps5;
  t.set("eps1", eps1);
  t.set("eps2", eps2);
  t.set("eps3", eps3);
  t.set("eps4", std::min(eps3, 0.25));
  t.set("eps5", eps5);
  t.set("eps8", eps8);

  const double psi1 = 2.0 * (phi5 + a * phi6);
  const double psi2 = phi7 + a * phi8;
  const double psi3 = 4.0 * (1.0 + 1.0 / eps5) * dh * dh * beta * beta * rho * rho;
  const double psi4 = 4.0 * (1.0 + 1.0 / eps5) * dh * dh *
                      std::max(beta * beta * rho * rho + l * l, g * g * rho) / eps1;
  t.set("psi1", psi1);
  t.set("psi2", psi2);
  t.set("psi3", psi3);
  t.set("psi4", psi4);

  if (a > 0.0) {
    t.set("tau2", ((beta + g) / (2.0 * g * g * g) + (beta + g) * (beta + g) / (a * std::pow(g, 5))) /
                          rho2 + 0.5);
    t.set("tau3", ((a + 1.0) / (2.0 * a * g * g) + 0.5) / (rho2 * rho2));
  }

  const double k5 = smaller_positive_root(phi1, phi2, phi3, phi4);
  t.set("kappa5", k5);
  const double k6 = std::sqrt(pos_div(eps5 + 2.0 * eps5 * eps5, one_m * psi3));
  t.set("kappa6", k6);
  t.set("kappa0_tilde", std::min({k0hat, k5, k6 / (sqn * dt)}));
  t.set("eps7", 1.0 - (eps5 + 2.0 * eps5 * eps5) + a * a * n * dt * dt * one_m * psi3);
  const double k7 = std::min(k0hat, 1.0 / (2.0 * l));
  t.set("kappa7", k7);
  t.set("kappa0", std::cbrt(pos_div(eps8, 2.0 * one_m * psi2 * psi4)));

  double eps6 = 0.0;
  if (in.nu) {
    eps6 = std::min(*in.nu / 2.0, eps3) / eps2;
    t.set("eps6", eps6);
  }

  if (in.L10 && C > 0.0) {
    const double L10 = *in.L10;
    t.set("L10", L10);
    t.set("kappa4", 2.0 * psi4 * L10 / (C * C * eps8 * n));
    if (in.s0) {
      const double s0 = *in.s0;
      t.set("kappa3_tilde",
            std::max({1.0 / (sqn * dt * dt * k7 * k7), pos_div(one_m * psi3 * sqn, eps8),
                      2.0 * psi4 * L10 * sqn / (eps8 * C * C * s0 * s0 * n * dt * dt),
                      4.0 * one_m * one_m * psi2 * psi2 * psi4 * psi4 * sqn /
                          (eps8 * eps8 * dt * dt),
                      in.kappa3_hat * dt * dt / sqn}));
      double k8 = std::min(std::sqrt(pos_div(eps8, one_m * psi3 * n * dt * dt)),
                           std::sqrt(pos_div(eps8 * C * C * s0 * s0, 2.0 * psi4 * L10)));
      if (in.T) {
        const double T = *in.T;
        k8 = std::min(k8, std::cbrt(pos_div(eps8, 2.0 * one_m * psi2 * psi4 * n * dt * dt)) /
                              std::cbrt(T));
        t.set("kappa4_tilde", psi4 * L10 * a * a / (C * C) +
                                  one_m * psi2 * psi4 * n * dt * dt * s0 * s0 * a * a * a * T);
      }
      t.set("kappa8", k8);
      t.set("kappa0_tilde_prime", std::min(k7, k8));
    }
  }
  if (in.tau0) {
    const double tau0 = *in.tau0;
    t.set("tau0", tau0);
    t.set("kappa3", std::max(std::pow(tau0, 3) / (n * dt * dt * std::pow(k7, 3)),
                             std::pow(pos_div(one_m * psi3 * tau0 * tau0, eps8), 1.5) * sqn * dt));
  }
  if (in.psi5) {
    const double psi5 = *in.psi5;
    t.set("psi5", psi5);
    const double k6p = std::sqrt((eps5 + 2.0 * eps5 * eps5) / (one_m * psi3 + psi4 * psi5));
    t.set("kappa6_prime", k6p);
    t.set("kappa0_prime", std::min({k0hat, k5, k6p / (sqn * dt)}));
    if (in.nu) {
      t.set("kappa9", std::sqrt(1.0 - a * (eps6 - one_m * psi2 / psi5)));
      t.set("kappa10", std::sqrt(1.0 - (eps5 + 2.0 * eps5 * eps5) +
                                 a * a * n * dt * dt * (one_m * psi3 + psi4 * psi5)));
    }
  }
  if (in.kappa_nu) t.set("kappa_nu", *in.kappa_nu);

  // Globally bounded family.
  const double eps9 = in.omega * r * delta / 2.0;
  const double eps10 = (1.0 - 2.0 * eps9) * (1.0 + 1.0 / eps9);
  const double eps12 = (eps9 + 2.0 * eps9 * eps9) / 2.0;
  t.set("eps9", eps9);
  t.set("eps10", eps10);
  t.set("eps11", eps9 + 2.0 * eps9 * eps9 - 4.0 * eps10 * a * a * beta * beta * rho * rho);
  t.set("eps12", eps12);
  const double phi2p = (3.0 + 4.0 * eps10) * rho * rho * beta * beta - rho2 * beta * g +
                       (rho + 2.0) * g * g + 1.0 + (2.5 + 4.0 * eps10) * l * l;
  const double phi4p = (2.0 + 4.0 * eps10) * rho * g * g + rho / 2.0;
  const double phi8p = (3.0 + 4.0 * eps10) * rho * rho * beta * beta +
                       (rho - 2.0 * rho2) * beta * g + (rho + 2.0) * g * g + 1.0;
  t.set("phi2_prime", phi2p);
  t.set("phi4_prime", phi4p);
  t.set("phi8_prime", phi8p);
  t.set("kappa0_hat_prime",
        std::min({phi1 / phi2p, phi3 / phi4p, phi5 / phi6,
                  (std::sqrt(phi7 * phi7 + 8.0 * eps12 * phi8p) - phi7) / (2.0 * phi8p)}));
  const double eps3p = std::min(phi1 - a * phi2p, phi3 - a * phi4p);
  t.set("eps3_prime", eps3p);
  t.set("eps4_prime", std::min(eps3p, 0.25));
  if (in.nu && a > 0.0) {
    const double eps6p =
        std::min({*in.nu / 2.0, eps3p, (2.0 * eps12 - a * phi7 - a * a * phi8p) / a}) / eps2;
    t.set("eps6_prime", eps6p);
  }
  return t;
}

ConstantTable compute_constants(const NetworkGraph& graph, double ell, double gamma,
                                double tau1, double omega, double alpha,
                                const AssumptionContract& contract, const NormContext& norms,
                                std::optional<double> T, std::optional<double> f_gap_bound) {
  ConstantInputs in;
  in.n = graph.n;
  in.rho = graph.rho;
  in.rho2 = graph.rho2;
  in.ell = ell;
  in.gamma = gamma;
  in.tau1 = tau1;
  in.omega = omega;
  in.alpha = alpha;
  in.contract = contract;
  in.norms = norms;
  in.T = T;
  in.L10 = f_gap_bound;
  return compute_constants(in);
}

Regime parse_regime(const std::string& name) {
  if (name == "T1_local_nonconvex") return Regime::kT1LocalNonconvex;
  if (name == "T2_local_exact_first") return Regime::kT2LocalExactFirst;
  if (name == "T3_local_PL") return Regime::kT3LocalPL;
  if (name == "T5_global_nonconvex") return Regime::kT5GlobalNonconvex;
  if (name == "T6_global_PL") return Regime::kT6GlobalPL;
  fail(ErrorKind::kInvalidArgument, "unknown regime '" + name + "'");
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::kT1LocalNonconvex: return "T1_local_nonconvex";
    case Regime::kT2LocalExactFirst: return "T2_local_exact_first";
    case Regime::kT3LocalPL: return "T3_local_PL";
    case Regime::kT5GlobalNonconvex: return "T5_global_nonconvex";
    case Regime::kT6GlobalPL: return "T6_global_PL";
  }
  return "unknown";
}

bool regime_is_local(Regime regime) {
  return regime == Regime::kT1LocalNonconvex || regime == Regime::kT2LocalExactFirst ||
         regime == Regime::kT3LocalPL;
}

double initial_lyapunov_bound(const Problem& problem, const NetworkGraph& graph,
                              const AlgorithmState& state, const HyperParams& hyper) {
  const LyapunovComponents lc = lyapunov_components(state, problem, graph, hyper);
  return lc.e1 + lc.e2 + lc.e3 + problem.n() * (lc.f_bar - problem.f_low());
}

std::optional<double> t1_min_horizon(const ConstantInputs& base, double start, double limit) {
  for (double T = start; T <= limit; T *= 2.0) {
    ConstantInputs in = base;
    in.T = T;
    in.alpha = 1.0 / (std::pow(in.n, 0.25) * in.norms.d_tilde * std::sqrt(T));
    const ConstantTable t = compute_constants(in);
    if (t.has("kappa3_tilde") && T > t.at("kappa3_tilde")) return T;
  }
  return std::nullopt;
}

TheoremParams theorem_params(Regime regime, const TheoremInputs& in) {
  require(in.graph && in.problem, ErrorKind::kInvalidArgument, "graph and problem required");
  const NetworkGraph& graph = *in.graph;
  const Problem& problem = *in.problem;
  const AssumptionContract& ct = in.contract;
  const bool local = regime_is_local(regime);
  require(local == (ct.cls == ContractClass::kLocal), ErrorKind::kWrongClass,
          "compressor class does not match the regime");
  require(ct.C > 0.0, ErrorKind::kInfeasibleParams,
          "theoretical mode requires a contract with C > 0; use empirical mode");
  require(in.x0.rows() == graph.n && in.x0.cols() == problem.d(), ErrorKind::kDimensionMismatch,
          "initial point has wrong shape");
  const bool needs_nu = regime == Regime::kT3LocalPL || regime == Regime::kT6GlobalPL;
  require(!needs_nu || problem.pl_nu().has_value(), ErrorKind::kMissingOracle,
          "regime requires a P-L constant");
  const bool needs_T = regime == Regime::kT1LocalNonconvex ||
                       regime == Regime::kT2LocalExactFirst;
  require(!needs_T || in.T >= 1, ErrorKind::kInvalidArgument, "regime requires a horizon T");

  TheoremParams out;
  auto violate = [&](bool ok, const std::string& reason) {
    if (!ok) out.violations.push_back(reason);
  };

  ConstantInputs ci;
  ci.n = graph.n;
  ci.rho = graph.rho;
  ci.rho2 = graph.rho2;
  ci.ell = problem.ell();
  ci.contract = ct;
  ci.norms = norm_context_for(ct, problem.d());
  if (problem.pl_nu()) ci.nu = *problem.pl_nu();
  const double n = graph.n, dt = ci.norms.d_tilde;
  const double k1 = 4.0 / graph.rho2;
  const double k2 = compute_constants(ci).at("kappa2");

  ci.tau1 = in.tau1.value_or(k1 * in.tau_margin);
  ci.gamma = in.gamma.value_or(k2 * in.gamma_margin);
  ci.omega = in.omega.value_or(1.0 / ct.r);
  violate(ci.gamma > k2, "gamma below kappa_2");
  if (regime == Regime::kT3LocalPL) violate(ci.tau1 > k1, "tau_1 below kappa_1");
  else violate(ci.tau1 >= k1, "tau_1 below kappa_1");
  violate(ci.omega > 0.0 && ci.omega <= 1.0 / ct.r * (1.0 + 1e-15), "omega above 1/r");

  HyperParams& h = out.hyper;
  h.gamma = ci.gamma;
  h.tau1 = ci.tau1;
  h.beta = ci.tau1 * ci.gamma;
  h.omega = ci.omega;
  out.init_mode = regime == Regime::kT2LocalExactFirst ? InitMode::kExactFirstRound
                                                       : InitMode::kStandard;
  const AlgorithmState st0 = init_state_from(graph, h, in.x0, out.init_mode);
  const double L10 = initial_lyapunov_bound(problem, graph, st0, h);
  ci.L10 = L10;
  const double p = ci.norms.p;
  const double x0_norm = max_row_norm(in.x0, p);

  switch (regime) {
    case Regime::kT1LocalNonconvex: {
      const double T = static_cast<double>(in.T);
      ci.T = T;
      ci.alpha = in.alpha.value_or(1.0 / (std::pow(n, 0.25) * dt * std::sqrt(T)));
      ci.s0 = in.s0.value_or(x0_norm / ct.C);
      violate(*ci.s0 * ct.C >= x0_norm * (1.0 - 1e-15), "s0 below max_i ||x_i0||_p / C");
      out.table = compute_constants(ci);
      const ConstantTable& t = out.table;
      violate(T > t.at("kappa3_tilde"), "T not above kappa3_tilde");
      violate(ci.alpha < t.at("kappa0_tilde_prime"), "alpha not below kappa0_tilde_prime(T)");
      h.schedule = ScalingSchedule::recursive(*ci.s0, t.at("eps8"), t.at("kappa4_tilde"));
      break;
    }
    case Regime::kT2LocalExactFirst: {
      const double T = static_cast<double>(in.T);
      ci.T = T;
      const double denom = std::cbrt(n) * std::pow(dt, 2.0 / 3.0) * std::cbrt(T);
      // kappa0 depends on alpha through psi2; iterate to the fixed point
      // alpha = kappa0(alpha) / denom unless tau0 is supplied.
      double alpha = in.tau0 ? *in.tau0 / denom : 0.0;
      if (!in.tau0) {
        for (int it = 0; it < 200; ++it) {
          ci.alpha = alpha;
          const double next = usable(compute_constants(ci).at("kappa0") / denom);
          if (std::abs(next - alpha) <= 1e-15 * std::abs(next)) {
            alpha = next;
            break;
          }
          alpha = next;
        }
      }
      ci.alpha = alpha;
      const double tau0 = alpha * denom;
      ci.tau0 = tau0;
      const ConstantTable pre = compute_constants(ci);
      const double tau4 = in.tau4.value_or(pre.at("kappa4"));
      ci.s0 = in.s0.value_or(std::sqrt(tau4 * n * alpha * alpha));
      out.table = compute_constants(ci);
      out.table.set("tau4", tau4);
      const ConstantTable& t = out.table;
      violate(tau0 <= t.at("kappa0") * (1.0 + 1e-12), "tau0 above kappa0");
      violate(tau4 >= t.at("kappa4"), "tau4 below kappa4");
      violate(T > t.at("kappa3"), "T not above kappa3");
      violate(alpha < t.at("kappa0_tilde_prime"), "alpha not below kappa0_tilde_prime(T)");
      h.schedule = ScalingSchedule::recursive(*ci.s0, t.at("eps8"), t.at("kappa4_tilde"));
      break;
    }
    case Regime::kT3LocalPL: {
      // psi5 is fixed at the largest admissible alpha so that the lower bound
      // on psi5 holds for every alpha actually chosen below it.
      ci.alpha = 0.0;
      const ConstantTable base = compute_constants(ci);
      const double alpha_cap = usable(in.alpha.value_or(
          in.alpha_fraction * std::min(base.at("kappa0_hat"), base.at("kappa5"))));
      ci.alpha = alpha_cap;
      const ConstantTable at_cap = compute_constants(ci);
      const double need = (1.0 - 2.0 * at_cap.at("eps5")) * at_cap.at("psi2") / at_cap.at("eps6");
      ci.psi5 = need > 0.0 ? 2.0 * need : 1.0;
      ci.alpha = 0.0;
      const double k0p = compute_constants(ci).at("kappa0_prime");
      ci.alpha = usable(in.alpha.value_or(std::min(alpha_cap, in.alpha_fraction * k0p)));
      const LyapunovComponents lc = lyapunov_components(st0, problem, graph, h);
      ci.kappa_nu = lc.e1 + lc.e2 + lc.e3 + n * lc.grad_sq / (2.0 * *ci.nu);
      out.table = compute_constants(ci);
      const ConstantTable& t = out.table;
      const double lower = std::max(t.at("kappa9"), t.at("kappa10"));
      const double rate = in.rate.value_or(0.5 * (lower + 1.0));
      ci.s0 = in.s0.value_or(std::max(
          std::sqrt(*ci.kappa_nu / (n * dt * dt * *ci.psi5 * ct.C * ct.C)), x0_norm / ct.C));
      out.table.set("s0", *ci.s0);
      out.table.set("rate", rate);
      violate(ci.alpha > 0.0 && ci.alpha < t.at("kappa0_prime"), "alpha not below kappa0_prime");
      violate(t.at("eps6") > 0.0, "eps6 not positive");
      violate(*ci.psi5 > (1.0 - 2.0 * t.at("eps5")) * t.at("psi2") / t.at("eps6"),
              "psi5 below its lower bound");
      violate(rate > lower && rate < 1.0, "rate outside (max{kappa9, kappa10}, 1)");
      violate(*ci.s0 * ct.C >= x0_norm * (1.0 - 1e-15), "s0 below max_i ||x_i0||_p / C");
      h.schedule = ScalingSchedule::geometric(*ci.s0, rate);
      break;
    }
    case Regime::kT5GlobalNonconvex:
    case Regime::kT6GlobalPL: {
      ci.alpha = 0.0;
      const double bound = compute_constants(ci).at("kappa0_hat_prime");
      ci.alpha = usable(in.alpha.value_or(in.alpha_fraction * bound));
      const double rate = in.rate.value_or(0.99);
      ci.s0 = in.s0.value_or(std::max(x0_norm, 1e-12));
      out.table = compute_constants(ci);
      out.table.set("s0", *ci.s0);
      out.table.set("rate", rate);
      violate(ci.alpha > 0.0 && ci.alpha < bound, "alpha not below kappa0_hat_prime");
      violate(rate > 0.0 && rate < 1.0, "rate outside (0, 1)");
      violate(*ci.s0 >= x0_norm * (1.0 - 1e-15), "s0 below max_i ||x_i0||");
      if (regime == Regime::kT6GlobalPL) {
        const double e6p = out.table.at("eps6_prime");
        violate(e6p > 0.0, "eps6_prime not positive");
        out.table.set("eps_hat_lower", std::max(1.0 - ci.alpha * e6p, rate * rate));
      }
      h.schedule = ScalingSchedule::geometric(*ci.s0, rate);
      break;
    }
  }
  h.alpha = ci.alpha;
  if (local) violate(h.alpha > 0.0 && h.alpha < out.table.at("kappa0_hat"), "alpha not below kappa0_hat");
  if (in.enforce && !out.feasible())
    fail(ErrorKind::kInfeasibleParams, out.violations.front());
  return out;
}

}  // namespace unicomp
