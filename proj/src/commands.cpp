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

#include "unicomp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "unicomp/plot.hpp"

namespace unicomp {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json table_json(const ConstantTable& t) {
  json j = json::object();
  for (const auto& [k, v] : t.values()) j[k] = number(v);
  return j;
}

json hyper_json(const HyperParams& h, InitMode init) {
  return {{"alpha", number(h.alpha)},
          {"beta", number(h.beta)},
          {"gamma", number(h.gamma)},
          {"tau1", number(h.tau1)},
          {"omega", number(h.omega)},
          {"init_mode", init_mode_name(init)},
          {"schedule",
           {{"mode", schedule_mode_name(h.schedule.mode)},
            {"s0", number(h.schedule.s0)},
            {"rate", number(h.schedule.rate)},
            {"eps8", number(h.schedule.eps8)},
            {"kappa4", number(h.schedule.kappa4)}}}};
}

json contract_json(const AssumptionContract& c) {
  return {{"class", c.cls == ContractClass::kLocal ? "local" : "global"},
          {"p", number(c.p)},
          {"r", number(c.r)},
          {"C", number(c.C)},
          {"delta", number(c.delta)}};
}

json check_json(const CheckReport& r) {
  return {{"checked", r.checked}, {"violations", r.violations}, {"worst", number(r.worst)},
          {"pass", r.pass()}};
}

json fit_json(const std::vector<std::pair<double, double>>& series, RateModel model) {
  try {
    const RateFit f = rate_fit(series, model);
    return {{model == RateModel::kPowerLaw ? "exponent" : "ratio", number(f.slope)},
            {"r_squared", number(f.r_squared)},
            {"points", f.points}};
  } catch (const Error& e) {
    return {{"error", e.what()}};
  }
}

void report_error(std::ostream& err, const Error& e) {
  err << "error " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DivergenceError& e) {
    err << "error NonFiniteState: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error Internal: " << e.what() << '\n';
    return 1;
  }
}

// Refuses to touch any existing target unless forced, then writes them all.
void write_outputs(const fs::path& dir, const std::vector<std::pair<std::string, std::string>>& files,
                   bool force) {
  if (!force)
    for (const auto& [name, _] : files)
      require(!fs::exists(dir / name), ErrorKind::kOutputExists,
              "output " + (dir / name).string() + " exists; pass --force to overwrite");
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorKind::kConfigError, "cannot create output directory " + dir.string());
  for (const auto& [name, body] : files) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(f), ErrorKind::kConfigError, "cannot write " + (dir / name).string());
    f << body;
  }
}

std::string agents_csv(const RunTrace& trace) {
  std::string out = "k,agent,s_k,pre_p,post_p,pre_sq,post_sq\n";
  char buf[256];
  for (const AgentRecord& a : trace.agents)
    for (std::size_t i = 0; i < a.pre_p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%ld,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", a.k, i, a.s_k,
                    a.pre_p[i], a.post_p[i], a.pre_sq[i], a.post_sq[i]);
      out += buf;
    }
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasibleParams: return kExitInfeasible;
    case ErrorKind::kNonFiniteState:
    case ErrorKind::kNumericalFailure: return kExitDivergence;
    default: return kExitConfig;
  }
}

std::string output_directory(const RunConfig& config, const CommandOptions& options) {
  fs::path dir = config.output.directory;
  std::optional<std::string> root = options.output_root;
  if (!root)
    if (const char* env = std::getenv("UNICOMP_OUTPUT_ROOT"); env && *env) root = env;
  if (root && dir.is_relative()) dir = fs::path(*root) / dir;
  return dir.string();
}

SweepResult sweep(const RunConfig& config, std::vector<long> horizons,
                  const CommandOptions& options) {
  require(horizons.size() >= 3, ErrorKind::kConfigError, "sweep needs at least 3 horizons");
  std::sort(horizons.begin(), horizons.end());
  require(std::adjacent_find(horizons.begin(), horizons.end()) == horizons.end(),
          ErrorKind::kConfigError, "sweep horizons must be distinct");
  SweepResult res;
  std::vector<std::pair<double, double>> series;
  for (long T : horizons) {
    require(T >= 1, ErrorKind::kConfigError, "horizons must be positive");
    SweepRow row;
    row.T = T;
    if (options.injected_metric) {
      row.metric = options.injected_metric(T);
    } else {
      Experiment ex = prepare(config, T);
      const RunTrace trace =
          run(*ex.problem, ex.graph, ex.compressor, ex.params.hyper, ex.options);
      row.metric = averaged_metric(trace);
      row.alpha = ex.params.hyper.alpha;
      row.region_violations = trace.region_violations;
    }
    res.rows.push_back(row);
    series.emplace_back(static_cast<double>(T), row.metric);
  }
  res.fit = rate_fit(series, RateModel::kPowerLaw, 0.0);
  return res;
}

int cmd_run(const std::string& config_path, const CommandOptions& options, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = load_config(config_path);
    Experiment ex = prepare(config);
    const RunTrace trace = run(*ex.problem, ex.graph, ex.compressor, ex.params.hyper, ex.options);

    const TraceRow& last = trace.rows.back();
    std::vector<std::pair<double, double>> series;
    for (const TraceRow& r : trace.rows)
      series.emplace_back(static_cast<double>(r.k) + 1.0, r.grad_sq + r.consensus);
    json summary;
    summary["regime"] = config.algorithm.regime ? regime_name(*config.algorithm.regime) : "none";
    summary["mode"] = config.algorithm.theoretical ? "theoretical" : "empirical";
    summary["T"] = ex.options.T;
    summary["seed"] = config.algorithm.seed;
    summary["contract"] = contract_json(ex.contract);
    summary["hyper"] = hyper_json(ex.params.hyper, ex.params.init_mode);
    summary["violated_preconditions"] = ex.params.violations;
    summary["final"] = {{"f_bar", number(last.f_bar)},
                        {"grad_sq", number(last.grad_sq)},
                        {"consensus", number(last.consensus)},
                        {"e5", number(last.e5)},
                        {"s_k", number(last.s_k)},
                        {"bits_cum", last.bits_cum},
                        {"averaged_metric", number(averaged_metric(trace))}};
    summary["fits"] = {{"power_law", fit_json(series, RateModel::kPowerLaw)},
                       {"geometric", fit_json(series, RateModel::kGeometric)}};
    json checks;
    checks["region_violations"] = trace.region_violations;
    checks["max_y_residual"] = number(trace.max_y_residual);
    checks["max_v_mean"] = number(trace.max_v_mean);
    checks["max_mean_dynamics"] = number(trace.max_mean_dynamics);
    const ConstantTable& t = ex.params.table;
    if (t.has("eps1") && t.has("eps2"))
      checks["lyapunov_sandwich"] = check_json(lyapunov_sandwich_check(trace, t.at("eps1"), t.at("eps2")));
    if (!trace.agents.empty() && ex.contract.cls == ContractClass::kLocal)
      checks["contraction"] = check_json(contraction_check(trace, ex.contract, ex.params.hyper));
    summary["checks"] = checks;

    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("summary.json", summary.dump(2) + "\n");
    if (config.output.csv) files.emplace_back("trace.csv", trace_csv(trace));
    if (config.output.per_agent_trace) files.emplace_back("agents.csv", agents_csv(trace));
    if (config.output.svg) {
      files.emplace_back("trace_k.svg", trace_svg(trace, false));
      files.emplace_back("trace_bits.svg", trace_svg(trace, true));
    }
    const fs::path dir = output_directory(config, options);
    write_outputs(dir, files, options.force);
    out << summary.dump(2) << '\n';
    return int{kExitOk};
  });
}

int cmd_sweep(const std::string& config_path, const std::vector<long>& horizons,
              const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = load_config(config_path);
    const SweepResult res = sweep(config, horizons, options);
    std::string csv = "T,metric,alpha,region_violations\n";
    char buf[160];
    json rows = json::array();
    for (const SweepRow& r : res.rows) {
      std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%ld\n", r.T, r.metric, r.alpha,
                    r.region_violations);
      csv += buf;
      rows.push_back({{"T", r.T}, {"metric", number(r.metric)}, {"alpha", number(r.alpha)},
                      {"region_violations", r.region_violations}});
    }
    json summary = {{"rows", rows},
                    {"fit",
                     {{"exponent", number(res.fit.slope)},
                      {"r_squared", number(res.fit.r_squared)},
                      {"points", res.fit.points}}}};
    std::vector<std::pair<std::string, std::string>> files = {
        {"sweep.csv", csv}, {"sweep.json", summary.dump(2) + "\n"}};
    if (config.output.svg) {
      Panel p{"averaged metric vs T", {}};
      for (const SweepRow& r : res.rows) p.points.emplace_back(double(r.T), r.metric);
      files.emplace_back("sweep.svg", svg_panels({p}, "T", true));
    }
    write_outputs(output_directory(config, options), files, options.force);
    out << summary.dump(2) << '\n';
    return int{kExitOk};
  });
}

int cmd_verify(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  (void)options;
  return guarded(err, [&] {
    const RunConfig config = load_config(config_path);
    const int d = config.problem.d;
    const CompressorSpec spec =
        with_seed(config.compressor.spec, substream_seed(config.algorithm.seed, "compressor"));
    const AssumptionContract ct = effective_contract(config.compressor, d);
    const std::uint64_t vseed = substream_seed(config.algorithm.seed, "verify");
    VerificationReport rep;
    if (ct.cls == ContractClass::kLocal)
      rep = verify_local_assumption(spec, ct, d, config.compressor.verify_samples, vseed);
    else
      rep = verify_global_assumption(spec, ct, d, config.compressor.verify_samples / 100 + 10,
                                     config.compressor.verify_trials, vseed);
    json worst = json::array();
    for (Eigen::Index i = 0; i < rep.worst_point.size(); ++i) worst.push_back(number(rep.worst_point(i)));
    json report = {{"compressor", compressor_kind_name(spec.kind)},
                   {"contract", contract_json(ct)},
                   {"max_ratio", number(rep.max_ratio)},
                   {"points", rep.points},
                   {"pass", rep.pass},
                   {"worst_point", worst}};
    out << report.dump(2) << '\n';
    if (!rep.pass) {
      err << "error VerificationFailed: max_ratio " << rep.max_ratio << " exceeds 1\n";
      return int{kExitVerifyFailed};
    }
    return int{kExitOk};
  });
}

int cmd_params(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  (void)options;
  return guarded(err, [&] {
    const RunConfig config = load_config(config_path);
    const Experiment ex = prepare(config);
    json j = {{"regime", config.algorithm.regime ? regime_name(*config.algorithm.regime) : "none"},
              {"mode", config.algorithm.theoretical ? "theoretical" : "empirical"},
              {"T", ex.options.T},
              {"graph", {{"n", ex.graph.n}, {"rho", ex.graph.rho}, {"rho2", ex.graph.rho2}}},
              {"problem", {{"family", ex.problem->family()}, {"d", ex.problem->d()}, {"ell", ex.problem->ell()}}},
              {"contract", contract_json(ex.contract)},
              {"hyper", hyper_json(ex.params.hyper, ex.params.init_mode)},
              {"violated_preconditions", ex.params.violations},
              {"constants", table_json(ex.params.table)}};
    out << j.dump(2) << '\n';
    return int{kExitOk};
  });
}

}  // namespace unicomp
