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

#include "unicomp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "unicomp/error.hpp"

namespace unicomp {
namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& reason) { fail(ErrorKind::kConfigError, reason); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json scalar_value(const std::string& raw) {
  std::string v = trim(raw);
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
    return v.substr(1, v.size() - 2);
  if (v == "true") return true;
  if (v == "false") return false;
  if (!v.empty() && v.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      config_fail("integer out of range: " + v);
    }
  }
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (!v.empty() && end == v.c_str() + v.size()) return x;
  return v;
}

void check_keys(const json& obj, const std::string& section, const std::set<std::string>& allowed) {
  if (!obj.is_object()) config_fail("section [" + section + "] must be a table");
  for (const auto& [k, _] : obj.items())
    if (!allowed.count(k)) config_fail("unknown key '" + k + "' in [" + section + "]");
}

double num(const json& obj, const std::string& key, const std::string& section) {
  const json& v = obj.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const json parsed = scalar_value(v.get<std::string>());
    if (parsed.is_number()) return parsed.get<double>();
  }
  config_fail("key '" + key + "' in [" + section + "] must be a number");
}

std::optional<double> opt_num(const json& obj, const std::string& key, const std::string& sec) {
  if (!obj.contains(key)) return std::nullopt;
  return num(obj, key, sec);
}

long integer(const json& obj, const std::string& key, const std::string& sec) {
  const double x = num(obj, key, sec);
  if (x != std::floor(x) || std::abs(x) > 9.0e15)
    config_fail("key '" + key + "' in [" + sec + "] must be an integer");
  return static_cast<long>(x);
}

std::uint64_t seed_value(const json& obj, const std::string& key, const std::string& sec) {
  const json& v = obj.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const json parsed = scalar_value(v.get<std::string>());
    if (parsed.is_number_unsigned()) return parsed.get<std::uint64_t>();
  }
  config_fail("key '" + key + "' in [" + sec + "] must be an unsigned 64-bit integer");
}

std::string str(const json& obj, const std::string& key, const std::string& sec) {
  const json& v = obj.at(key);
  if (!v.is_string()) config_fail("key '" + key + "' in [" + sec + "] must be a string");
  return v.get<std::string>();
}

bool boolean(const json& obj, const std::string& key, const std::string& sec) {
  const json& v = obj.at(key);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "true" || s == "on" || s == "yes") return true;
    if (s == "false" || s == "off" || s == "no") return false;
  }
  config_fail("key '" + key + "' in [" + sec + "] must be a boolean");
}

template <typename F>
auto wrap(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfigError) throw;
    config_fail(what + ": " + e.what());
  }
}

ScalingSchedule::Mode parse_schedule_mode(const std::string& s) {
  if (s == "constant") return ScalingSchedule::Mode::kConstant;
  if (s == "geometric") return ScalingSchedule::Mode::kGeometric;
  if (s == "recursive") return ScalingSchedule::Mode::kRecursive;
  config_fail("unknown schedule '" + s + "'");
}

double max_row_norm(const StateMat& x, double p) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    worst = std::max(worst, p_norm(x.row(i).transpose().eval(), p));
  return worst;
}

}  // namespace

json parse_ini(const std::string& text) {
  json root = json::object();
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') config_fail("line " + std::to_string(lineno) + ": bad section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) config_fail("line " + std::to_string(lineno) + ": empty section");
      if (!root.contains(section)) root[section] = json::object();
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) config_fail("line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty()) config_fail("line " + std::to_string(lineno) + ": key outside a section");
    std::string key = trim(t.substr(0, eq));
    std::string value = t.substr(eq + 1);
    // Strip trailing comments introduced by " #" outside quotes.
    char quote = 0;
    for (std::size_t i = 0; i < value.size(); ++i) {
      const char c = value[i];
      if (quote) {
        if (c == quote) quote = 0;
      } else if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '#' && i > 0 && (value[i - 1] == ' ' || value[i - 1] == '\t')) {
        value.resize(i);
        break;
      }
    }
    json* node = &root[section];
    std::size_t start = 0;
    for (std::size_t dot; (dot = key.find('.', start)) != std::string::npos; start = dot + 1) {
      const std::string part = key.substr(start, dot - start);
      if (part.empty()) config_fail("line " + std::to_string(lineno) + ": bad key");
      json& child = (*node)[part];
      if (child.is_null()) child = json::object();
      if (!child.is_object()) config_fail("line " + std::to_string(lineno) + ": key conflict");
      node = &child;
    }
    const std::string leaf = key.substr(start);
    if (leaf.empty()) config_fail("line " + std::to_string(lineno) + ": bad key");
    if (node->contains(leaf)) config_fail("line " + std::to_string(lineno) + ": duplicate key " + key);
    (*node)[leaf] = scalar_value(value);
  }
  return root;
}

CompressorSpec compressor_from_json(const json& j) {
  const std::string sec = "compressor";
  check_keys(j, sec, {"kind", "level", "step", "k", "bits", "noise", "radius", "inner_divisor",
                      "inner", "outer", "base", "contract", "verify_samples", "verify_trials"});
  if (!j.contains("kind")) config_fail("compressor needs 'kind'");
  const CompressorKind kind = wrap("compressor", [&] { return parse_compressor_kind(str(j, "kind", sec)); });
  CompressorSpec s;
  switch (kind) {
    case CompressorKind::kIdentity: s = CompressorSpec::identity(); break;
    case CompressorKind::kOneBit: s = CompressorSpec::one_bit(opt_num(j, "level", sec).value_or(1.0)); break;
    case CompressorKind::kSatQuant:
      s = CompressorSpec::sat_quant(opt_num(j, "level", sec).value_or(1.0),
                                    opt_num(j, "step", sec).value_or(1.0));
      break;
    case CompressorKind::kTopK:
      if (!j.contains("k")) config_fail("top_k needs 'k'");
      s = CompressorSpec::top_k(static_cast<int>(integer(j, "k", sec)),
                                opt_num(j, "radius", sec).value_or(1.0));
      break;
    case CompressorKind::kNormSign: s = CompressorSpec::norm_sign(); break;
    case CompressorKind::kUnbiasedKBit:
      s = CompressorSpec::unbiased_kbit(j.contains("bits") ? static_cast<int>(integer(j, "bits", sec)) : 2);
      break;
    case CompressorKind::kRandK:
      if (!j.contains("k")) config_fail("rand_k needs 'k'");
      s = CompressorSpec::rand_k(static_cast<int>(integer(j, "k", sec)));
      break;
    case CompressorKind::kScalarization: s = CompressorSpec::scalarization(); break;
    case CompressorKind::kUniformQuant:
      s = CompressorSpec::uniform_quant(opt_num(j, "step", sec).value_or(1.0));
      break;
    case CompressorKind::kCompose:
      if (!j.contains("inner") || !j.contains("outer")) config_fail("compose needs inner and outer");
      s = CompressorSpec::compose(compressor_from_json(j.at("inner")),
                                  compressor_from_json(j.at("outer")),
                                  opt_num(j, "inner_divisor", sec).value_or(1.0));
      break;
    case CompressorKind::kNoisy:
      if (!j.contains("base")) config_fail("noisy needs 'base'");
      s = CompressorSpec::noisy(compressor_from_json(j.at("base")),
                                opt_num(j, "noise", sec).value_or(0.0));
      break;
  }
  // A noise key on any non-noisy kind wraps it.
  if (kind != CompressorKind::kNoisy && j.contains("noise"))
    s = CompressorSpec::noisy(s, num(j, "noise", sec));
  return s;
}

AssumptionContract effective_contract(const CompressorConfig& c, int d) {
  AssumptionContract ct = wrap("contract", [&] { return derive_contract(c.spec, d); });
  if (c.cls) ct.cls = *c.cls;
  if (c.p) ct.p = *c.p;
  if (c.r) ct.r = *c.r;
  if (c.C) ct.C = *c.C;
  if (c.delta) ct.delta = *c.delta;
  return ct;
}

RunConfig config_from_json(const json& root) {
  if (!root.is_object()) config_fail("config must be a table of sections");
  check_keys(root, "root", {"problem", "graph", "compressor", "algorithm", "output"});
  RunConfig cfg;

  if (root.contains("problem")) {
    const json& j = root.at("problem");
    const std::string sec = "problem";
    check_keys(j, sec, {"family", "d", "seed", "condition", "lambda", "samples"});
    if (j.contains("family")) cfg.problem.family = str(j, "family", sec);
    if (cfg.problem.family != "quadratic" && cfg.problem.family != "nonconvex")
      config_fail("unknown problem family '" + cfg.problem.family + "'");
    if (j.contains("d")) cfg.problem.d = static_cast<int>(integer(j, "d", sec));
    if (j.contains("seed")) cfg.problem.seed = seed_value(j, "seed", sec);
    cfg.problem.condition = opt_num(j, "condition", sec).value_or(cfg.problem.condition);
    cfg.problem.lambda = opt_num(j, "lambda", sec).value_or(cfg.problem.lambda);
    if (j.contains("samples")) cfg.problem.samples = static_cast<int>(integer(j, "samples", sec));
    if (cfg.problem.d < 1) config_fail("problem dimension d must be positive");
  }

  if (root.contains("graph")) {
    const json& j = root.at("graph");
    const std::string sec = "graph";
    check_keys(j, sec, {"topology", "n", "prob", "seed"});
    if (j.contains("topology"))
      cfg.graph.topology.kind = wrap("graph", [&] { return parse_topology(str(j, "topology", sec)); });
    if (j.contains("n")) cfg.graph.n = static_cast<int>(integer(j, "n", sec));
    cfg.graph.topology.prob = opt_num(j, "prob", sec).value_or(cfg.graph.topology.prob);
    if (j.contains("seed")) cfg.graph.topology.seed = seed_value(j, "seed", sec);
  } else {
    cfg.graph.topology.kind = Topology::kRing;
  }

  if (root.contains("compressor")) {
    const json& j = root.at("compressor");
    cfg.compressor.spec = compressor_from_json(j);
    const std::string sec = "compressor";
    if (j.contains("contract")) {
      const json& c = j.at("contract");
      check_keys(c, "compressor.contract", {"class", "p", "r", "C", "delta"});
      if (c.contains("class")) {
        const std::string cl = str(c, "class", sec);
        if (cl == "local") cfg.compressor.cls = ContractClass::kLocal;
        else if (cl == "global") cfg.compressor.cls = ContractClass::kGlobal;
        else config_fail("contract class must be local or global");
      }
      if (c.contains("p")) {
        if (c.at("p").is_string() && (c.at("p") == "inf" || c.at("p") == "infinity")) cfg.compressor.p = kInf;
        else cfg.compressor.p = num(c, "p", sec);
      }
      cfg.compressor.r = opt_num(c, "r", sec);
      cfg.compressor.C = opt_num(c, "C", sec);
      cfg.compressor.delta = opt_num(c, "delta", sec);
    }
    if (j.contains("verify_samples")) cfg.compressor.verify_samples = integer(j, "verify_samples", sec);
    if (j.contains("verify_trials")) cfg.compressor.verify_trials = integer(j, "verify_trials", sec);
  }

  if (root.contains("algorithm")) {
    const json& j = root.at("algorithm");
    const std::string sec = "algorithm";
    check_keys(j, sec, {"mode", "regime", "T", "init_mode", "seed", "x0_scale", "workers",
                        "enforce", "alpha", "alpha_scale", "gamma", "tau1", "omega", "s0",
                        "rate", "tau0", "tau4", "eps8", "kappa4", "kappa4_a", "kappa4_b",
                        "schedule", "gamma_margin", "tau_margin", "alpha_fraction"});
    AlgorithmConfig& a = cfg.algorithm;
    if (j.contains("mode")) {
      const std::string m = str(j, "mode", sec);
      if (m == "theoretical") a.theoretical = true;
      else if (m != "empirical") config_fail("algorithm mode must be theoretical or empirical");
    }
    if (j.contains("regime"))
      a.regime = wrap("algorithm", [&] { return parse_regime(str(j, "regime", sec)); });
    if (a.theoretical && !a.regime) config_fail("theoretical mode needs a regime");
    if (j.contains("T")) a.T = integer(j, "T", sec);
    if (a.T < 1) config_fail("T must be at least 1");
    if (j.contains("init_mode")) {
      a.init_mode = wrap("algorithm", [&] { return parse_init_mode(str(j, "init_mode", sec)); });
      a.init_mode_set = true;
    }
    if (j.contains("seed")) a.seed = seed_value(j, "seed", sec);
    a.x0_scale = opt_num(j, "x0_scale", sec).value_or(a.x0_scale);
    if (j.contains("workers")) a.workers = static_cast<int>(integer(j, "workers", sec));
    if (a.workers < 1) config_fail("workers must be positive");
    if (j.contains("enforce")) a.enforce = boolean(j, "enforce", sec);
    a.alpha = opt_num(j, "alpha", sec);
    a.alpha_scale = opt_num(j, "alpha_scale", sec);
    a.gamma = opt_num(j, "gamma", sec);
    a.tau1 = opt_num(j, "tau1", sec);
    a.omega = opt_num(j, "omega", sec);
    a.s0 = opt_num(j, "s0", sec);
    a.rate = opt_num(j, "rate", sec);
    a.tau0 = opt_num(j, "tau0", sec);
    a.tau4 = opt_num(j, "tau4", sec);
    a.eps8 = opt_num(j, "eps8", sec);
    a.kappa4 = opt_num(j, "kappa4", sec);
    a.kappa4_a = opt_num(j, "kappa4_a", sec);
    a.kappa4_b = opt_num(j, "kappa4_b", sec);
    if (j.contains("schedule")) a.schedule = parse_schedule_mode(str(j, "schedule", sec));
    a.gamma_margin = opt_num(j, "gamma_margin", sec).value_or(a.gamma_margin);
    a.tau_margin = opt_num(j, "tau_margin", sec).value_or(a.tau_margin);
    a.alpha_fraction = opt_num(j, "alpha_fraction", sec).value_or(a.alpha_fraction);
  }

  if (root.contains("output")) {
    const json& j = root.at("output");
    const std::string sec = "output";
    check_keys(j, sec, {"directory", "csv", "svg", "per_agent_trace"});
    if (j.contains("directory")) cfg.output.directory = str(j, "directory", sec);
    if (j.contains("csv")) cfg.output.csv = boolean(j, "csv", sec);
    if (j.contains("svg")) cfg.output.svg = boolean(j, "svg", sec);
    if (j.contains("per_agent_trace")) cfg.output.per_agent_trace = boolean(j, "per_agent_trace", sec);
  }
  return cfg;
}

RunConfig parse_config(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      config_fail(std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
  }
  return config_from_json(parse_ini(text));
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_fail("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Experiment prepare(const RunConfig& config, std::optional<long> T_override) {
  const AlgorithmConfig& a = config.algorithm;
  const long T = T_override.value_or(a.T);
  require(T >= 1, ErrorKind::kConfigError, "T must be at least 1");
  Experiment ex;
  ex.graph = wrap("graph", [&] { return build_graph(config.graph.topology, config.graph.n); });
  const ProblemConfig& pc = config.problem;
  ex.problem = wrap("problem", [&] {
    return pc.family == "quadratic"
               ? make_quadratic(ex.graph.n, pc.d, pc.seed, pc.condition)
               : make_nonconvex(ex.graph.n, pc.d, pc.seed, pc.lambda, pc.samples);
  });
  ex.compressor = config.compressor.spec;
  wrap("compressor", [&] {
    validate(ex.compressor, pc.d);
    return 0;
  });
  ex.contract = effective_contract(config.compressor, pc.d);

  InitMode init = a.init_mode;
  if (!a.init_mode_set && a.regime == Regime::kT2LocalExactFirst) init = InitMode::kExactFirstRound;
  ex.x0 = initial_points(ex.graph.n, pc.d, init, substream_seed(a.seed, "x0"), a.x0_scale);

  TheoremInputs ti;
  ti.graph = &ex.graph;
  ti.problem = ex.problem.get();
  ti.contract = ex.contract;
  ti.T = T;
  ti.x0 = ex.x0;
  ti.gamma = a.gamma;
  ti.tau1 = a.tau1;
  ti.omega = a.omega;
  ti.s0 = a.s0;
  ti.rate = a.rate;
  ti.tau0 = a.tau0;
  ti.tau4 = a.tau4;
  ti.gamma_margin = a.gamma_margin;
  ti.tau_margin = a.tau_margin;
  ti.alpha_fraction = a.alpha_fraction;

  const NormContext norms = norm_context_for(ex.contract, pc.d);
  const double n = ex.graph.n;
  std::optional<double> alpha = a.alpha;
  if (!alpha && a.alpha_scale && a.regime) {
    if (*a.regime == Regime::kT1LocalNonconvex)
      alpha = *a.alpha_scale / (std::pow(n, 0.25) * norms.d_tilde * std::sqrt(double(T)));
    else if (*a.regime == Regime::kT2LocalExactFirst)
      alpha = *a.alpha_scale /
              (std::cbrt(n) * std::pow(norms.d_tilde, 2.0 / 3.0) * std::cbrt(double(T)));
  }

  if (!a.alpha && !a.tau0 && a.alpha_scale && a.regime == Regime::kT2LocalExactFirst)
    ti.tau0 = a.alpha_scale;

  if (a.theoretical) {
    ti.alpha = alpha;
    ti.enforce = a.enforce;
    ex.params = theorem_params(*a.regime, ti);
  } else {
    // Regime table gives defaults; only structural constraints enforced.
    const bool matches = a.regime && (regime_is_local(*a.regime) == (ex.contract.cls == ContractClass::kLocal));
    const bool from_theorem = a.regime && matches && ex.contract.C > 0.0;
    if (from_theorem) {
      ti.alpha = alpha;
      ti.enforce = false;
      ex.params = theorem_params(*a.regime, ti);
      ex.params.violations.clear();
    } else {
      ConstantInputs ci;
      ci.n = ex.graph.n;
      ci.rho = ex.graph.rho;
      ci.rho2 = ex.graph.rho2;
      ci.ell = ex.problem->ell();
      ci.contract = ex.contract;
      ci.norms = norms;
      const ConstantTable base = compute_constants(ci);
      HyperParams& h = ex.params.hyper;
      h.tau1 = a.tau1.value_or(base.at("kappa1") * a.tau_margin);
      h.gamma = a.gamma.value_or(base.at("kappa2") * a.gamma_margin);
      h.beta = h.tau1 * h.gamma;
      h.omega = a.omega.value_or(1.0 / ex.contract.r);
      ci.gamma = h.gamma;
      ci.tau1 = h.tau1;
      ci.omega = h.omega;
      if (!alpha)
        alpha = a.alpha_fraction * (ex.contract.cls == ContractClass::kLocal
                                        ? compute_constants(ci).at("kappa0_hat")
                                        : compute_constants(ci).at("kappa0_hat_prime"));
      ci.alpha = *alpha;
      ci.T = double(T);
      ex.params.table = compute_constants(ci);
      ex.params.init_mode = init;
    }
    HyperParams& h = ex.params.hyper;
    if (alpha) h.alpha = *alpha;
    if (a.gamma) h.gamma = *a.gamma;
    if (a.tau1) h.tau1 = *a.tau1;
    if (a.omega) h.omega = *a.omega;
    h.beta = h.tau1 * h.gamma;
    require(h.omega > 0.0 && h.omega <= 1.0 / ex.contract.r * (1.0 + 1e-15),
            ErrorKind::kInfeasibleParams, "omega above 1/r");

    const bool local = ex.contract.cls == ContractClass::kLocal;
    const double x0_norm = max_row_norm(ex.x0, local ? ex.contract.p : 2.0);
    const double s0_default =
        local && ex.contract.C > 0.0 ? x0_norm / ex.contract.C : std::max(x0_norm, 1.0);
    const ScalingSchedule::Mode mode = a.schedule.value_or(h.schedule.mode);
    const double s0 = a.s0.value_or(from_theorem ? h.schedule.s0 : s0_default);
    const ConstantTable& t = ex.params.table;
    switch (mode) {
      case ScalingSchedule::Mode::kConstant: h.schedule = ScalingSchedule::constant(s0); break;
      case ScalingSchedule::Mode::kGeometric:
        h.schedule = ScalingSchedule::geometric(s0, a.rate.value_or(h.schedule.mode == ScalingSchedule::Mode::kGeometric ? h.schedule.rate : 0.99));
        break;
      case ScalingSchedule::Mode::kRecursive: {
        const double eps8 = a.eps8.value_or(t.at("eps8"));
        double k4;
        if (a.kappa4) k4 = *a.kappa4;
        else if (a.kappa4_a || a.kappa4_b)
          k4 = a.kappa4_a.value_or(0.0) * h.alpha * h.alpha / (ex.contract.C * ex.contract.C) +
               a.kappa4_b.value_or(0.0) * s0 * s0 * std::pow(h.alpha, 3) * double(T);
        else if (t.has("kappa4_tilde")) k4 = t.at("kappa4_tilde");
        else config_fail("recursive schedule needs kappa4 or kappa4_a/kappa4_b");
        h.schedule = ScalingSchedule::recursive(s0, eps8, k4);
        break;
      }
    }
    if (a.init_mode_set) ex.params.init_mode = a.init_mode;
  }
  if (a.init_mode_set && a.theoretical) ex.params.init_mode = a.init_mode;

  ex.options.T = T;
  ex.options.init_mode = ex.params.init_mode;
  ex.options.seed = a.seed;
  ex.options.x0_scale = a.x0_scale;
  ex.options.x0 = ex.x0;
  ex.options.workers = a.workers;
  ex.options.record_agents = config.output.per_agent_trace;
  ex.options.contract = ex.contract;
  return ex;
}

}  // namespace unicomp
