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

#include "unicomp/compressor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "unicomp/error.hpp"
#include "unicomp/random.hpp"

namespace unicomp {
namespace {

std::uint64_t ceil_log2(std::uint64_t v) {
  std::uint64_t b = 0;
  while ((std::uint64_t{1} << b) < v) ++b;
  return b;
}

double sign_plus(double v) { return v >= 0.0 ? 1.0 : -1.0; }

std::uint64_t child_salt(std::uint64_t salt, std::uint64_t which) {
  return splitmix64(salt * 4 + which);
}

Vec uniform_in_l2_ball(CounterRng& rng, int d, double radius) {
  Vec dir(d);
  double nrm = 0.0;
  do {
    for (int j = 0; j < d; ++j) dir(j) = rng.normal();
    nrm = dir.norm();
  } while (nrm == 0.0);
  const double rad = radius * std::pow(rng.uniform(), 1.0 / d);
  return dir * (rad / nrm);
}

Compressed compress_impl(const CompressorSpec& spec, const Vec& x, std::uint64_t iteration,
                         std::uint64_t agent, std::uint64_t salt) {
  const int d = static_cast<int>(x.size());
  Compressed out;
  out.q = Vec::Zero(d);
  switch (spec.kind) {
    case CompressorKind::kIdentity:
      out.q = x;
      out.bits = kFloatBits * d;
      break;
    case CompressorKind::kOneBit:
      for (int j = 0; j < d; ++j) out.q(j) = sign_plus(x(j)) * spec.level / 2.0;
      out.bits = d;
      break;
    case CompressorKind::kSatQuant: {
      const double lo = std::floor(-spec.level / spec.step);
      const double hi = std::floor(spec.level / spec.step);
      for (int j = 0; j < d; ++j) {
        double level = std::floor(x(j) / spec.step + 0.5);
        out.q(j) = spec.step * std::min(std::max(level, lo), hi);
      }
      const auto levels = static_cast<std::uint64_t>(hi) +
                          static_cast<std::uint64_t>(std::ceil(spec.level / spec.step)) + 1;
      out.bits = static_cast<std::uint64_t>(d) * ceil_log2(levels);
      break;
    }
    case CompressorKind::kTopK: {
      std::vector<int> idx(d);
      std::iota(idx.begin(), idx.end(), 0);
      std::partial_sort(idx.begin(), idx.begin() + spec.count, idx.end(), [&](int a, int b) {
        const double fa = std::abs(x(a)), fb = std::abs(x(b));
        return fa != fb ? fa > fb : a < b;
      });
      for (int t = 0; t < spec.count; ++t) out.q(idx[t]) = x(idx[t]);
      out.bits = kFloatBits * spec.count;
      break;
    }
    case CompressorKind::kNormSign: {
      const double m = d > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
      if (m > 0.0)
        for (int j = 0; j < d; ++j) out.q(j) = m / 2.0 * sign_plus(x(j));
      out.bits = d + kFloatBits;
      break;
    }
    case CompressorKind::kUnbiasedKBit: {
      const double m = d > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
      if (m > 0.0) {
        CounterRng rng(spec.seed, Stream::kCompressor, agent, iteration, salt);
        const double levels = std::ldexp(1.0, spec.bits - 1);
        const double scale = m / levels;
        for (int j = 0; j < d; ++j) {
          const double zeta = rng.uniform();
          out.q(j) = scale * sign_plus(x(j)) * std::floor(levels * std::abs(x(j)) / m + zeta);
        }
      }
      out.bits = static_cast<std::uint64_t>(spec.bits + 1) * d + kFloatBits;
      break;
    }
    case CompressorKind::kRandK: {
      CounterRng rng(spec.seed, Stream::kCompressor, agent, iteration, salt);
      std::vector<int> idx(d);
      std::iota(idx.begin(), idx.end(), 0);
      for (int t = 0; t < spec.count; ++t) {
        const auto pick = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - t)));
        std::swap(idx[t], idx[pick]);
        out.q(idx[t]) = x(idx[t]);
      }
      out.bits = kFloatBits * spec.count;
      break;
    }
    case CompressorKind::kScalarization: {
      // Shared across agents: keyed on iteration only.
      CounterRng rng(spec.seed, Stream::kDirection, 0, iteration, salt);
      Vec psi(d);
      double nrm = 0.0;
      do {
        for (int j = 0; j < d; ++j) psi(j) = rng.normal();
        nrm = psi.norm();
      } while (nrm == 0.0);
      psi /= nrm;
      out.q = psi * psi.dot(x);
      out.bits = kFloatBits;
      break;
    }
    case CompressorKind::kUniformQuant: {
      for (int j = 0; j < d; ++j) out.q(j) = spec.step * std::floor(x(j) / spec.step + 0.5);
      const double m = d > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
      const auto half = static_cast<std::uint64_t>(std::floor(m / spec.step));
      out.bits = static_cast<std::uint64_t>(d) * std::max<std::uint64_t>(1, ceil_log2(2 * half + 1));
      break;
    }
    case CompressorKind::kNoisy: {
      out = compress_impl(*spec.inner, x, iteration, agent, child_salt(salt, 3));
      if (spec.noise > 0.0) {
        CounterRng rng(spec.seed, Stream::kNoise, agent, iteration, salt);
        out.q += uniform_in_l2_ball(rng, d, spec.noise);
      }
      break;
    }
    case CompressorKind::kCompose: {
      Compressed mid = compress_impl(*spec.inner, x, iteration, agent, child_salt(salt, 1));
      Vec y = mid.q / spec.inner_divisor;
      out = compress_impl(*spec.outer, y, iteration, agent, child_salt(salt, 2));
      break;
    }
  }
  return out;
}

// Structural role of a globally bounded component.
enum class Role { kRelative, kAbsolute, kLocal };

Role role_of(const CompressorSpec& spec) {
  switch (spec.kind) {
    case CompressorKind::kIdentity:
    case CompressorKind::kUnbiasedKBit:
    case CompressorKind::kRandK:
    case CompressorKind::kScalarization:
      return Role::kRelative;
    case CompressorKind::kUniformQuant:
      return Role::kAbsolute;
    case CompressorKind::kNoisy:
      return role_of(*spec.inner);
    default:
      return Role::kLocal;
  }
}

AssumptionContract noise_free_global(const CompressorSpec& spec, int d) {
  AssumptionContract c;
  c.cls = ContractClass::kGlobal;
  c.p = 2.0;
  switch (spec.kind) {
    case CompressorKind::kIdentity:
      c.r = 1.0; c.C = 0.0; c.delta = 1.0;
      break;
    case CompressorKind::kUnbiasedKBit: {
      const double w = unbiased_kbit_variance_factor(spec.bits, d);
      c.r = 1.0 + w; c.C = 0.0; c.delta = 1.0 / (1.0 + w);
      break;
    }
    case CompressorKind::kRandK:
      c.r = 1.0; c.C = 0.0; c.delta = static_cast<double>(spec.count) / d;
      break;
    case CompressorKind::kScalarization:
      c.r = 1.0; c.C = 0.0; c.delta = 1.0 / d;
      break;
    case CompressorKind::kUniformQuant:
      c.r = 1.0; c.C = d * spec.step * spec.step / 4.0; c.delta = 1.0;
      break;
    default:
      fail(ErrorKind::kWrongClass, "not a globally bounded base compressor");
  }
  return c;
}

// Contract of a (possibly noisy) relative or absolute component.
AssumptionContract lemma1_form(const CompressorSpec& spec, int d) {
  const bool noisy = spec.kind == CompressorKind::kNoisy;
  const CompressorSpec& base = noisy ? *spec.inner : spec;
  const double c_xi = noisy ? spec.noise : 0.0;
  const AssumptionContract b = noise_free_global(base, d);
  if (role_of(base) == Role::kRelative) return lemma1_relative_params(b.delta, b.r, c_xi);
  return lemma1_absolute_params(b.C, b.r, c_xi);
}

Vec sample_in_p_ball(CounterRng& rng, int d, double p, double radius) {
  Vec x(d);
  if (std::isinf(p)) {
    for (int j = 0; j < d; ++j) x(j) = radius * (2.0 * rng.uniform() - 1.0);
    return x;
  }
  if (p == 2.0) return uniform_in_l2_ball(rng, d, radius);
  if (p == 1.0) {
    double total = rng.exponential();
    for (int j = 0; j < d; ++j) {
      x(j) = rng.exponential();
      total += x(j);
    }
    for (int j = 0; j < d; ++j) x(j) *= (rng.uniform() < 0.5 ? -radius : radius) / total;
    return x;
  }
  for (int j = 0; j < d; ++j) x(j) = 2.0 * rng.uniform() - 1.0;
  const double nrm = p_norm(x, p);
  if (nrm == 0.0) return Vec::Zero(d);
  return x * (radius * std::pow(rng.uniform(), 1.0 / d) / nrm);
}

std::vector<Vec> boundary_points(int d, double p, double radius, CounterRng& rng) {
  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(d));
  for (int j = 0; j < d; ++j) {
    for (double s : {1.0, -1.0}) {
      Vec e = Vec::Zero(d);
      e(j) = s * radius;
      pts.push_back(e);
    }
  }
  const double flat = std::isinf(p) ? radius : radius / std::pow(static_cast<double>(d), 1.0 / p);
  const int corners = d <= 10 ? (1 << d) : 1024;
  for (int c = 0; c < corners; ++c) {
    Vec v(d);
    for (int j = 0; j < d; ++j) {
      const bool neg = d <= 10 ? ((c >> j) & 1) : rng.uniform() < 0.5;
      v(j) = neg ? -flat : flat;
    }
    pts.push_back(v);
  }
  if (std::isinf(p)) {
    // Mixed corners with coordinates on a coarse grid.
    for (int t = 0; t < 256; ++t) {
      Vec v(d);
      for (int j = 0; j < d; ++j) v(j) = radius * (static_cast<double>(rng.below(17)) - 8.0) / 8.0;
      pts.push_back(v);
    }
  }
  return pts;
}

void update_ratio(VerificationReport& rep, double ratio, const Vec& x) {
  if (rep.worst_point.size() == 0 || ratio > rep.max_ratio) {
    rep.max_ratio = ratio;
    rep.worst_point = x;
  }
}

}  // namespace

NormContext make_norm_context(double p, int d) {
  require(p >= 1.0, ErrorKind::kInvalidArgument, "norm index must be at least 1");
  require(d >= 1, ErrorKind::kInvalidArgument, "dimension must be positive");
  NormContext ctx;
  ctx.p = p;
  ctx.d = d;
  const double dd = static_cast<double>(d);
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  if (p <= 2.0) {
    ctx.d_hat = std::pow(dd, inv_p - 0.5);
    ctx.d_tilde = 1.0;
  } else {
    ctx.d_hat = 1.0;
    ctx.d_tilde = std::pow(dd, 0.5 - inv_p);
  }
  return ctx;
}

NormContext norm_context_for(const AssumptionContract& contract, int d) {
  return make_norm_context(contract.cls == ContractClass::kLocal ? contract.p : 2.0, d);
}

CompressorKind parse_compressor_kind(const std::string& name) {
  if (name == "identity") return CompressorKind::kIdentity;
  if (name == "one_bit") return CompressorKind::kOneBit;
  if (name == "sat_quant") return CompressorKind::kSatQuant;
  if (name == "top_k") return CompressorKind::kTopK;
  if (name == "norm_sign") return CompressorKind::kNormSign;
  if (name == "unbiased_kbit") return CompressorKind::kUnbiasedKBit;
  if (name == "rand_k") return CompressorKind::kRandK;
  if (name == "scalarization") return CompressorKind::kScalarization;
  if (name == "uniform_quant") return CompressorKind::kUniformQuant;
  if (name == "compose") return CompressorKind::kCompose;
  if (name == "noisy") return CompressorKind::kNoisy;
  fail(ErrorKind::kInvalidArgument, "unknown compressor kind '" + name + "'");
}

std::string compressor_kind_name(CompressorKind kind) {
  switch (kind) {
    case CompressorKind::kIdentity: return "identity";
    case CompressorKind::kOneBit: return "one_bit";
    case CompressorKind::kSatQuant: return "sat_quant";
    case CompressorKind::kTopK: return "top_k";
    case CompressorKind::kNormSign: return "norm_sign";
    case CompressorKind::kUnbiasedKBit: return "unbiased_kbit";
    case CompressorKind::kRandK: return "rand_k";
    case CompressorKind::kScalarization: return "scalarization";
    case CompressorKind::kUniformQuant: return "uniform_quant";
    case CompressorKind::kCompose: return "compose";
    case CompressorKind::kNoisy: return "noisy";
  }
  return "unknown";
}

CompressorSpec CompressorSpec::identity() { return {}; }

CompressorSpec CompressorSpec::one_bit(double level) {
  CompressorSpec s;
  s.kind = CompressorKind::kOneBit;
  s.level = level;
  return s;
}

CompressorSpec CompressorSpec::sat_quant(double level, double step) {
  CompressorSpec s;
  s.kind = CompressorKind::kSatQuant;
  s.level = level;
  s.step = step;
  return s;
}

CompressorSpec CompressorSpec::top_k(int k, double radius) {
  CompressorSpec s;
  s.kind = CompressorKind::kTopK;
  s.count = k;
  s.radius = radius;
  return s;
}

CompressorSpec CompressorSpec::norm_sign() {
  CompressorSpec s;
  s.kind = CompressorKind::kNormSign;
  return s;
}

CompressorSpec CompressorSpec::unbiased_kbit(int bits) {
  CompressorSpec s;
  s.kind = CompressorKind::kUnbiasedKBit;
  s.bits = bits;
  return s;
}

CompressorSpec CompressorSpec::rand_k(int k) {
  CompressorSpec s;
  s.kind = CompressorKind::kRandK;
  s.count = k;
  return s;
}

CompressorSpec CompressorSpec::scalarization() {
  CompressorSpec s;
  s.kind = CompressorKind::kScalarization;
  return s;
}

CompressorSpec CompressorSpec::uniform_quant(double step) {
  CompressorSpec s;
  s.kind = CompressorKind::kUniformQuant;
  s.step = step;
  return s;
}

CompressorSpec CompressorSpec::noisy(const CompressorSpec& base, double noise_bound) {
  CompressorSpec s;
  s.kind = CompressorKind::kNoisy;
  s.noise = noise_bound;
  s.inner = std::make_shared<const CompressorSpec>(base);
  s.seed = base.seed;
  return s;
}

CompressorSpec CompressorSpec::compose(const CompressorSpec& inner, const CompressorSpec& outer,
                                       double inner_divisor) {
  CompressorSpec s;
  s.kind = CompressorKind::kCompose;
  s.inner = std::make_shared<const CompressorSpec>(inner);
  s.outer = std::make_shared<const CompressorSpec>(outer);
  s.inner_divisor = inner_divisor;
  s.seed = inner.seed;
  return s;
}

CompressorSpec with_seed(const CompressorSpec& spec, std::uint64_t seed) {
  CompressorSpec s = spec;
  s.seed = seed;
  if (s.inner) s.inner = std::make_shared<const CompressorSpec>(with_seed(*s.inner, seed));
  if (s.outer) s.outer = std::make_shared<const CompressorSpec>(with_seed(*s.outer, seed));
  return s;
}

void validate(const CompressorSpec& spec, int d) {
  require(d >= 1, ErrorKind::kInvalidArgument, "dimension must be positive");
  switch (spec.kind) {
    case CompressorKind::kOneBit:
      require(spec.level > 0.0, ErrorKind::kInvalidArgument, "level must be positive");
      break;
    case CompressorKind::kSatQuant:
      require(spec.level > 0.0, ErrorKind::kInvalidArgument, "level must be positive");
      require(spec.step > 0.0 && spec.step < 2.0 * spec.level, ErrorKind::kInvalidArgument,
              "step must lie in (0, 2 level)");
      break;
    case CompressorKind::kTopK:
    case CompressorKind::kRandK:
      require(spec.count >= 1 && spec.count <= d, ErrorKind::kInvalidArgument,
              "k must lie in [1, d]");
      require(spec.radius > 0.0, ErrorKind::kInvalidArgument, "radius must be positive");
      break;
    case CompressorKind::kUnbiasedKBit:
      require(spec.bits >= 1 && spec.bits <= 52, ErrorKind::kInvalidArgument,
              "bit width must lie in [1, 52]");
      break;
    case CompressorKind::kUniformQuant:
      require(spec.step > 0.0, ErrorKind::kInvalidArgument, "step must be positive");
      break;
    case CompressorKind::kNoisy:
      require(spec.inner != nullptr, ErrorKind::kInvalidArgument, "noisy needs a base");
      require(spec.noise >= 0.0, ErrorKind::kInvalidArgument, "noise bound must be nonnegative");
      validate(*spec.inner, d);
      break;
    case CompressorKind::kCompose:
      require(spec.inner && spec.outer, ErrorKind::kInvalidArgument,
              "compose needs inner and outer");
      require(spec.inner_divisor > 0.0, ErrorKind::kInvalidArgument,
              "inner divisor must be positive");
      validate(*spec.inner, d);
      validate(*spec.outer, d);
      break;
    default:
      break;
  }
}

Compressed compress(const CompressorSpec& spec, const Vec& x, std::uint64_t iteration,
                    std::uint64_t agent) {
  for (Eigen::Index j = 0; j < x.size(); ++j)
    require(std::isfinite(x(j)), ErrorKind::kNonFiniteState, "compressor input is not finite");
  return compress_impl(spec, x, iteration, agent, 0);
}

AssumptionContract lemma1_relative_params(double delta_r, double r_r, double C_xi) {
  require(delta_r > 0.0 && delta_r <= 1.0, ErrorKind::kOutOfRange, "delta_r must lie in (0, 1]");
  require(r_r > 0.0, ErrorKind::kOutOfRange, "r_r must be positive");
  require(C_xi >= 0.0, ErrorKind::kOutOfRange, "noise bound must be nonnegative");
  AssumptionContract c;
  c.cls = ContractClass::kGlobal;
  c.r = r_r;
  c.C = (2.0 - delta_r) * C_xi * C_xi / (delta_r * r_r * r_r);
  c.delta = delta_r / 2.0;
  return c;
}

AssumptionContract lemma1_absolute_params(double C_a, double r_a, double C_xi) {
  require(C_a > 0.0, ErrorKind::kOutOfRange, "C_a must be positive");
  require(r_a > 0.0, ErrorKind::kOutOfRange, "r_a must be positive");
  require(C_xi >= 0.0, ErrorKind::kOutOfRange, "noise bound must be nonnegative");
  AssumptionContract c;
  c.cls = ContractClass::kGlobal;
  c.r = r_a;
  c.C = 2.0 * C_a + 2.0 * C_xi * C_xi / (r_a * r_a);
  c.delta = 1.0;
  return c;
}

AssumptionContract lemma2_compose_params(const AssumptionContract& rel,
                                         const AssumptionContract& abs, ComposeOrder order) {
  require(rel.cls == ContractClass::kGlobal && abs.cls == ContractClass::kGlobal,
          ErrorKind::kIncompatibleContracts, "composition needs globally bounded parts");
  require(rel.delta > 0.0 && rel.delta <= 0.5, ErrorKind::kIncompatibleContracts,
          "relative part must carry a halved contraction factor");
  require(abs.delta == 1.0, ErrorKind::kIncompatibleContracts,
          "absolute part must have unit contraction factor");
  const double dr = 2.0 * rel.delta;
  const double head = (4.0 - dr) * rel.C / (4.0 - 2.0 * dr);
  AssumptionContract c;
  c.cls = ContractClass::kGlobal;
  if (order == ComposeOrder::kRelOfAbs) {
    c.r = rel.r;
    c.C = head + (4.0 - dr) * (12.0 - dr) * abs.C / (4.0 * dr);
    c.delta = dr / 8.0;
  } else {
    c.r = rel.r * abs.r;
    c.C = head + (4.0 - dr) * abs.C / (dr * rel.r * rel.r);
    c.delta = dr / 4.0;
  }
  return c;
}

double unbiased_kbit_variance_factor(int bits, int d) {
  const double dd = static_cast<double>(d);
  const double a = dd / std::ldexp(1.0, 2 * bits);
  const double b = std::sqrt(dd) / std::ldexp(1.0, bits - 1);
  return std::min(a, b);
}

AssumptionContract derive_contract(const CompressorSpec& spec, int d) {
  validate(spec, d);
  AssumptionContract c;
  switch (spec.kind) {
    case CompressorKind::kOneBit:
      c = {ContractClass::kLocal, kInf, 1.0, spec.level, 0.5};
      return c;
    case CompressorKind::kSatQuant:
      c = {ContractClass::kLocal, kInf, 1.0, spec.level, 1.0 - spec.step / (2.0 * spec.level)};
      return c;
    case CompressorKind::kTopK:
      c = {ContractClass::kLocal, 2.0, 1.0, spec.radius, static_cast<double>(spec.count) / d};
      return c;
    case CompressorKind::kNormSign:
      c = {ContractClass::kLocal, kInf, 1.0, 1.0, 0.5};
      return c;
    case CompressorKind::kNoisy:
      require(role_of(*spec.inner) != Role::kLocal && spec.inner->kind != CompressorKind::kNoisy,
              ErrorKind::kWrongClass, "noise wrapper needs a globally bounded base");
      return lemma1_form(spec, d);
    case CompressorKind::kCompose: {
      const Role ri = role_of(*spec.inner), ro = role_of(*spec.outer);
      require(ri != Role::kLocal && ro != Role::kLocal && ri != ro,
              ErrorKind::kIncompatibleContracts,
              "composition needs one relative and one absolute part");
      const AssumptionContract in = lemma1_form(*spec.inner, d);
      const AssumptionContract ou = lemma1_form(*spec.outer, d);
      if (ro == Role::kRelative) return lemma2_compose_params(ou, in, ComposeOrder::kRelOfAbs);
      return lemma2_compose_params(in, ou, ComposeOrder::kAbsOfRel);
    }
    default:
      return noise_free_global(spec, d);
  }
}

VerificationReport verify_local_assumption(const CompressorSpec& spec,
                                           const AssumptionContract& contract, int d,
                                           long samples, std::uint64_t seed) {
  validate(spec, d);
  require(contract.cls == ContractClass::kLocal, ErrorKind::kWrongClass,
          "local verification needs a local contract");
  require(samples >= 1, ErrorKind::kInvalidArgument, "need at least one sample");
  const CompressorSpec s = with_seed(spec, seed);
  const double radius = contract.C;
  const double budget = contract.C * (1.0 - contract.delta);
  CounterRng rng(seed, Stream::kVerify, 0, 0);
  std::vector<Vec> pts = boundary_points(d, contract.p, radius, rng);
  for (long t = 0; t < samples; ++t) pts.push_back(sample_in_p_ball(rng, d, contract.p, radius));

  VerificationReport rep;
  long idx = 0;
  for (const Vec& x : pts) {
    const Compressed c = compress(s, x, static_cast<std::uint64_t>(idx), 0);
    const double err = p_norm((c.q / contract.r - x).eval(), contract.p);
    double ratio;
    if (budget > 0.0) ratio = err / budget;
    else ratio = err == 0.0 ? 0.0 : kInf;
    update_ratio(rep, ratio, x);
    ++idx;
  }
  rep.points = idx;
  rep.pass = rep.max_ratio <= 1.0 + 1e-12;
  return rep;
}

VerificationReport verify_global_assumption(const CompressorSpec& spec,
                                            const AssumptionContract& contract, int d,
                                            long samples, long trials_per_sample,
                                            std::uint64_t seed) {
  validate(spec, d);
  require(contract.cls == ContractClass::kGlobal, ErrorKind::kWrongClass,
          "global verification needs a global contract");
  require(samples >= 1 && trials_per_sample >= 2, ErrorKind::kInvalidArgument,
          "need samples >= 1 and trials >= 2");
  const CompressorSpec s = with_seed(spec, seed);
  CounterRng rng(seed, Stream::kVerify, 1, 0);

  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(d));
  for (long t = 0; t < samples; ++t) {
    // Radii log-spaced over [1e-3, 1e3]; directions alternate between
    // random, axis-aligned and flat.
    const double frac = samples > 1 ? static_cast<double>(t) / (samples - 1) : 0.5;
    const double radius = std::pow(10.0, -3.0 + 6.0 * frac);
    Vec dir(d);
    switch (t % 3) {
      case 0:
        dir = uniform_in_l2_ball(rng, d, 1.0);
        break;
      case 1:
        dir = Vec::Zero(d);
        dir(static_cast<int>(rng.below(static_cast<std::uint64_t>(d)))) = 1.0;
        break;
      default:
        for (int j = 0; j < d; ++j) dir(j) = rng.uniform() < 0.5 ? -1.0 : 1.0;
        break;
    }
    pts.push_back(dir.normalized() * radius);
  }

  VerificationReport rep;
  rep.pass = true;
  long idx = 0;
  for (const Vec& x : pts) {
    double mean = 0.0, m2 = 0.0;
    for (long t = 0; t < trials_per_sample; ++t) {
      const Compressed c = compress(s, x, static_cast<std::uint64_t>(t),
                                    static_cast<std::uint64_t>(idx));
      const double e = (c.q / contract.r - x).squaredNorm();
      const double delta = e - mean;
      mean += delta / static_cast<double>(t + 1);
      m2 += delta * (e - mean);
    }
    const double var = m2 / static_cast<double>(trials_per_sample - 1);
    const double se = std::sqrt(var / static_cast<double>(trials_per_sample));
    const double bound = (1.0 - contract.delta) * x.squaredNorm() + contract.C;
    if (mean > bound * (1.0 + 1e-12) + 3.0 * se) rep.pass = false;
    double ratio;
    if (bound > 0.0) ratio = mean / bound;
    else ratio = mean == 0.0 ? 0.0 : kInf;
    update_ratio(rep, ratio, x);
    ++idx;
  }
  rep.points = idx;
  return rep;
}

}  // namespace unicomp
