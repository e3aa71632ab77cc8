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

#include "unicomp/config.hpp"
#include "unicomp/error.hpp"

namespace unicomp {
namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

TEST(Ini, SectionsCommentsAndTypes) {
  const nlohmann::json j = parse_ini(
      "# header\n"
      "; also a comment\n"
      "[a]\n"
      "x = 3\n"
      "y = 2.5  # trailing\n"
      "z = true\n"
      "w = \"quoted # not a comment\"\n"
      "inner.kind = one_bit\n"
      "inner.level = 2\n"
      "[b]\n"
      "name = ring\n");
  EXPECT_EQ(j["a"]["x"], 3);
  EXPECT_TRUE(j["a"]["x"].is_number_unsigned());
  EXPECT_DOUBLE_EQ(j["a"]["y"].get<double>(), 2.5);
  EXPECT_EQ(j["a"]["z"], true);
  EXPECT_EQ(j["a"]["w"], "quoted # not a comment");
  EXPECT_EQ(j["a"]["inner"]["kind"], "one_bit");
  EXPECT_EQ(j["a"]["inner"]["level"], 2);
  EXPECT_EQ(j["b"]["name"], "ring");
}

TEST(Ini, DuplicateKeysRejected) {
  EXPECT_THROW(parse_ini("[a]\nx = 1\nx = 2\n"), Error);
}

TEST(Config, IniAndJsonAgree) {
  const RunConfig a = parse_config(
      "[problem]\nfamily = nonconvex\nd = 6\n[graph]\ntopology = path\nn = 5\n"
      "[compressor]\nkind = sat_quant\nlevel = 3\nstep = 0.5\n"
      "[algorithm]\nmode = empirical\nT = 40\nalpha = 0.01\nschedule = constant\ns0 = 2\n");
  const RunConfig b = parse_config(R"({
    "problem": {"family": "nonconvex", "d": 6},
    "graph": {"topology": "path", "n": 5},
    "compressor": {"kind": "sat_quant", "level": 3, "step": 0.5},
    "algorithm": {"mode": "empirical", "T": 40, "alpha": 0.01, "schedule": "constant", "s0": 2}
  })");
  for (const RunConfig* c : {&a, &b}) {
    EXPECT_EQ(c->problem.family, "nonconvex");
    EXPECT_EQ(c->problem.d, 6);
    EXPECT_EQ(c->graph.topology.kind, Topology::kPath);
    EXPECT_EQ(c->graph.n, 5);
    EXPECT_EQ(c->compressor.spec.kind, CompressorKind::kSatQuant);
    EXPECT_EQ(c->compressor.spec.level, 3.0);
    EXPECT_EQ(c->compressor.spec.step, 0.5);
    EXPECT_FALSE(c->algorithm.theoretical);
    EXPECT_EQ(c->algorithm.T, 40);
    EXPECT_EQ(*c->algorithm.alpha, 0.01);
    EXPECT_EQ(*c->algorithm.schedule, ScalingSchedule::Mode::kConstant);
  }
}

TEST(Config, NestedCompressors) {
  const RunConfig c = parse_config(
      "[compressor]\nkind = compose\ninner.kind = unbiased_kbit\ninner.bits = 3\n"
      "outer.kind = one_bit\nouter.level = 2\ninner_divisor = 2\n");
  ASSERT_EQ(c.compressor.spec.kind, CompressorKind::kCompose);
  EXPECT_EQ(c.compressor.spec.inner->kind, CompressorKind::kUnbiasedKBit);
  EXPECT_EQ(c.compressor.spec.inner->bits, 3);
  EXPECT_EQ(c.compressor.spec.outer->level, 2.0);
  EXPECT_EQ(c.compressor.spec.inner_divisor, 2.0);
  const RunConfig n = parse_config("[compressor]\nkind = rand_k\nk = 2\nnoise = 0.1\n");
  ASSERT_EQ(n.compressor.spec.kind, CompressorKind::kNoisy);
  EXPECT_EQ(n.compressor.spec.inner->kind, CompressorKind::kRandK);
  EXPECT_EQ(n.compressor.spec.noise, 0.1);
}

TEST(Config, ContractOverrides) {
  const RunConfig c = parse_config(
      "[problem]\nd = 4\n[compressor]\nkind = one_bit\ncontract.p = \"inf\"\n"
      "contract.delta = 0.25\n");
  const AssumptionContract ct = effective_contract(c.compressor, 4);
  EXPECT_EQ(ct.cls, ContractClass::kLocal);
  EXPECT_TRUE(std::isinf(ct.p));
  EXPECT_EQ(ct.delta, 0.25);
}

TEST(Config, Errors) {
  EXPECT_EQ(kind_of("[problem]\nbogus = 1\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[nosuch]\nx = 1\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[problem]\nfamily = cubic\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[graph]\ntopology = star\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[compressor]\nkind = top_k\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[algorithm]\nmode = theoretical\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[algorithm]\nmode = fast\n"), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("{\"problem\": "), ErrorKind::kConfigError);
  EXPECT_EQ(kind_of("[problem]\nd = \"four\"\n"), ErrorKind::kConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.ini"), Error);
}

TEST(Prepare, EmpiricalDefaults) {
  const RunConfig c = parse_config(
      "[graph]\nn = 5\n[problem]\nd = 3\n[compressor]\nkind = one_bit\n"
      "[algorithm]\nT = 30\nseed = 4\n");
  const Experiment ex = prepare(c);
  EXPECT_EQ(ex.graph.n, 5);
  EXPECT_EQ(ex.problem->d(), 3);
  EXPECT_EQ(ex.options.T, 30);
  EXPECT_EQ(ex.x0.rows(), 5);
  EXPECT_GT(ex.params.hyper.alpha, 0.0);
  EXPECT_LT(ex.params.hyper.alpha, ex.params.table.at("kappa0_hat"));
  EXPECT_GT(ex.params.hyper.gamma, ex.params.table.at("kappa2"));
  // Default s0 keeps every x_i0 inside the region.
  EXPECT_GE(ex.params.hyper.schedule.s0 * ex.contract.C,
            ex.x0.cwiseAbs().maxCoeff() * (1 - 1e-12));
  EXPECT_EQ(prepare(c, 77).options.T, 77);
}

TEST(Prepare, OverridesApplied) {
  const RunConfig c = parse_config(
      "[problem]\nd = 3\n[compressor]\nkind = one_bit\n"
      "[algorithm]\nalpha = 0.02\ngamma = 1.5\ntau1 = 2\nschedule = geometric\nrate = 0.9\n"
      "s0 = 10\ninit_mode = shared_x0\n");
  const Experiment ex = prepare(c);
  const HyperParams& h = ex.params.hyper;
  EXPECT_EQ(h.alpha, 0.02);
  EXPECT_EQ(h.gamma, 1.5);
  EXPECT_EQ(h.beta, 3.0);
  EXPECT_EQ(h.schedule.mode, ScalingSchedule::Mode::kGeometric);
  EXPECT_EQ(h.schedule.rate, 0.9);
  EXPECT_EQ(h.schedule.s0, 10.0);
  EXPECT_EQ(ex.options.init_mode, InitMode::kSharedX0);
  EXPECT_EQ(ex.x0.row(0), ex.x0.row(1));
}

TEST(Prepare, OmegaAboveInverseRadiusRejected) {
  const RunConfig c = parse_config(
      "[problem]\nd = 16\n[compressor]\nkind = unbiased_kbit\nbits = 2\n[algorithm]\nomega = 1\n");
  try {
    prepare(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleParams);
  }
}

TEST(Prepare, ExactFirstRoundDefaultForT2) {
  const RunConfig c = parse_config(
      "[problem]\nfamily = nonconvex\nd = 3\n[compressor]\nkind = one_bit\n"
      "[algorithm]\nregime = T2_local_exact_first\nT = 50\n");
  EXPECT_EQ(prepare(c).options.init_mode, InitMode::kExactFirstRound);
}

TEST(Prepare, TheoreticalEnforcement) {
  const std::string base =
      "[graph]\nn = 6\n[problem]\nd = 3\n[compressor]\nkind = one_bit\n"
      "[algorithm]\nmode = theoretical\nregime = T3_local_PL\n";
  EXPECT_TRUE(prepare(parse_config(base)).params.feasible());
  try {
    prepare(parse_config(base + "gamma = 1\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleParams);
  }
  const Experiment lax = prepare(parse_config(base + "gamma = 1\nenforce = false\n"));
  EXPECT_FALSE(lax.params.feasible());
}

TEST(Prepare, ZeroSizedGraphIsConfigError) {
  try {
    prepare(parse_config("[graph]\nn = 1\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfigError);
  }
}

}  // namespace
}  // namespace unicomp
