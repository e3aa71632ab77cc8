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
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "unicomp/commands.hpp"

namespace unicomp {
namespace {
namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("unicomp_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
    opts_.output_root = (root_ / "out").string();
  }
  void TearDown() override { fs::remove_all(root_); }

  std::string write(const std::string& name, const std::string& body) {
    const fs::path p = root_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  fs::path root_;
  CommandOptions opts_;
  std::ostringstream out_, err_;
};

const char* kSmall =
    "[graph]\nn = 4\n[problem]\nd = 3\n[compressor]\nkind = one_bit\n"
    "[algorithm]\nT = 20\nseed = 2\n[output]\ndirectory = small\n";

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorKind::kInfeasibleParams), 3);
  EXPECT_EQ(exit_code_for(ErrorKind::kNonFiniteState), 4);
  EXPECT_EQ(exit_code_for(ErrorKind::kNumericalFailure), 4);
  EXPECT_EQ(exit_code_for(ErrorKind::kConfigError), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::kOutputExists), 2);
}

TEST_F(CommandsTest, RunWritesOutputsOnce) {
  const std::string cfg = write("small.ini", kSmall);
  ASSERT_EQ(cmd_run(cfg, opts_, out_, err_), kExitOk) << err_.str();
  const fs::path dir = root_ / "out" / "small";
  for (const char* f : {"summary.json", "trace.csv", "trace_k.svg", "trace_bits.svg"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  const auto summary = nlohmann::json::parse(out_.str());
  EXPECT_EQ(summary["T"], 20);
  EXPECT_EQ(summary["mode"], "empirical");
  EXPECT_EQ(summary["checks"]["region_violations"], 0);

  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_run(cfg, opts_, out2, err2), kExitConfig);
  EXPECT_NE(err2.str().find("OutputExists"), std::string::npos);
  opts_.force = true;
  std::ostringstream out3, err3;
  EXPECT_EQ(cmd_run(cfg, opts_, out3, err3), kExitOk);
}

TEST_F(CommandsTest, RunIsReproducible) {
  const std::string cfg = write("small.ini", kSmall);
  opts_.force = true;
  ASSERT_EQ(cmd_run(cfg, opts_, out_, err_), kExitOk);
  std::ifstream a(root_ / "out" / "small" / "trace.csv");
  const std::string first((std::istreambuf_iterator<char>(a)), {});
  ASSERT_EQ(cmd_run(cfg, opts_, out_, err_), kExitOk);
  std::ifstream b(root_ / "out" / "small" / "trace.csv");
  const std::string second((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(first, second);
}

TEST_F(CommandsTest, InfeasibleTheoreticalRun) {
  const std::string cfg = write(
      "bad.ini",
      "[graph]\nn = 6\n[problem]\nd = 3\n[compressor]\nkind = one_bit\n"
      "[algorithm]\nmode = theoretical\nregime = T3_local_PL\ngamma = 1\n");
  EXPECT_EQ(cmd_run(cfg, opts_, out_, err_), kExitInfeasible);
  EXPECT_NE(err_.str().find("gamma below kappa_2"), std::string::npos);
}

TEST_F(CommandsTest, DivergenceExitCode) {
  const std::string cfg = write(
      "div.ini",
      "[graph]\nn = 4\n[problem]\nd = 3\n[compressor]\nkind = identity\n"
      "[algorithm]\nT = 5000\nalpha = 50\ngamma = 1\ntau1 = 1\nschedule = constant\ns0 = 1\n");
  EXPECT_EQ(cmd_run(cfg, opts_, out_, err_), kExitDivergence);
}

TEST_F(CommandsTest, MissingConfig) {
  EXPECT_EQ(cmd_run((root_ / "none.ini").string(), opts_, out_, err_), kExitConfig);
  EXPECT_EQ(err_.str().rfind("error ConfigError", 0), 0u);
}

TEST_F(CommandsTest, SweepUsesInjectedMetric) {
  const std::string cfg = write("small.ini", kSmall);
  opts_.injected_metric = [](long T) { return 7.0 / std::sqrt(static_cast<double>(T)); };
  const SweepResult r = sweep(load_config(cfg), {400, 100, 1600}, opts_);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows.front().T, 100);
  EXPECT_NEAR(r.fit.slope, -0.5, 1e-12);
  EXPECT_THROW(sweep(load_config(cfg), {100, 400}, opts_), Error);
  EXPECT_THROW(sweep(load_config(cfg), {100, 100, 400}, opts_), Error);
}

TEST_F(CommandsTest, SweepCommandWritesFiles) {
  const std::string cfg = write("small.ini", kSmall);
  ASSERT_EQ(cmd_sweep(cfg, {10, 20, 40}, opts_, out_, err_), kExitOk) << err_.str();
  for (const char* f : {"sweep.csv", "sweep.json", "sweep.svg"})
    EXPECT_TRUE(fs::exists(root_ / "out" / "small" / f)) << f;
}

TEST_F(CommandsTest, VerifyPassAndFail) {
  const std::string good = write(
      "good.ini", "[problem]\nd = 4\n[compressor]\nkind = one_bit\nverify_samples = 2000\n");
  EXPECT_EQ(cmd_verify(good, opts_, out_, err_), kExitOk) << err_.str();
  const std::string bad = write(
      "bad.ini",
      "[problem]\nd = 4\n[compressor]\nkind = one_bit\ncontract.delta = 1\nverify_samples = 2000\n");
  std::ostringstream o, e;
  EXPECT_EQ(cmd_verify(bad, opts_, o, e), kExitVerifyFailed);
  EXPECT_FALSE(nlohmann::json::parse(o.str())["pass"].get<bool>());
}

TEST_F(CommandsTest, ParamsReportsConstants) {
  const std::string cfg = write(
      "p.ini",
      "[graph]\ntopology = path\nn = 3\n[problem]\nd = 2\n[compressor]\nkind = one_bit\n");
  ASSERT_EQ(cmd_params(cfg, opts_, out_, err_), kExitOk) << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_NEAR(j["graph"]["rho2"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["constants"]["kappa1"].get<double>(), 4.0, 1e-12);
  EXPECT_TRUE(j["constants"].contains("kappa5"));
}

TEST_F(CommandsTest, OutputRootFromEnvironment) {
  RunConfig c;
  c.output.directory = "rel";
  CommandOptions none;
  setenv("UNICOMP_OUTPUT_ROOT", "/tmp/envroot", 1);
  EXPECT_EQ(output_directory(c, none), "/tmp/envroot/rel");
  EXPECT_EQ(output_directory(c, opts_), (root_ / "out" / "rel").string());
  unsetenv("UNICOMP_OUTPUT_ROOT");
  c.output.directory = "/abs/dir";
  EXPECT_EQ(output_directory(c, opts_), "/abs/dir");
}

TEST_F(CommandsTest, CliBinaryExitCodes) {
  const char* cli = std::getenv("UNICOMP_CLI");
  if (!cli) GTEST_SKIP() << "UNICOMP_CLI not set";
  const std::string cfg = write("small.ini", kSmall);
  const std::string base = std::string(cli) + " --output-root " + (root_ / "cli").string();
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status(base + " run " + cfg), 0);
  EXPECT_EQ(status(base + " run " + cfg), 2);
  EXPECT_EQ(status(base + " run " + cfg + " --force"), 0);
  EXPECT_EQ(status(base + " params " + cfg), 0);
  EXPECT_EQ(status(base + " verify " + cfg), 0);
  EXPECT_EQ(status(base + " sweep " + cfg + " --horizons 10 20 40"), 0);
  EXPECT_NE(status(base + " sweep " + cfg + " --horizons 10 20"), 0);
  EXPECT_NE(status(std::string(cli)), 0);
}

}  // namespace
}  // namespace unicomp
