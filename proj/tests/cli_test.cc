// Copyright 2026 The wignerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + WIGNERLAB_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Cli, VerifyAutomorphism) {
  EXPECT_EQ(run("verify-automorphism --circuit u2 --L 100").code, 0);
  EXPECT_EQ(run("verify-automorphism --circuit u-gauged --L 16").code, 0);
  EXPECT_EQ(run("verify-automorphism --circuit u1 --L 1").code, 2);
  EXPECT_EQ(run("verify-automorphism --circuit u9").code, 2);
}

TEST(Cli, EachCommandPassesAtThreeSites) {
  for (const char* cmd : {"commutators", "transition-check", "polar", "gauge-equivalence", "full-suite"}) {
    EXPECT_EQ(run(std::string(cmd) + " --L 3 --seed 7").code, 0) << cmd;
    EXPECT_EQ(run(std::string(cmd) + " --L 3 --sign -").code, 0) << cmd;
  }
  EXPECT_EQ(run("spectrum --model h1 --L 2").code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("polar --sign x").code, 2);
  EXPECT_EQ(run("polar --format xml").code, 2);
  EXPECT_EQ(run("polar --L abc").code, 2);
  EXPECT_EQ(run("spectrum --L 3").code, 2);
  EXPECT_EQ(run("spectrum --model h1 --L 99").code, 2);
  EXPECT_EQ(run("polar --inject-fault flip-boundary-sign").code, 2);
  EXPECT_EQ(run("polar", "WIGNERLAB_DENSE_CAP=zero").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, FaultInjectionExitsOne) {
  EXPECT_EQ(run("full-suite --L 3 --inject-fault flip-boundary-sign").code, 1);
  EXPECT_EQ(run("full-suite --L 3 --inject-fault nontrivial-projector").code, 1);
}

TEST(Cli, DenseCapEnvironment) {
  const CliRun r = run("full-suite --L 4 --format json", "WIGNERLAB_DENSE_CAP=4");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["dense_cap"], 4);
  bool skipped = false;
  for (const auto& rec : j["records"]) skipped |= rec["status"] == "skipped";
  EXPECT_TRUE(skipped);
}

TEST(Cli, JsonOutputToFile) {
  const std::string path = testing::TempDir() + "wignerlab_report.json";
  ASSERT_EQ(run("polar --L 3 --format json --out " + path).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "polar");
  EXPECT_EQ(j["data"]["polar"]["rank"], 8);
  EXPECT_EQ(j["data"]["polar"]["invertible"], false);
  EXPECT_TRUE(j["timing"].contains("timestamp"));
}

TEST(Cli, SpectrumCsv) {
  const CliRun r = run("spectrum --model h-min-gauged --L 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, DeterministicJson) {
  auto a = nlohmann::json::parse(run("full-suite --L 3 --seed 11 --format json").out);
  auto b = nlohmann::json::parse(run("full-suite --L 3 --seed 11 --format json").out);
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, PolarDump) {
  const std::string path = testing::TempDir() + "wignerlab_dhat.bin";
  ASSERT_EQ(run("polar --L 2 --dump " + path).code, 0);
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  EXPECT_EQ(static_cast<size_t>(in.tellg()), 16u + 8 * 8 * 16);
}
