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

#include "wignerlab/errors.h"
#include "wignerlab/suite.h"

namespace wl = wignerlab;
using wl::CheckStatus;
using wl::RunConfig;

namespace {

RunConfig config(std::string command, size_t L = 3) {
  RunConfig c;
  c.command = std::move(command);
  c.L = L;
  c.seed = 7;
  return c;
}

CheckStatus status_of(const wl::Report& r, const std::string& name) {
  for (const auto& rec : r.records)
    if (rec.name == name) return rec.status;
  ADD_FAILURE() << "no record " << name;
  return CheckStatus::kSkipped;
}

}  // namespace

TEST(RunConfig, JsonRoundTrip) {
  RunConfig c = config("spectrum");
  c.model = "h-min-gauged";
  c.sign = -1;
  c.tol_scale = 2.5;
  c.format = wl::OutputFormat::kCsv;
  c.out_path = "/tmp/x.csv";
  const RunConfig back = RunConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.sign, -1);
  EXPECT_EQ(back.format, wl::OutputFormat::kCsv);
}

TEST(RunConfig, RejectsInvalidCombinations) {
  EXPECT_THROW(config("nope").validate(), wl::UsageError);
  EXPECT_THROW(config("polar", 1).validate(), wl::UsageError);
  EXPECT_THROW(config("spectrum").validate(), wl::UsageError);  // no model
  RunConfig c = config("verify-automorphism");
  c.circuit = "u7";
  EXPECT_THROW(c.validate(), wl::UsageError);
  c = config("polar");
  c.fault = wl::Fault::kFlipBoundarySign;
  EXPECT_THROW(c.validate(), wl::UsageError);
  c = config("polar");
  c.tol_scale = 0;
  EXPECT_THROW(c.validate(), wl::UsageError);
  EXPECT_THROW(wl::parse_output_format("xml"), wl::UsageError);
  EXPECT_THROW(wl::parse_fault("melt"), wl::UsageError);
}

TEST(Report, DeterministicApartFromTiming) {
  auto a = wl::run_command(config("full-suite")).to_json();
  auto b = wl::run_command(config("full-suite")).to_json();
  ASSERT_TRUE(a.contains("timing"));
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 7);
  EXPECT_TRUE(a.contains("artifact_version"));
}

TEST(Report, FullSuitePassesAtThreeSites) {
  const auto r = wl::run_command(config("full-suite"));
  for (const auto& rec : r.records) EXPECT_EQ(rec.status, CheckStatus::kPass) << rec.name;
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, FailuresCarryMeasuredValues) {
  RunConfig c = config("full-suite");
  c.fault = wl::Fault::kNontrivialProjector;
  const auto r = wl::run_command(c);
  for (const auto& rec : r.records)
    if (rec.status == CheckStatus::kFail) EXPECT_TRUE(rec.measured.has_value()) << rec.name;
}

TEST(FaultInjection, BoundarySignFlipIsDetected) {
  RunConfig c = config("full-suite");
  c.fault = wl::Fault::kFlipBoundarySign;
  const auto r = wl::run_command(c);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(status_of(r, "commutator_h_plus_d_plus"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "symbolic_h_plus_commutes_d_plus"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "sector_block_plus"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "commutator_h_minus_d_minus"), CheckStatus::kPass);
}

TEST(FaultInjection, NontrivialProjectorIsDetected) {
  RunConfig c = config("full-suite");
  c.fault = wl::Fault::kNontrivialProjector;
  const auto r = wl::run_command(c);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(status_of(r, "preservation_d_hat_linear"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "preservation_d_hat_antilinear"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "theorem_block_identity"), CheckStatus::kFail);
  EXPECT_EQ(status_of(r, "counterexample_random_pairs"), CheckStatus::kPass);
}

TEST(Caps, LargeChainSkipsDenseChecks) {
  const auto r = wl::run_command(config("full-suite", 12));
  size_t skipped = 0;
  for (const auto& rec : r.records) {
    EXPECT_NE(rec.status, CheckStatus::kFail) << rec.name;
    skipped += rec.status == CheckStatus::kSkipped;
  }
  EXPECT_GT(skipped, 0u);
  EXPECT_EQ(status_of(r, "spectral_equivalence"), CheckStatus::kSkipped);
  EXPECT_EQ(status_of(r, "automorphism_u2"), CheckStatus::kPass);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Spectrum, OpenChainTwoSites) {
  RunConfig c = config("spectrum", 2);
  c.model = "h1";
  const auto r = wl::run_command(c);
  ASSERT_TRUE(r.eigenvalues.has_value());
  ASSERT_EQ(r.eigenvalues->size(), 4u);
  EXPECT_NEAR((*r.eigenvalues)[0], -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR((*r.eigenvalues)[3], std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.to_csv().substr(0, 17), "index,eigenvalue\n");
}

TEST(Spectrum, GaugedInterleavesTwistedSpectra) {
  RunConfig c = config("spectrum", 3);
  c.model = "h-min-gauged";
  const auto g = *wl::run_command(c).eigenvalues;
  c.model = "h-periodic";
  auto both = *wl::run_command(c).eigenvalues;
  c.model = "h-antiperiodic";
  const auto m = *wl::run_command(c).eigenvalues;
  both.insert(both.end(), m.begin(), m.end());
  std::sort(both.begin(), both.end());
  ASSERT_EQ(g.size(), 16u);
  for (size_t i = 0; i < 16; ++i) EXPECT_NEAR(g[i], both[i], 1e-10);
}

TEST(Spectrum, CapError) {
  RunConfig c = config("spectrum", 99);
  c.model = "h1";
  EXPECT_THROW(wl::run_command(c), wl::DimensionCapExceeded);
}

TEST(Output, FormatsRender) {
  const auto r = wl::run_command(config("verify-automorphism", 5));
  EXPECT_NE(r.render(wl::OutputFormat::kText).find("[PASS] automorphism_u2"), std::string::npos);
  EXPECT_NE(r.render(wl::OutputFormat::kCsv).find("automorphism_u2,pass,0,0,=="), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(r.render(wl::OutputFormat::kJson))["records"][0]["status"], "pass");
}
