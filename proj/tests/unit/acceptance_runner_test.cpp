// Copyright 2026 The isingcn Authors
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

#include "isingcn/acceptance.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "isingcn/errors.hpp"

namespace isingcn {
namespace {

const AcceptanceCheck* find(const AcceptanceSummary& s, const std::string& name) {
  const auto it = std::find_if(s.checks.begin(), s.checks.end(), [&](const AcceptanceCheck& c) { return c.name == name; });
  return it == s.checks.end() ? nullptr : &*it;
}

TEST(RunAcceptance, ReferenceParametersPass) {
  const AcceptanceSummary summary = run_acceptance({});
  for (const auto& c : summary.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.measured << " " << c.detail;
  EXPECT_TRUE(summary.passed());
  EXPECT_EQ(summary.checks.size(), 14u);
  EXPECT_LT(summary.wall_seconds, 60.0);

  const auto json = summary.to_json();
  EXPECT_EQ(json["passed"], true);
  EXPECT_EQ(json["checks"].size(), summary.checks.size());
}

TEST(RunAcceptance, UncoupledMoleculeFailsWithAttribution) {
  AcceptanceOptions options;
  options.system.j_coupling = 0.0;
  options.system.rf_freq = 100.0;
  const AcceptanceSummary summary = run_acceptance(options);
  EXPECT_FALSE(summary.passed());
  const auto* k2 = find(summary, "truth_table k=2");
  ASSERT_NE(k2, nullptr);
  EXPECT_FALSE(k2->passed);
  EXPECT_GT(k2->measured, 0.9);
  const auto failures = summary.failures();
  EXPECT_TRUE(std::any_of(failures.begin(), failures.end(), [](const AcceptanceCheck* c) { return c->name == "truth_table k=2"; }));
  EXPECT_TRUE(find(summary, "zero-field spectrum")->passed);
}

TEST(RunAcceptance, RejectsZeroStepBeforeRunning) {
  AcceptanceOptions options;
  options.dt = 0.0;
  EXPECT_THROW(run_acceptance(options), ConfigError);
  options = {};
  options.system.rabi = 0.0;
  EXPECT_THROW(run_acceptance(options), ConfigError);
}

}  // namespace
}  // namespace isingcn
