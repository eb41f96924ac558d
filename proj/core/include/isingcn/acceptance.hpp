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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isingcn/operators.hpp"

namespace isingcn {

struct AcceptanceCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct AcceptanceSummary {
  std::vector<AcceptanceCheck> checks;
  double wall_seconds = 0.0;

  bool passed() const;
  std::vector<const AcceptanceCheck*> failures() const;
  nlohmann::json to_json() const;
};

struct AcceptanceOptions {
  SpinSystemConfig system = SpinSystemConfig::reference();
  double dt = 1e-3;
  std::size_t sample_stride = 500;
};

// System parameters and dt from a config file (same format as experiment
// configs); reference defaults when no path is given.
AcceptanceOptions load_acceptance_options(const std::optional<std::filesystem::path>& config);

// Digital truth table, superposition run, zero-field spectrum, Hamiltonian
// structure, step-vs-exact agreement, RK4 convergence order, conservation
// laws and the Rabi midpoint. Throws ConfigError before running anything if
// the options are invalid.
AcceptanceSummary run_acceptance(const AcceptanceOptions& options);

}  // namespace isingcn
