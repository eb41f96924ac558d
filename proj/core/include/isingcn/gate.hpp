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

#include <optional>
#include <string>
#include <vector>

#include "isingcn/evolution.hpp"
#include "isingcn/operators.hpp"
#include "isingcn/states.hpp"

namespace isingcn {

// Within the active states |00ij>, spin 1 is the control and spin 0 the
// target. Qubit value 1 is the spin ground state, so the target flips when
// the control spin is in state 0.
inline constexpr int kControlSpin = 1;
inline constexpr int kTargetSpin = 0;

// Frequency of the transition that flips `target` while every other spin
// keeps its state from `background`: w_target + 2J sum_{b != target} s_b,
// with s_b = +1/2 for state 0 and -1/2 for state 1.
double transition_frequency(const SpinSystemConfig& cfg, int target, BasisIndex background);

// Transition frequency of `target` with all other spins in the ground state,
// w_target + (n_spins - 1) J.
double cn_resonance_frequency(const SpinSystemConfig& cfg, int target = kTargetSpin);

// Ideal CN action on the active block: indices 0 and 1 exchanged, 2 and 3
// untouched. Only the diagonal is a prediction; the pi-pulse gate carries an
// extra phase the coherences do not account for.
ActiveBlock cn_expected_final(const ActiveBlock& initial);

struct GateTolerances {
  double active = 1e-2;
  double passive = 1e-3;
};

struct GateReport {
  std::string initial_label;
  std::vector<double> initial_populations;
  std::vector<double> final_populations;
  std::vector<double> expected_populations;
  Eigen::Matrix4cd final_active;  // recorded, not checked
  double max_passive_drift = 0.0;  // max |dr_nn| over passive states 4..15
  double active_error = 0.0;       // max |r_nn(T) - expected| over 0..3
  GateTolerances tolerances;
  bool passed = false;
};

struct GateRunOptions {
  StepOptions step;
  GateTolerances tolerances;
  // Pulse length; pi / rabi when unset.
  std::optional<double> duration;
  // Run even if rf_freq is off the CN resonance.
  bool allow_off_resonance = false;
  std::string label;
};

struct GateRun {
  GateReport report;
  Trajectory trajectory;
};

// Prepares the ensemble with `initial_active`, applies one rectangular pulse
// and grades the final populations against cn_expected_final (active states)
// and the initial values (passive states).
GateRun run_cn_gate(const SpinSystemConfig& cfg, const ActiveBlock& initial_active,
                    const GateRunOptions& options = {});

// Runs the four digital initial conditions k = 0..3 (concurrently). A failure
// in any run is rethrown with the offending k attached.
std::vector<GateReport> truth_table_suite(const SpinSystemConfig& cfg, const GateRunOptions& options = {});

}  // namespace isingcn
