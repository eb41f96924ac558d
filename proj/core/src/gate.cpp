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

#include "isingcn/gate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "isingcn/errors.hpp"

namespace isingcn {

namespace {

constexpr double kResonanceTolerance = 1e-9;

}  // namespace

double transition_frequency(const SpinSystemConfig& cfg, int target, BasisIndex background) {
  cfg.validate();
  if (target < 0 || target >= cfg.n_spins) {
    throw ConfigError("target spin " + std::to_string(target) + " out of range");
  }
  double field = 0.0;
  for (int b = 0; b < cfg.n_spins; ++b) {
    if (b == target) continue;
    field += background.spin_state(b) == 0 ? 0.5 : -0.5;
  }
  return cfg.omega[static_cast<std::size_t>(target)] + 2.0 * cfg.j_coupling * field;
}

double cn_resonance_frequency(const SpinSystemConfig& cfg, int target) {
  return transition_frequency(cfg, target, BasisIndex{0});
}

ActiveBlock cn_expected_final(const ActiveBlock& initial) {
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Identity();
  swap(0, 0) = 0.0;
  swap(1, 1) = 0.0;
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  return ActiveBlock{swap * initial.matrix() * swap};
}

GateRun run_cn_gate(const SpinSystemConfig& cfg, const ActiveBlock& initial_active, const GateRunOptions& options) {
  cfg.validate();
  if (!options.allow_off_resonance) {
    const double resonance = cn_resonance_frequency(cfg);
    if (std::abs(cfg.rf_freq - resonance) > kResonanceTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "rf_freq " << cfg.rf_freq << " is off the CN resonance " << resonance;
      throw ConfigError(msg.str());
    }
  }
  const double duration = options.duration ? *options.duration : pi_pulse_duration(cfg.rabi);

  const OperatorMatrix h = build_hamiltonian(cfg);
  const DeviationMatrix rho0 = thermal_deviation(cfg, initial_active);

  GateRun run;
  run.trajectory = evolve_step(h, rho0, duration, options.step);

  GateReport& report = run.report;
  report.initial_label = options.label;
  report.tolerances = options.tolerances;
  report.initial_populations = populations(rho0);
  report.final_populations = populations(run.trajectory.final_state);
  report.final_active = run.trajectory.final_state.matrix().topLeftCorner<4, 4>();

  const auto expected_active = cn_expected_final(initial_active).diagonal();
  report.expected_populations = report.initial_populations;
  std::copy(expected_active.begin(), expected_active.end(), report.expected_populations.begin());

  for (std::size_t n = 0; n < report.final_populations.size(); ++n) {
    const double err = std::abs(report.final_populations[n] - report.expected_populations[n]);
    if (n < 4) {
      report.active_error = std::max(report.active_error, err);
    } else {
      report.max_passive_drift = std::max(report.max_passive_drift, err);
    }
  }
  report.passed = report.active_error <= report.tolerances.active &&
                  report.max_passive_drift <= report.tolerances.passive;
  return run;
}

std::vector<GateReport> truth_table_suite(const SpinSystemConfig& cfg, const GateRunOptions& options) {
  std::vector<std::future<GateReport>> pending;
  for (int k = 0; k < 4; ++k) {
    pending.push_back(std::async(std::launch::async, [&cfg, options, k] {
      GateRunOptions local = options;
      local.label = "digital k=" + std::to_string(k);
      return run_cn_gate(cfg, digital_active(k), local).report;
    }));
  }
  std::vector<GateReport> reports;
  for (int k = 0; k < 4; ++k) {
    try {
      reports.push_back(pending[static_cast<std::size_t>(k)].get());
    } catch (const ConfigError& e) {
      throw ConfigError("truth table k=" + std::to_string(k) + ": " + e.what());
    } catch (const NumericalError& e) {
      throw NumericalError("truth table k=" + std::to_string(k) + ": " + e.what());
    }
  }
  return reports;
}

}  // namespace isingcn
