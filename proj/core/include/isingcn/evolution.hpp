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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "isingcn/operators.hpp"
#include "isingcn/states.hpp"

namespace isingcn {

// Rectangular RF pulse. During the pulse the rotating-frame Hamiltonian is
// constant.
struct PulseSpec {
  double rf_freq = 0.0;
  double rabi = 0.0;
  double duration = 0.0;

  void validate() const;
};

// pi / rabi. Throws ConfigError for rabi <= 0.
double pi_pulse_duration(double rabi);

// Resonant pi-pulse with the frequency and amplitude of `cfg`.
PulseSpec pi_pulse(const SpinSystemConfig& cfg);

// Copy of `cfg` driven by `pulse`.
SpinSystemConfig with_pulse(SpinSystemConfig cfg, const PulseSpec& pulse);

// Frame in which the RK4 stepper integrates i d(rho)/dt = [H, rho].
enum class StepFrame {
  // Free precession under diag(H) is applied in closed form; RK4 only
  // integrates the off-diagonal drive. Default.
  kInteraction,
  // Classic RK4 directly on the rotating-frame equation.
  kRotating,
};

struct StepOptions {
  double dt = 1e-3;
  std::size_t sample_stride = 500;
  StepFrame frame = StepFrame::kInteraction;
};

// Sampled trajectory. times[0] = 0 and the last time is the pulse duration.
struct TimeSeries {
  std::vector<double> times;
  std::vector<std::vector<double>> populations;  // all dim r_nn per sample
  std::vector<Complex> i_plus;

  std::size_t size() const { return times.size(); }
  void append(double t, const DeviationMatrix& rho);
};

struct Trajectory {
  TimeSeries series;
  DeviationMatrix final_state;
  std::size_t steps = 0;
  double step_size = 0.0;
};

// Fixed-step 4th-order Runge-Kutta integration of the dim^2 equations of
// motion for the deviation matrix over `duration`. The step is shrunk so that
// an integer number of steps lands exactly on `duration`. Samples every
// `sample_stride` steps plus the final state.
//
// Throws ConfigError for non-Hermitian H, dt <= 0, duration <= 0, stride 0
// or mismatched dimensions; PropagationError if the state stops being finite.
Trajectory evolve_step(const OperatorMatrix& h, const DeviationMatrix& rho0, double duration,
                       const StepOptions& options = {});

// U(t) = exp(-iHt) from one Hermitian eigendecomposition of H.
class ExactPropagator {
 public:
  explicit ExactPropagator(const OperatorMatrix& h);

  // U rho U^dagger. t = 0 returns rho unchanged.
  DeviationMatrix evolve(const DeviationMatrix& rho, double t) const;
  OperatorMatrix unitary(double t) const;

  const Eigen::VectorXd& eigenvalues() const { return energies_; }

 private:
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

DeviationMatrix evolve_exact(const OperatorMatrix& h, const DeviationMatrix& rho0, double t);

// Tr{I^+ rho} with I^+ = sum_a I^+_a.
Complex measure_i_plus(const DeviationMatrix& rho);

// Diagonal r_nn. Throws NumericalError if any diagonal entry carries an
// imaginary part above 1e-8.
std::vector<double> populations(const DeviationMatrix& rho);

}  // namespace isingcn
