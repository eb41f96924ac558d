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

#include "isingcn/evolution.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "isingcn/errors.hpp"
#include "oracles.hpp"

namespace isingcn {
namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Two spins, well separated, so unit tests on the integrator stay fast.
SpinSystemConfig two_spin_config() {
  SpinSystemConfig cfg;
  cfg.n_spins = 2;
  cfg.omega = {100.0, 200.0};
  cfg.j_coupling = 10.0;
  cfg.rabi = 0.5;
  cfg.rf_freq = 110.0;  // w_0 + J: spin 0 flips with spin 1 in the ground state
  return cfg;
}

DeviationMatrix ground_projector(Eigen::Index dim) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
  r(0, 0) = 1.0;
  return DeviationMatrix{r};
}

class ReferenceRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto cfg = SpinSystemConfig::reference();
    h_ = new OperatorMatrix(build_hamiltonian(cfg));
    rho0_ = new DeviationMatrix(thermal_deviation(cfg, digital_active(0)));
    period_ = pi_pulse_duration(cfg.rabi);
    run_ = new Trajectory(evolve_step(*h_, *rho0_, period_));
  }
  static void TearDownTestSuite() {
    delete h_;
    delete rho0_;
    delete run_;
  }

  static OperatorMatrix* h_;
  static DeviationMatrix* rho0_;
  static Trajectory* run_;
  static double period_;
};

OperatorMatrix* ReferenceRun::h_ = nullptr;
DeviationMatrix* ReferenceRun::rho0_ = nullptr;
Trajectory* ReferenceRun::run_ = nullptr;
double ReferenceRun::period_ = 0.0;

TEST(PiPulseDuration, InverseRabi) {
  EXPECT_NEAR(pi_pulse_duration(0.1), 31.41592653589793, 1e-12);
  EXPECT_DOUBLE_EQ(pi_pulse_duration(kPi), 1.0);
  EXPECT_DOUBLE_EQ(pi_pulse_duration(0.2), 0.5 * pi_pulse_duration(0.1));
  EXPECT_THROW(pi_pulse_duration(0.0), ConfigError);
  EXPECT_THROW(pi_pulse_duration(-1.0), ConfigError);
}

TEST(PulseSpec, Validation) {
  EXPECT_NO_THROW((PulseSpec{130.0, 0.1, 1.0}.validate()));
  EXPECT_THROW((PulseSpec{130.0, 0.1, 0.0}.validate()), ConfigError);
  EXPECT_THROW((PulseSpec{130.0, -0.1, 1.0}.validate()), ConfigError);
  const PulseSpec pulse = pi_pulse(SpinSystemConfig::reference());
  EXPECT_EQ(pulse.rf_freq, 130.0);
  EXPECT_NEAR(pulse.duration, 10.0 * kPi, 1e-12);
}

TEST(MeasureIPlus, DiagonalStateHasNoCoherence) {
  const DeviationMatrix rho = thermal_deviation(SpinSystemConfig::reference(), digital_active(0));
  EXPECT_EQ(measure_i_plus(rho), Complex{});
}

TEST(MeasureIPlus, MatchesTraceWithRaisingOperator) {
  std::mt19937 rng(21);
  for (int n_spins = 1; n_spins <= 4; ++n_spins) {
    const DeviationMatrix rho{testing::random_hermitian(rng, Eigen::Index{1} << n_spins, 1.0)};
    const Complex expected = (total_spin_operator(n_spins, SpinAxis::kPlus) * rho.matrix()).trace();
    EXPECT_LT(std::abs(measure_i_plus(rho) - expected), 1e-12);
  }
}

TEST(Populations, PreparedState) {
  const auto pops = populations(thermal_deviation(SpinSystemConfig::reference(), digital_active(0)));
  const std::vector<double> expected{1, 0, 0, 0, -0.5, 0.5, 0.5, 0.5, 0.5, -0.5, -0.5, -0.5, -1, 0, 0, 0};
  EXPECT_EQ(pops, expected);
}

TEST(Populations, SuperpositionActiveEntries) {
  const std::array<Complex, 4> c{std::sqrt(0.3), std::sqrt(0.2), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(6.0)};
  const auto pops = populations(thermal_deviation(SpinSystemConfig::reference(), embed_superposition(c)));
  EXPECT_NEAR(pops[0], 0.3, 1e-15);
  EXPECT_NEAR(pops[1], 0.2, 1e-15);
  EXPECT_NEAR(pops[2], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(pops[3], 1.0 / 6.0, 1e-15);
}

TEST(Populations, RejectsImaginaryDiagonal) {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(4, 4);
  r(2, 2) = Complex{0.0, 1e-6};
  EXPECT_THROW(populations(DeviationMatrix{r}), NumericalError);
}

TEST(EvolveExact, ZeroTimeIsIdentity) {
  const auto cfg = SpinSystemConfig::reference();
  const DeviationMatrix rho = thermal_deviation(cfg, embed_superposition({0.6, 0.8, 0.0, 0.0}));
  EXPECT_EQ(evolve_exact(build_hamiltonian(cfg), rho, 0.0).matrix(), rho.matrix());
}

TEST(EvolveExact, AgreesWithMatrixExponential) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cfg = testing::random_config(rng, 1 + trial % 4);
    const OperatorMatrix h = build_hamiltonian(cfg);
    const Eigen::MatrixXcd rho = testing::random_hermitian(rng, h.rows(), 1.0);
    const double t = 0.37 * (trial + 1);
    const auto ours = evolve_exact(h, DeviationMatrix{rho}, t);
    EXPECT_LT(max_diff(ours.matrix(), testing::expm_evolve(h, rho, t)), 1e-9) << "trial " << trial;
  }
}

TEST(EvolveExact, PreservesTraceAndHermiticity) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXcd h = testing::random_hermitian(rng, 16, 50.0);
    const Eigen::MatrixXcd rho = testing::random_hermitian(rng, 16, 1.0);
    const auto out = evolve_exact(h, DeviationMatrix{rho}, 3.3);
    EXPECT_LT(std::abs(out.trace() - rho.trace()), 1e-12);
    EXPECT_LT(max_diff(out.matrix(), out.matrix().adjoint()), 1e-12);
    const double m0 = (rho * rho).trace().real();
    EXPECT_LT(std::abs((out.matrix() * out.matrix()).trace().real() - m0), 1e-10);
  }
}

TEST(EvolveExact, RejectsNonHermitian) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 1) = 1.0;
  EXPECT_THROW(evolve_exact(h, ground_projector(2), 1.0), ConfigError);
}

TEST(EvolveStep, UndrivenDiagonalStateIsStationary) {
  auto cfg = SpinSystemConfig::reference();
  cfg.rabi = 0.0;
  const DeviationMatrix rho0 = thermal_deviation(cfg, digital_active(2));
  const Trajectory traj = evolve_step(build_hamiltonian(cfg), rho0, 5.0, {1e-3, 100, StepFrame::kRotating});
  const auto p0 = populations(rho0);
  for (const auto& pops : traj.series.populations) {
    for (std::size_t n = 0; n < pops.size(); ++n) EXPECT_NEAR(pops[n], p0[n], 1e-10);
  }
}

TEST(EvolveStep, SamplingGrid) {
  const auto cfg = two_spin_config();
  const double duration = pi_pulse_duration(cfg.rabi);
  const Trajectory traj = evolve_step(build_hamiltonian(cfg), ground_projector(4), duration, {1e-2, 50});
  // ceil(2 pi / 0.01) = 629 steps -> samples at 0, 50, ..., 600 and the end.
  EXPECT_EQ(traj.steps, 629u);
  ASSERT_EQ(traj.series.size(), 14u);
  EXPECT_EQ(traj.series.times.front(), 0.0);
  EXPECT_EQ(traj.series.times.back(), duration);
  for (std::size_t s = 1; s < traj.series.size(); ++s) EXPECT_GT(traj.series.times[s], traj.series.times[s - 1]);
  EXPECT_EQ(traj.series.populations.back(), populations(traj.final_state));
}

TEST(EvolveStep, ExactMultipleOfDtIsNotPadded) {
  const auto cfg = two_spin_config();
  const Trajectory traj = evolve_step(build_hamiltonian(cfg), ground_projector(4), 1.0, {1e-3, 1000});
  EXPECT_EQ(traj.steps, 1000u);
}

TEST(EvolveStep, RejectsBadInputs) {
  const auto cfg = two_spin_config();
  const OperatorMatrix h = build_hamiltonian(cfg);
  EXPECT_THROW(evolve_step(h, ground_projector(4), 1.0, {0.0, 10}), ConfigError);
  EXPECT_THROW(evolve_step(h, ground_projector(4), 1.0, {-1e-3, 10}), ConfigError);
  EXPECT_THROW(evolve_step(h, ground_projector(4), 0.0, {1e-3, 10}), ConfigError);
  EXPECT_THROW(evolve_step(h, ground_projector(4), 1.0, {1e-3, 0}), ConfigError);
  EXPECT_THROW(evolve_step(h, ground_projector(8), 1.0, {1e-3, 10}), ConfigError);
  OperatorMatrix bad = h;
  bad(0, 1) += 1e-6;
  EXPECT_THROW(evolve_step(bad, ground_projector(4), 1.0, {1e-3, 10}), ConfigError);
}

TEST(EvolveStep, OverflowIsReportedWithStep) {
  // A huge Hamiltonian with a step far outside the RK4 stability region.
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 0) = 1e6;
  h(1, 1) = -1e6;
  h(0, 1) = h(1, 0) = 1e6;
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(2, 2);
  r(0, 0) = 1.0;
  for (const StepFrame frame : {StepFrame::kRotating, StepFrame::kInteraction}) {
    try {
      evolve_step(h, DeviationMatrix{r}, 10.0, {0.1, 1000, frame});
      FAIL() << "expected PropagationError";
    } catch (const PropagationError& e) {
      EXPECT_GT(e.step(), 0u);
      EXPECT_LT(e.step(), 100u);
    }
  }
}

TEST(EvolveStep, BothFramesMatchExactOnTwoSpins) {
  const auto cfg = two_spin_config();
  const OperatorMatrix h = build_hamiltonian(cfg);
  const double duration = pi_pulse_duration(cfg.rabi);
  const auto exact = evolve_exact(h, ground_projector(4), duration);
  for (const StepFrame frame : {StepFrame::kRotating, StepFrame::kInteraction}) {
    const auto traj = evolve_step(h, ground_projector(4), duration, {1e-4, 1000, frame});
    EXPECT_LT(max_diff(traj.final_state.matrix(), exact.matrix()), 1e-8);
  }
}

TEST(EvolveStep, ResonantTwoLevelRabiCurve) {
  // Spin 0 resonant with spin 1 in the ground state: r00 follows
  // cos^2(Omega t / 2) up to off-resonant corrections of order (Omega/J)^2.
  const auto cfg = two_spin_config();
  const double duration = pi_pulse_duration(cfg.rabi);
  const auto traj = evolve_step(build_hamiltonian(cfg), ground_projector(4), duration, {1e-3, 100});
  for (std::size_t s = 0; s < traj.series.size(); ++s) {
    const double t = traj.series.times[s];
    EXPECT_NEAR(traj.series.populations[s][0], testing::rabi_population(cfg.rabi, t), 5e-3) << "t=" << t;
    EXPECT_NEAR(traj.series.i_plus[s].imag(), testing::rabi_coherence(cfg.rabi, t), 5e-2) << "t=" << t;
  }
}

TEST(EvolveStep, RotatingFrameConvergesAtFourthOrder) {
  const auto cfg = two_spin_config();
  const OperatorMatrix h = build_hamiltonian(cfg);
  const double period = 2.0 * pi_pulse_duration(cfg.rabi);
  const auto exact = evolve_exact(h, ground_projector(4), period).matrix();
  const auto err = [&](double dt) {
    return max_diff(evolve_step(h, ground_projector(4), period, {dt, 1u << 30, StepFrame::kRotating}).final_state.matrix(),
                    exact);
  };
  const double ratio = err(2e-3) / err(1e-3);
  EXPECT_GT(std::log2(ratio), 3.5);
  EXPECT_LT(std::log2(ratio), 4.5);
}

TEST(EvolveStepProperty, ConservationOnRandomSystems) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto cfg = testing::random_config(rng, 1 + trial % 3);
    const OperatorMatrix h = build_hamiltonian(cfg);
    const DeviationMatrix rho0{testing::random_hermitian(rng, h.rows(), 1.0)};
    // Step scaled to the operator norm keeps h*|H| fixed across systems.
    const double dt = 5e-3 / h.operatorNorm();
    for (const StepFrame frame : {StepFrame::kRotating, StepFrame::kInteraction}) {
      const auto traj = evolve_step(h, rho0, 0.05, {dt, 1000, frame});
      const auto& r = traj.final_state.matrix();
      EXPECT_LT(std::abs(traj.final_state.trace() - rho0.trace()), 1e-10);
      EXPECT_LT(max_diff(r, r.adjoint()), 1e-10);
      const double m0 = (rho0.matrix() * rho0.matrix()).trace().real();
      EXPECT_LT(std::abs((r * r).trace().real() - m0), 1e-8);
    }
  }
}

TEST_F(ReferenceRun, PopulationTransferIsMonotone) {
  const auto& pops = run_->series.populations;
  ASSERT_GT(pops.size(), 60u);
  EXPECT_EQ(pops.front()[0], 1.0);
  EXPECT_LT(pops.back()[0], 1e-3);
  for (std::size_t s = 1; s < pops.size(); ++s) EXPECT_LE(pops[s][0], pops[s - 1][0]) << "sample " << s;
}

TEST_F(ReferenceRun, MidpointMatchesRabiFormula) {
  const auto half = evolve_step(*h_, *rho0_, period_ / 2.0, {1e-3, 1u << 30});
  EXPECT_NEAR(half.final_state(0, 0).real(), testing::rabi_population(0.1, period_ / 2.0), 0.01);
  EXPECT_NEAR(half.final_state(0, 0).real(), 0.5, 0.01);
  const Complex ip = measure_i_plus(half.final_state);
  EXPECT_NEAR(std::abs(ip.imag()), 0.5, 0.01);
  // Cross-check against the exact propagator.
  EXPECT_LT(std::abs(ip - measure_i_plus(evolve_exact(*h_, *rho0_, period_ / 2.0))), 1e-8);
}

TEST_F(ReferenceRun, CoherenceVanishesAtPulseEnd) {
  EXPECT_LT(std::abs(run_->series.i_plus.back()), 1e-2);
}

TEST_F(ReferenceRun, AgreesWithExactPropagator) {
  const auto exact = evolve_exact(*h_, *rho0_, period_);
  EXPECT_LT(max_diff(run_->final_state.matrix(), exact.matrix()), 1e-8);
  EXPECT_LT(max_diff(run_->final_state.matrix(), testing::expm_evolve(*h_, rho0_->matrix(), period_)), 1e-8);
}

TEST_F(ReferenceRun, ConservesInvariants) {
  const auto& r = run_->final_state.matrix();
  EXPECT_LT(std::abs(run_->final_state.trace() - rho0_->trace()), 1e-10);
  EXPECT_LT(max_diff(r, r.adjoint()), 1e-10);
  const double m0 = (rho0_->matrix() * rho0_->matrix()).trace().real();
  EXPECT_LT(std::abs((r * r).trace().real() - m0), 1e-8);
  for (const auto& pops : run_->series.populations) {
    double tr = 0.0;
    for (double p : pops) tr += p;
    EXPECT_LT(std::abs(tr), 1e-10);
  }
}

}  // namespace
}  // namespace isingcn
