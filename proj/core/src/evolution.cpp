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

#include <cmath>
#include <numbers>
#include <string>

#include "isingcn/errors.hpp"

namespace isingcn {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kDiagonalImagTolerance = 1e-8;

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// -i [A, r] for Hermitian A and r, written as -i (Ar - (Ar)^dagger). The
// result is Hermitian to the last bit.
template <typename Mat>
void commutator_rhs(const Mat& a, const Mat& r, Mat& ar, Mat& out) {
  ar.noalias() = a * r;
  out = (ar - ar.adjoint()) * Complex{0.0, -1.0};
}

template <typename Vec>
void fill_phases(const Eigen::VectorXd& diag, double t, Vec& phase) {
  for (Eigen::Index n = 0; n < diag.size(); ++n) phase(n) = std::polar(1.0, diag(n) * t);
}

// Drive term seen in the interaction picture: V_I(t)_nm = e^{i(D_n - D_m)t} V_nm.
template <typename Mat, typename Vec>
void interaction_drive(const Eigen::VectorXd& diag, const Mat& drive, double t, Vec& phase, Mat& out) {
  fill_phases(diag, t, phase);
  for (Eigen::Index m = 0; m < drive.cols(); ++m) {
    const Complex right = std::conj(phase(m));
    for (Eigen::Index n = 0; n < drive.rows(); ++n) out(n, m) = phase(n) * drive(n, m) * right;
  }
}

template <typename Mat, typename Vec>
DeviationMatrix to_rotating_frame(const Mat& rho_i, const Eigen::VectorXd& diag, double t, Vec& phase) {
  fill_phases(diag, t, phase);
  Eigen::MatrixXcd rho(rho_i.rows(), rho_i.cols());
  for (Eigen::Index m = 0; m < rho.cols(); ++m) {
    for (Eigen::Index n = 0; n < rho.rows(); ++n) rho(n, m) = std::conj(phase(n)) * rho_i(n, m) * phase(m);
  }
  return DeviationMatrix{std::move(rho)};
}

// RK4 loop, instantiated for a compile-time dimension (the four-spin
// molecule) and for Eigen::Dynamic.
template <int Dim>
Trajectory integrate(const OperatorMatrix& h, const DeviationMatrix& rho0, double duration, std::size_t steps,
                     const StepOptions& options) {
  using Mat = Eigen::Matrix<Complex, Dim, Dim>;
  using Vec = Eigen::Matrix<Complex, Dim, 1>;

  const double step = duration / static_cast<double>(steps);
  const Eigen::Index dim = h.rows();
  const bool interaction = options.frame == StepFrame::kInteraction;

  const Eigen::VectorXd diag = h.diagonal().real();
  Mat drive = h;
  if (interaction) drive.diagonal().setZero();

  Vec phase(dim);
  Mat r = rho0.matrix();
  Mat k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), scratch(dim, dim), probe(dim, dim);
  Mat a_start = drive, a_mid = drive, a_end = drive;

  Trajectory out;
  out.steps = steps;
  out.step_size = step;
  out.series.append(0.0, rho0);

  if (interaction) interaction_drive(diag, drive, 0.0, phase, a_start);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * step;
    if (interaction) {
      interaction_drive(diag, drive, t + 0.5 * step, phase, a_mid);
      interaction_drive(diag, drive, t + step, phase, a_end);
    }
    commutator_rhs(a_start, r, scratch, k1);
    probe = r + (0.5 * step) * k1;
    commutator_rhs(a_mid, probe, scratch, k2);
    probe = r + (0.5 * step) * k2;
    commutator_rhs(a_mid, probe, scratch, k3);
    probe = r + step * k3;
    commutator_rhs(a_end, probe, scratch, k4);
    r += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (interaction) std::swap(a_start, a_end);

    if (!r.allFinite()) throw PropagationError(i + 1, "deviation matrix became non-finite");

    const std::size_t done = i + 1;
    if (done == steps || done % options.sample_stride == 0) {
      const double t_sample = done == steps ? duration : static_cast<double>(done) * step;
      DeviationMatrix rho =
          interaction ? to_rotating_frame(r, diag, t_sample, phase) : DeviationMatrix{Eigen::MatrixXcd(r)};
      out.series.append(t_sample, rho);
      if (done == steps) out.final_state = std::move(rho);
    }
  }
  return out;
}

}  // namespace

void PulseSpec::validate() const {
  if (!(duration > 0.0) || !std::isfinite(duration)) throw ConfigError("pulse duration must be positive");
  if (!(rabi >= 0.0) || !std::isfinite(rabi)) throw ConfigError("pulse Rabi frequency must be non-negative");
  if (!std::isfinite(rf_freq)) throw ConfigError("pulse frequency must be finite");
}

double pi_pulse_duration(double rabi) {
  if (!(rabi > 0.0) || !std::isfinite(rabi)) {
    throw ConfigError("pi-pulse needs a positive Rabi frequency, got " + std::to_string(rabi));
  }
  return std::numbers::pi / rabi;
}

PulseSpec pi_pulse(const SpinSystemConfig& cfg) {
  return {cfg.rf_freq, cfg.rabi, pi_pulse_duration(cfg.rabi)};
}

SpinSystemConfig with_pulse(SpinSystemConfig cfg, const PulseSpec& pulse) {
  cfg.rf_freq = pulse.rf_freq;
  cfg.rabi = pulse.rabi;
  return cfg;
}

void TimeSeries::append(double t, const DeviationMatrix& rho) {
  times.push_back(t);
  populations.push_back(isingcn::populations(rho));
  i_plus.push_back(measure_i_plus(rho));
}

Trajectory evolve_step(const OperatorMatrix& h, const DeviationMatrix& rho0, double duration,
                       const StepOptions& options) {
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) throw ConfigError("dt must be positive");
  if (!(duration > 0.0) || !std::isfinite(duration)) throw ConfigError("duration must be positive");
  if (options.sample_stride == 0) throw ConfigError("sample stride must be at least 1");
  if (!is_power_of_two(h.rows()) || h.rows() != rho0.dim()) {
    throw ConfigError("Hamiltonian and deviation matrix dimensions do not match");
  }
  if (!is_hermitian(h, kHermitianTolerance)) throw ConfigError("Hamiltonian is not Hermitian");

  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(duration / options.dt * (1.0 - 1e-12))));
  if (h.rows() == 16) return integrate<16>(h, rho0, duration, steps, options);
  return integrate<Eigen::Dynamic>(h, rho0, duration, steps, options);
}

ExactPropagator::ExactPropagator(const OperatorMatrix& h) {
  if (!is_hermitian(h, kHermitianTolerance)) throw ConfigError("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition of the Hamiltonian failed");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

OperatorMatrix ExactPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(energies_.size());
  for (Eigen::Index n = 0; n < energies_.size(); ++n) phases(n) = std::polar(1.0, -energies_(n) * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

DeviationMatrix ExactPropagator::evolve(const DeviationMatrix& rho, double t) const {
  if (rho.dim() != vectors_.rows()) throw ConfigError("deviation matrix dimension does not match H");
  if (t == 0.0) return rho;
  const OperatorMatrix u = unitary(t);
  return DeviationMatrix{u * rho.matrix() * u.adjoint()};
}

DeviationMatrix evolve_exact(const OperatorMatrix& h, const DeviationMatrix& rho0, double t) {
  return ExactPropagator{h}.evolve(rho0, t);
}

Complex measure_i_plus(const DeviationMatrix& rho) {
  const Eigen::Index dim = rho.dim();
  if (!is_power_of_two(dim)) throw ConfigError("deviation matrix dimension must be a power of two");
  // (I^+_a)_{nk} = 1 for k = n with bit a set, so Tr{I^+_a rho} sums rho(k, k - 2^a).
  Complex total{0.0, 0.0};
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      if ((k & bit) != 0) total += rho(k, k ^ bit);
    }
  }
  return total;
}

std::vector<double> populations(const DeviationMatrix& rho) {
  std::vector<double> out(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index n = 0; n < rho.dim(); ++n) {
    const Complex v = rho(n, n);
    if (!(std::abs(v.imag()) <= kDiagonalImagTolerance)) {
      throw NumericalError("diagonal entry " + std::to_string(n) + " has imaginary part " +
                           std::to_string(v.imag()));
    }
    out[static_cast<std::size_t>(n)] = v.real();
  }
  return out;
}

}  // namespace isingcn
