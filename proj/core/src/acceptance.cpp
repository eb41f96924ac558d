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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "isingcn/errors.hpp"
#include "isingcn/evolution.hpp"
#include "isingcn/experiment.hpp"
#include "isingcn/gate.hpp"
#include "isingcn/version.hpp"

namespace isingcn {

namespace {

constexpr double kTraceTolerance = 1e-10;
constexpr double kHermiticityTolerance = 1e-10;
constexpr double kSecondMomentTolerance = 1e-8;
constexpr double kOracleTolerance = 1e-8;
constexpr double kSpectrumTolerance = 1e-12;
constexpr double kOrderLow = 3.5;
constexpr double kOrderHigh = 4.5;
constexpr double kMidpointTolerance = 0.01;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

double second_moment(const DeviationMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

double closed_form_energy(const SpinSystemConfig& cfg, BasisIndex state) {
  double e = 0.0;
  for (int a = 0; a < cfg.n_spins; ++a) {
    const double sa = state.spin_state(a) == 0 ? 0.5 : -0.5;
    e -= cfg.omega[static_cast<std::size_t>(a)] * sa;
    for (int b = a + 1; b < cfg.n_spins; ++b) {
      const double sb = state.spin_state(b) == 0 ? 0.5 : -0.5;
      e -= 2.0 * cfg.j_coupling * sa * sb;
    }
  }
  return e;
}

struct LabelledRun {
  std::string label;
  DeviationMatrix initial;
  GateRun run;
};

}  // namespace

bool AcceptanceSummary::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AcceptanceCheck& c) { return c.passed; });
}

std::vector<const AcceptanceCheck*> AcceptanceSummary::failures() const {
  std::vector<const AcceptanceCheck*> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

nlohmann::json AcceptanceSummary::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"passed", c.passed},
                    {"measured", c.measured},
                    {"threshold", c.threshold},
                    {"detail", c.detail}});
  }
  return {{"version", std::string(kVersion)}, {"passed", passed()}, {"wall_seconds", wall_seconds}, {"checks", list}};
}

AcceptanceOptions load_acceptance_options(const std::optional<std::filesystem::path>& config) {
  AcceptanceOptions options;
  if (config) {
    const ExperimentConfig exp = load_experiment_config(*config);
    options.system = exp.system;
    options.dt = exp.dt;
    options.sample_stride = exp.sample_stride;
  }
  return options;
}

AcceptanceSummary run_acceptance(const AcceptanceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SpinSystemConfig& cfg = options.system;
  cfg.validate();
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) throw ConfigError("dt must be positive");
  if (options.sample_stride < 1) throw ConfigError("stride must be at least 1");
  const double period = pi_pulse_duration(cfg.rabi);

  AcceptanceSummary summary;
  auto add = [&summary](std::string name, bool passed, double measured, double threshold, std::string detail = {}) {
    summary.checks.push_back({std::move(name), passed, measured, threshold, std::move(detail)});
  };

  GateRunOptions gate_options;
  gate_options.step.dt = options.dt;
  gate_options.step.sample_stride = options.sample_stride;

  // Gate runs: the four digital states and the superposition.
  std::vector<std::pair<std::string, ActiveBlock>> inputs;
  for (int k = 0; k < 4; ++k) inputs.emplace_back("truth_table k=" + std::to_string(k), digital_active(k));
  inputs.emplace_back("superposition", embed_superposition(reference_superposition()));

  std::vector<std::future<LabelledRun>> pending;
  for (const auto& [label, active] : inputs) {
    pending.push_back(std::async(std::launch::async, [&cfg, gate_options, label, active] {
      GateRunOptions local = gate_options;
      local.label = label;
      return LabelledRun{label, thermal_deviation(cfg, active), run_cn_gate(cfg, active, local)};
    }));
  }
  std::vector<LabelledRun> runs;
  for (auto& p : pending) runs.push_back(p.get());

  for (const auto& r : runs) {
    const GateReport& rep = r.run.report;
    add(r.label, rep.passed, rep.active_error, rep.tolerances.active,
        "active error " + fmt(rep.active_error) + ", max passive drift " + fmt(rep.max_passive_drift) +
            " (tolerances " + fmt(rep.tolerances.active) + " / " + fmt(rep.tolerances.passive) + ")");
  }

  // Zero-field spectrum against the closed-form diagonal.
  {
    const auto levels = spectrum_at_zero_field(cfg);
    double worst = 0.0;
    for (const auto& level : levels) {
      worst = std::max(worst, std::abs(level.energy - closed_form_energy(cfg, level.state)));
    }
    double sum_omega = 0.0;
    for (double w : cfg.omega) sum_omega += w;
    const double pairs = cfg.n_spins * (cfg.n_spins - 1) / 2.0;
    const double ground = -(sum_omega + pairs * cfg.j_coupling) / 2.0;
    const bool ground_ok = levels.front().state == BasisIndex{0} && levels.front().energy == ground;
    add("zero-field spectrum", ground_ok && worst <= kSpectrumTolerance, worst, kSpectrumTolerance,
        "ground energy " + fmt(levels.front().energy) + " (closed form " + fmt(ground) + ")");
  }

  const OperatorMatrix h = build_hamiltonian(cfg);

  // Nonzero structure of the driven Hamiltonian.
  {
    const Eigen::Index dim = h.rows();
    long diag = 0;
    long off = 0;
    for (Eigen::Index n = 0; n < dim; ++n) {
      for (Eigen::Index k = 0; k < dim; ++k) {
        if (h(n, k) != Complex{0.0, 0.0}) ++(n == k ? diag : off);
      }
    }
    const long expected_off = cfg.rabi != 0.0 ? static_cast<long>(cfg.n_spins) * dim : 0;
    add("hamiltonian structure", diag == dim && off == expected_off, static_cast<double>(off),
        static_cast<double>(expected_off),
        std::to_string(diag) + " nonzero diagonal, " + std::to_string(off) + " nonzero off-diagonal");
  }

  const ExactPropagator exact(h);
  const DeviationMatrix rho_a = thermal_deviation(cfg, digital_active(0));

  // Step integrator against the eigendecomposition propagator.
  {
    const double err = max_abs_diff(runs[0].run.trajectory.final_state.matrix(), exact.evolve(rho_a, period).matrix());
    add("step vs exact propagator", err <= kOracleTolerance, err, kOracleTolerance, "dt " + fmt(options.dt));
  }

  // Order of classic RK4 over one Rabi period.
  {
    const double rabi_period = 2.0 * period;
    const Eigen::MatrixXcd reference = exact.evolve(rho_a, rabi_period).matrix();
    StepOptions coarse{options.dt, std::size_t{1} << 30, StepFrame::kRotating};
    StepOptions fine{options.dt / 2.0, std::size_t{1} << 30, StepFrame::kRotating};
    const double e1 = max_abs_diff(evolve_step(h, rho_a, rabi_period, coarse).final_state.matrix(), reference);
    const double e2 = max_abs_diff(evolve_step(h, rho_a, rabi_period, fine).final_state.matrix(), reference);
    const double order = std::log2(e1 / e2);
    add("rk4 convergence order", order >= kOrderLow && order <= kOrderHigh, order, 4.0,
        "errors " + fmt(e1) + " -> " + fmt(e2) + ", ratio " + fmt(e1 / e2));
  }

  // Conservation on every gate run.
  {
    double trace_drift = 0.0;
    double herm = 0.0;
    double moment = 0.0;
    for (const auto& r : runs) {
      const double tr0 = r.initial.trace().real();
      for (const auto& pops : r.run.trajectory.series.populations) {
        double tr = 0.0;
        for (double p : pops) tr += p;
        trace_drift = std::max(trace_drift, std::abs(tr - tr0));
      }
      const DeviationMatrix& fin = r.run.trajectory.final_state;
      trace_drift = std::max(trace_drift, std::abs(fin.trace() - r.initial.trace()));
      herm = std::max(herm, max_abs_diff(fin.matrix(), fin.matrix().adjoint()));
      moment = std::max(moment, std::abs(second_moment(fin) - second_moment(r.initial)));
    }
    add("trace conservation", trace_drift < kTraceTolerance, trace_drift, kTraceTolerance);
    add("hermiticity", herm < kHermiticityTolerance, herm, kHermiticityTolerance);
    add("second moment conservation", moment < kSecondMomentTolerance, moment, kSecondMomentTolerance);
  }

  // Rabi midpoint: r00(T/2) = cos^2(pi/4) and the coherence peak.
  {
    StepOptions half{options.dt, std::size_t{1} << 30, StepFrame::kInteraction};
    const Trajectory mid = evolve_step(h, rho_a, period / 2.0, half);
    const double r00 = mid.final_state(0, 0).real();
    add("rabi midpoint population", std::abs(r00 - 0.5) <= kMidpointTolerance, r00, 0.5,
        "tolerance " + fmt(kMidpointTolerance));

    const TimeSeries& series = runs[0].run.trajectory.series;
    std::size_t peak = 0;
    for (std::size_t s = 0; s < series.size(); ++s) {
      if (std::abs(series.i_plus[s].imag()) > std::abs(series.i_plus[peak].imag())) peak = s;
    }
    const double spacing = series.size() > 1 ? series.times[1] - series.times[0] : period;
    const double offset = std::abs(series.times[peak] - period / 2.0);
    add("rabi midpoint coherence peak", offset <= spacing, offset, spacing,
        "|Im<I+>| peaks at t=" + fmt(series.times[peak]) + " with " + fmt(std::abs(series.i_plus[peak].imag())));
  }

  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace isingcn
