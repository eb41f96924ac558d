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

// isingcn: runs the CN pi-pulse experiments on the four-spin Ising molecule
// and the acceptance checks.
//
// Exit codes: 0 pass, 1 gate/acceptance check failed, 2 configuration error,
// 3 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isingcn/acceptance.hpp"
#include "isingcn/errors.hpp"
#include "isingcn/experiment.hpp"
#include "isingcn/version.hpp"

namespace {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kConfigError = 2, kNumericalError = 3 };

std::array<isingcn::Complex, 4> amplitudes_from_flag(const std::vector<double>& values) {
  std::array<isingcn::Complex, 4> c{};
  if (values.size() == 4) {
    for (std::size_t n = 0; n < 4; ++n) c[n] = values[n];
  } else if (values.size() == 8) {
    for (std::size_t n = 0; n < 4; ++n) c[n] = {values[2 * n], values[2 * n + 1]};
  } else {
    throw isingcn::ConfigError("--amplitudes takes 4 real values or 8 values (re im pairs)");
  }
  return c;
}

int run_acceptance_command(const std::optional<std::string>& config, const std::optional<std::string>& output,
                           const std::optional<double>& dt, const std::optional<long long>& stride) {
  auto options = isingcn::load_acceptance_options(config ? std::optional<std::filesystem::path>(*config)
                                                         : std::nullopt);
  if (dt) options.dt = *dt;
  if (stride) {
    if (*stride < 1) throw isingcn::ConfigError("stride must be at least 1");
    options.sample_stride = static_cast<std::size_t>(*stride);
  }
  const auto summary = isingcn::run_acceptance(options);

  for (const auto& check : summary.checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << std::left << std::setw(30) << check.name
              << " measured=" << check.measured << " threshold=" << check.threshold;
    if (!check.detail.empty()) std::cout << "  " << check.detail;
    std::cout << '\n';
  }
  std::cout << "wall time " << summary.wall_seconds << " s\n";

  const std::string path = output.value_or("acceptance_summary.json");
  std::ofstream out(path);
  if (!out) throw isingcn::ConfigError("cannot write " + path);
  out << summary.to_json().dump(2) << '\n';

  if (!summary.passed()) {
    for (const auto* failure : summary.failures()) {
      std::cerr << "failed: " << failure->name << " (measured " << failure->measured << ")\n";
    }
    return kCheckFailed;
  }
  std::cout << "acceptance passed\n";
  return kPass;
}

int run_experiment_command(const std::optional<std::string>& config, const std::optional<std::string>& experiment,
                           const std::optional<std::string>& output, const std::optional<std::string>& format,
                           const std::optional<double>& dt, const std::optional<long long>& stride,
                           const std::vector<double>& amplitudes) {
  isingcn::ExperimentConfig cfg =
      config ? isingcn::load_experiment_config(*config) : isingcn::parse_experiment_config("");
  if (experiment) cfg.experiment = isingcn::parse_experiment(*experiment);
  if (!amplitudes.empty()) cfg.custom_amplitudes = amplitudes_from_flag(amplitudes);
  if (cfg.experiment != isingcn::Experiment::kCustom) cfg.custom_amplitudes.reset();
  if (output) cfg.output_path = *output;
  if (format) cfg.format = isingcn::parse_output_format(*format);
  if (dt) cfg.dt = *dt;
  if (stride) {
    if (*stride < 1) throw isingcn::ConfigError("stride must be at least 1");
    cfg.sample_stride = static_cast<std::size_t>(*stride);
  }
  cfg.validate();

  const auto result = isingcn::run_experiment(cfg);
  const auto& report = result.run.report;

  std::cout << std::setprecision(10);
  std::cout << "experiment " << isingcn::to_string(cfg.experiment) << ": " << (report.passed ? "PASSED" : "FAILED")
            << '\n';
  std::cout << "final active populations:";
  for (std::size_t n = 0; n < 4; ++n) std::cout << ' ' << report.final_populations[n];
  std::cout << "\nexpected:                ";
  for (std::size_t n = 0; n < 4; ++n) std::cout << ' ' << report.expected_populations[n];
  std::cout << "\nactive error " << report.active_error << ", max passive drift " << report.max_passive_drift << '\n';
  std::cout << "wrote " << result.series_path.string() << " (" << result.run.trajectory.series.size()
            << " samples) and " << result.report_path.string() << '\n';
  return report.passed ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix simulation of a pi-pulse Control-Not gate on an ensemble of four-spin Ising molecules"};
  app.set_version_flag("--version", std::string(isingcn::kVersion));

  std::optional<std::string> experiment;
  std::optional<std::string> config;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<double> dt;
  std::optional<long long> stride;
  std::vector<double> amplitudes;
  bool acceptance = false;

  app.add_option("--experiment", experiment, "fig2a, fig2b, fig2c, fig2d, fig3 or custom");
  app.add_option("--config", config, "YAML config file")->check(CLI::ExistingFile);
  app.add_option("--output", output, "time-series file (experiments) or summary file (--acceptance)");
  app.add_option("--format", format, "csv or json");
  app.add_option("--dt", dt, "RK4 step");
  app.add_option("--stride", stride, "steps per emitted sample");
  app.add_option("--amplitudes", amplitudes, "custom amplitudes: 4 reals or 4 re,im pairs")->expected(4, 8);
  app.add_flag("--acceptance", acceptance, "run the acceptance checks instead of one experiment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (acceptance) return run_acceptance_command(config, output, dt, stride);
    return run_experiment_command(config, experiment, output, format, dt, stride, amplitudes);
  } catch (const isingcn::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const isingcn::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
}
