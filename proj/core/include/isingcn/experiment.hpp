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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "isingcn/gate.hpp"

namespace isingcn {

enum class Experiment { kFig2a, kFig2b, kFig2c, kFig2d, kFig3, kCustom };
enum class OutputFormat { kCsv, kJson };

std::string_view to_string(Experiment experiment);
Experiment parse_experiment(std::string_view name);
std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

// Amplitudes (sqrt(0.3), sqrt(0.2), 1/sqrt(3), 1/sqrt(6)) of the
// superposition experiment.
std::array<Complex, 4> reference_superposition();

struct ExperimentConfig {
  SpinSystemConfig system;
  Experiment experiment = Experiment::kFig2a;
  std::optional<std::array<Complex, 4>> custom_amplitudes;
  double dt = 1e-3;
  std::size_t sample_stride = 500;
  std::filesystem::path output_path;  // empty: "<experiment>.<format>"
  OutputFormat format = OutputFormat::kCsv;

  void validate() const;
  std::filesystem::path series_path() const;
  std::filesystem::path report_path() const;  // "<series stem>.report.json"
};

// Flat YAML map. Recognised keys: n_spins, omega, j_coupling, rabi, rf_freq,
// experiment, amplitudes, dt, stride, output, format. Missing keys keep the
// reference defaults, except that a missing rf_freq is set to the CN
// resonance of the configured molecule. Unknown keys are rejected.
ExperimentConfig parse_experiment_config(std::string_view yaml_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

ActiveBlock initial_active(const ExperimentConfig& cfg);

// Columns: t, r00..r{dim-1}, re_iplus, im_iplus. 17 significant digits.
void write_series_csv(std::ostream& out, const TimeSeries& series);
nlohmann::json series_to_json(const TimeSeries& series);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
nlohmann::json report_to_json(const GateReport& report, const ExperimentConfig& cfg);

struct ExperimentResult {
  GateRun run;
  std::filesystem::path series_path;
  std::filesystem::path report_path;
};

// Runs the configured experiment and writes the time series and the gate
// report. Throws ConfigError for invalid configs or unwritable paths and
// NumericalError for propagation failures.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace isingcn
