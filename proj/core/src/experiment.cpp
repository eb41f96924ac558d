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

#include "isingcn/experiment.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "isingcn/errors.hpp"
#include "isingcn/version.hpp"

namespace isingcn {

namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, 6> kExperimentNames{{
    {Experiment::kFig2a, "fig2a"},
    {Experiment::kFig2b, "fig2b"},
    {Experiment::kFig2c, "fig2c"},
    {Experiment::kFig2d, "fig2d"},
    {Experiment::kFig3, "fig3"},
    {Experiment::kCustom, "custom"},
}};

template <typename T>
T scalar_as(const YAML::Node& node, std::string_view key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("config key '" + std::string(key) + "': " + e.what());
  }
}

Complex parse_amplitude(const YAML::Node& node) {
  if (node.IsScalar()) return {scalar_as<double>(node, "amplitudes"), 0.0};
  if (node.IsSequence() && node.size() == 2) {
    return {scalar_as<double>(node[0], "amplitudes"), scalar_as<double>(node[1], "amplitudes")};
  }
  throw ConfigError("each amplitude must be a number or a [re, im] pair");
}

std::string column_label(std::size_t n, std::size_t dim) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(dim - 1).size());
  std::string digits = std::to_string(n);
  return "r" + std::string(width - digits.size(), '0') + digits;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::string_view to_string(Experiment experiment) {
  for (const auto& [value, name] : kExperimentNames) {
    if (value == experiment) return name;
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (const auto& [value, label] : kExperimentNames) {
    if (label == name) return value;
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::kCsv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

std::array<Complex, 4> reference_superposition() {
  return {Complex{std::sqrt(0.3)}, Complex{std::sqrt(0.2)}, Complex{1.0 / std::sqrt(3.0)},
          Complex{1.0 / std::sqrt(6.0)}};
}

void ExperimentConfig::validate() const {
  system.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (sample_stride < 1) throw ConfigError("stride must be at least 1");
  if ((experiment == Experiment::kCustom) != custom_amplitudes.has_value()) {
    throw ConfigError("custom amplitudes are required for, and only for, the custom experiment");
  }
}

std::filesystem::path ExperimentConfig::series_path() const {
  if (!output_path.empty()) return output_path;
  return std::string(to_string(experiment)) + "." + std::string(to_string(format));
}

std::filesystem::path ExperimentConfig::report_path() const {
  std::filesystem::path p = series_path();
  p.replace_extension();
  p += ".report.json";
  return p;
}

ExperimentConfig parse_experiment_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
  ExperimentConfig cfg;
  if (root.IsNull()) {
    cfg.validate();
    return cfg;
  }
  if (!root.IsMap()) throw ConfigError("config must be a key/value map");

  static const std::set<std::string> kKeys{"n_spins", "omega",  "j_coupling", "rabi", "rf_freq", "experiment",
                                           "amplitudes", "dt", "stride", "output", "format"};
  for (const auto& entry : root) {
    const auto key = entry.first.as<std::string>();
    if (!kKeys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  SpinSystemConfig& sys = cfg.system;
  if (root["n_spins"]) sys.n_spins = scalar_as<int>(root["n_spins"], "n_spins");
  if (root["omega"]) sys.omega = scalar_as<std::vector<double>>(root["omega"], "omega");
  if (root["j_coupling"]) sys.j_coupling = scalar_as<double>(root["j_coupling"], "j_coupling");
  if (root["rabi"]) sys.rabi = scalar_as<double>(root["rabi"], "rabi");
  if (root["experiment"]) cfg.experiment = parse_experiment(scalar_as<std::string>(root["experiment"], "experiment"));
  if (root["dt"]) cfg.dt = scalar_as<double>(root["dt"], "dt");
  if (root["stride"]) {
    const auto stride = scalar_as<long long>(root["stride"], "stride");
    if (stride < 1) throw ConfigError("stride must be at least 1");
    cfg.sample_stride = static_cast<std::size_t>(stride);
  }
  if (root["output"]) cfg.output_path = scalar_as<std::string>(root["output"], "output");
  if (root["format"]) cfg.format = parse_output_format(scalar_as<std::string>(root["format"], "format"));
  if (const YAML::Node amps = root["amplitudes"]) {
    if (!amps.IsSequence() || amps.size() != 4) throw ConfigError("amplitudes must list 4 entries");
    std::array<Complex, 4> c;
    for (std::size_t n = 0; n < 4; ++n) c[n] = parse_amplitude(amps[n]);
    cfg.custom_amplitudes = c;
  }

  sys.validate();
  sys.rf_freq = root["rf_freq"] ? scalar_as<double>(root["rf_freq"], "rf_freq") : cn_resonance_frequency(sys);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

ActiveBlock initial_active(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::kFig2a:
      return digital_active(0);
    case Experiment::kFig2b:
      return digital_active(1);
    case Experiment::kFig2c:
      return digital_active(2);
    case Experiment::kFig2d:
      return digital_active(3);
    case Experiment::kFig3:
      return embed_superposition(reference_superposition());
    case Experiment::kCustom:
      if (!cfg.custom_amplitudes) throw ConfigError("custom experiment needs amplitudes");
      return embed_superposition(*cfg.custom_amplitudes);
  }
  throw ConfigError("unhandled experiment");
}

void write_series_csv(std::ostream& out, const TimeSeries& series) {
  const std::size_t dim = series.populations.empty() ? 0 : series.populations.front().size();
  out << "t";
  for (std::size_t n = 0; n < dim; ++n) out << ',' << column_label(n, dim);
  out << ",re_iplus,im_iplus\n";
  out << std::setprecision(17);
  for (std::size_t s = 0; s < series.size(); ++s) {
    out << series.times[s];
    for (double p : series.populations[s]) out << ',' << p;
    out << ',' << series.i_plus[s].real() << ',' << series.i_plus[s].imag() << '\n';
  }
}

nlohmann::json series_to_json(const TimeSeries& series) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const Complex& z : series.i_plus) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"t", series.times}, {"populations", series.populations}, {"re_iplus", re}, {"im_iplus", im}};
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json out{
      {"n_spins", cfg.system.n_spins},
      {"omega", cfg.system.omega},
      {"j_coupling", cfg.system.j_coupling},
      {"rabi", cfg.system.rabi},
      {"rf_freq", cfg.system.rf_freq},
      {"experiment", to_string(cfg.experiment)},
      {"dt", cfg.dt},
      {"stride", cfg.sample_stride},
      {"format", to_string(cfg.format)},
  };
  if (cfg.custom_amplitudes) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& c : *cfg.custom_amplitudes) amps.push_back(complex_json(c));
    out["amplitudes"] = amps;
  }
  return out;
}

nlohmann::json report_to_json(const GateReport& report, const ExperimentConfig& cfg) {
  nlohmann::json active = nlohmann::json::array();
  for (int n = 0; n < 4; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) row.push_back(complex_json(report.final_active(n, k)));
    active.push_back(row);
  }
  return {
      {"version", std::string(kVersion)},
      {"config", config_to_json(cfg)},
      {"initial_label", report.initial_label},
      {"initial_populations", report.initial_populations},
      {"final_populations", report.final_populations},
      {"expected_populations", report.expected_populations},
      {"final_active_block", active},
      {"max_passive_drift", report.max_passive_drift},
      {"active_error", report.active_error},
      {"tolerances", {{"active", report.tolerances.active}, {"passive", report.tolerances.passive}}},
      {"passed", report.passed},
  };
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  GateRunOptions options;
  options.step.dt = cfg.dt;
  options.step.sample_stride = cfg.sample_stride;
  options.label = std::string(to_string(cfg.experiment));

  ExperimentResult result;
  result.series_path = cfg.series_path();
  result.report_path = cfg.report_path();

  // Open both outputs up front so a bad path fails before the simulation.
  std::ofstream series(result.series_path);
  if (!series) throw ConfigError("cannot write " + result.series_path.string());
  std::ofstream report(result.report_path);
  if (!report) throw ConfigError("cannot write " + result.report_path.string());

  result.run = run_cn_gate(cfg.system, initial_active(cfg), options);

  if (cfg.format == OutputFormat::kCsv) {
    write_series_csv(series, result.run.trajectory.series);
  } else {
    series << series_to_json(result.run.trajectory.series).dump(2) << '\n';
  }
  if (!series) throw ConfigError("failed writing " + result.series_path.string());

  report << report_to_json(result.run.report, cfg).dump(2) << '\n';
  if (!report) throw ConfigError("failed writing " + result.report_path.string());
  return result;
}

}  // namespace isingcn
