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

#include "isingcn/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "isingcn/errors.hpp"

namespace isingcn {

namespace {

constexpr int kMaxSpins = 14;

Eigen::Matrix2cd single_spin(SpinAxis axis) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (axis) {
    case SpinAxis::kX:
      m(0, 1) = 0.5;
      m(1, 0) = 0.5;
      break;
    case SpinAxis::kY:
      m(0, 1) = -0.5 * i;
      m(1, 0) = 0.5 * i;
      break;
    case SpinAxis::kZ:
      m(0, 0) = 0.5;
      m(1, 1) = -0.5;
      break;
    case SpinAxis::kPlus:
      m(0, 1) = 1.0;
      break;
  }
  return m;
}

void check_spin_count(int n_spins) {
  if (n_spins < 1 || n_spins > kMaxSpins) {
    throw ConfigError("n_spins must be in [1, " + std::to_string(kMaxSpins) +
                      "], got " + std::to_string(n_spins));
  }
}

}  // namespace

void SpinSystemConfig::validate() const {
  check_spin_count(n_spins);
  if (omega.size() != static_cast<std::size_t>(n_spins)) {
    throw ConfigError("omega has " + std::to_string(omega.size()) + " entries, expected " +
                      std::to_string(n_spins));
  }
  for (std::size_t a = 0; a < omega.size(); ++a) {
    if (!(omega[a] > 0.0) || !std::isfinite(omega[a])) {
      throw ConfigError("omega[" + std::to_string(a) + "] must be positive and finite");
    }
  }
  if (!(rabi >= 0.0) || !std::isfinite(rabi)) {
    throw ConfigError("rabi must be non-negative and finite");
  }
  if (!std::isfinite(j_coupling) || !std::isfinite(rf_freq)) {
    throw ConfigError("j_coupling and rf_freq must be finite");
  }
}

BasisIndex BasisIndex::from_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > 32) throw ConfigError("bit string must have 1..32 digits");
  std::uint32_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ConfigError("bit string may only contain 0 and 1");
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BasisIndex{value};
}

int BasisIndex::excitations() const { return std::popcount(value_); }

std::string BasisIndex::to_bits(int n_spins) const {
  std::string out(static_cast<std::size_t>(n_spins), '0');
  for (int a = 0; a < n_spins; ++a) {
    if (spin_state(a) != 0) out[static_cast<std::size_t>(n_spins - 1 - a)] = '1';
  }
  return out;
}

OperatorMatrix spin_operator(int n_spins, SpinAxis axis, int spin) {
  check_spin_count(n_spins);
  if (spin < 0 || spin >= n_spins) {
    throw ConfigError("spin index " + std::to_string(spin) + " out of range for " +
                      std::to_string(n_spins) + " spins");
  }
  // Kronecker order puts spin n-1 on the most significant bit.
  OperatorMatrix out = OperatorMatrix::Identity(1, 1);
  for (int b = n_spins - 1; b >= 0; --b) {
    const OperatorMatrix factor =
        b == spin ? OperatorMatrix(single_spin(axis)) : OperatorMatrix(OperatorMatrix::Identity(2, 2));
    OperatorMatrix next = Eigen::kroneckerProduct(out, factor).eval();
    out = std::move(next);
  }
  return out;
}

OperatorMatrix total_spin_operator(int n_spins, SpinAxis axis) {
  check_spin_count(n_spins);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_spins);
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for (int a = 0; a < n_spins; ++a) out += spin_operator(n_spins, axis, a);
  return out;
}

OperatorMatrix build_hamiltonian(const SpinSystemConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_spins;
  const auto dim = static_cast<Eigen::Index>(cfg.dim());

  std::vector<OperatorMatrix> iz;
  iz.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) iz.push_back(spin_operator(n, SpinAxis::kZ, a));

  OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
  for (int a = 0; a < n; ++a) {
    h -= (cfg.omega[static_cast<std::size_t>(a)] - cfg.rf_freq) * iz[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < n; ++b) {
      h -= 2.0 * cfg.j_coupling * (iz[static_cast<std::size_t>(a)] * iz[static_cast<std::size_t>(b)]);
    }
    if (cfg.rabi != 0.0) h -= cfg.rabi * spin_operator(n, SpinAxis::kX, a);
  }
  return h;
}

std::vector<EnergyLevel> spectrum_at_zero_field(const SpinSystemConfig& cfg) {
  SpinSystemConfig undriven = cfg;
  undriven.rabi = 0.0;
  undriven.rf_freq = 0.0;
  const OperatorMatrix h = build_hamiltonian(undriven);

  std::vector<EnergyLevel> levels;
  levels.reserve(cfg.dim());
  for (Eigen::Index n = 0; n < h.rows(); ++n) {
    levels.push_back({BasisIndex{static_cast<std::uint32_t>(n)}, h(n, n).real()});
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const EnergyLevel& a, const EnergyLevel& b) { return a.energy < b.energy; });
  return levels;
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace isingcn
