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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace isingcn {

using Complex = std::complex<double>;

// Dense 2^N x 2^N complex matrix: Hamiltonians, spin operators, propagators.
using OperatorMatrix = Eigen::MatrixXcd;

// Physical parameters of one Ising-coupled spin molecule, driven in the frame
// rotating with the RF field. All frequencies are dimensionless angular
// frequencies and hbar = 1.
struct SpinSystemConfig {
  int n_spins = 4;
  std::vector<double> omega{100.0, 200.0, 300.0, 400.0};  // Larmor frequency per spin
  double j_coupling = 10.0;  // uniform Ising constant J
  double rabi = 0.1;         // Rabi frequency of the RF field
  double rf_freq = 130.0;    // rotating-frame frequency

  // Four-spin molecule with omega_k = 100(k+1), J = 10, Omega = 0.1 and the
  // RF tuned to the CN resonance omega_0 + 3J.
  static SpinSystemConfig reference() { return {}; }

  std::size_t dim() const { return std::size_t{1} << n_spins; }

  // Throws ConfigError on n_spins < 1, a size mismatch, a non-positive
  // omega or a negative Rabi frequency.
  void validate() const;
};

// Decimal label of a computational basis state. Bit a of the value holds the
// state of spin a; spin n-1 is the most significant bit, so |0001> is 1.
// Spin state 0 is the single-spin ground state (I^z = +1/2).
class BasisIndex {
 public:
  constexpr BasisIndex() = default;
  constexpr explicit BasisIndex(std::uint32_t value) : value_(value) {}

  // Parses "b_{n-1}...b_1 b_0", most significant spin first.
  static BasisIndex from_bits(std::string_view bits);

  constexpr std::uint32_t value() const { return value_; }
  constexpr int spin_state(int spin) const { return static_cast<int>((value_ >> spin) & 1u); }
  int excitations() const;
  std::string to_bits(int n_spins) const;

  friend constexpr bool operator==(BasisIndex, BasisIndex) = default;

 private:
  std::uint32_t value_ = 0;
};

enum class SpinAxis { kX, kY, kZ, kPlus };

// Single-spin operator acting on `spin`, identity on the rest of the molecule.
// I^z = diag(+1/2, -1/2), I^x has off-diagonal 1/2, I^+ = I^x + i I^y maps
// |1> to |0> with unit amplitude.
OperatorMatrix spin_operator(int n_spins, SpinAxis axis, int spin);

// Sum over spins of the single-spin operator.
OperatorMatrix total_spin_operator(int n_spins, SpinAxis axis);

// Rotating-frame Hamiltonian (hbar = 1):
//   H = -sum_a [ (w_a - w) I^z_a + 2 sum_{b>a} J I^z_a I^z_b + Omega I^x_a ].
OperatorMatrix build_hamiltonian(const SpinSystemConfig& cfg);

struct EnergyLevel {
  BasisIndex state;
  double energy = 0.0;
};

// Levels of the undriven molecule in the lab frame (Omega = w = 0), where H
// is diagonal. Sorted by energy; ties keep ascending index order.
std::vector<EnergyLevel> spectrum_at_zero_field(const SpinSystemConfig& cfg);

bool is_hermitian(const OperatorMatrix& m, double tol);

}  // namespace isingcn
