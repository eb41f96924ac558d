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

#include <Eigen/Dense>

#include "isingcn/operators.hpp"

namespace isingcn {

// Deviation density matrix rho_Delta in units of the thermal prefactor
// hbar*sum(w_k)/(2 k_B T), which is fixed to 1. The full ensemble state is
// E/dim + rho_Delta; the identity part never evolves and is not stored.
class DeviationMatrix {
 public:
  DeviationMatrix() = default;
  explicit DeviationMatrix(Eigen::MatrixXcd r);

  const Eigen::MatrixXcd& matrix() const { return r_; }
  Eigen::Index dim() const { return r_.rows(); }
  Complex operator()(Eigen::Index n, Eigen::Index k) const { return r_(n, k); }
  Complex trace() const { return r_.trace(); }

 private:
  Eigen::MatrixXcd r_;
};

// The r_nk(0) coefficients of the four active states |00ij> (indices 0..3).
// Hermitian with unit trace.
class ActiveBlock {
 public:
  // Throws ConfigError if r is not Hermitian or its trace is not 1 (1e-10).
  explicit ActiveBlock(const Eigen::Matrix4cd& r);

  const Eigen::Matrix4cd& matrix() const { return r_; }
  Complex operator()(int n, int k) const { return r_(n, k); }
  std::array<double, 4> diagonal() const;

 private:
  Eigen::Matrix4cd r_;
};

inline constexpr double kActiveBlockTolerance = 1e-10;

// Digital initial condition: r_kk = 1, every other active entry zero.
ActiveBlock digital_active(int k);

// Pure two-qubit state c_0|0> + ... + c_3|3>, embedded as r_nk = c_n^* c_k.
// Throws ConfigError (quoting the computed norm) unless sum |c_n|^2 = 1.
ActiveBlock embed_superposition(const std::array<Complex, 4>& c);

// Diagonal of the passive states 4..15 of the prepared four-spin ensemble.
inline constexpr std::array<double, 12> kPassiveDiagonal{-0.5, 0.5, 0.5,  0.5,  0.5, -0.5,
                                                         -0.5, -0.5, -1.0, 0.0, 0.0, 0.0};

// Prepared initial deviation matrix: `active` on indices 0..3 and the fixed
// passive diagonal on 4..15. Only defined for the four-spin molecule.
DeviationMatrix thermal_deviation(const SpinSystemConfig& cfg, const ActiveBlock& active);

}  // namespace isingcn
