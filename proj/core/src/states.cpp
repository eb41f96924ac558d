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

#include "isingcn/states.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "isingcn/errors.hpp"

namespace isingcn {

DeviationMatrix::DeviationMatrix(Eigen::MatrixXcd r) : r_(std::move(r)) {
  if (r_.rows() != r_.cols()) throw ConfigError("deviation matrix must be square");
}

ActiveBlock::ActiveBlock(const Eigen::Matrix4cd& r) : r_(r) {
  const double herm = (r_ - r_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kActiveBlockTolerance)) {
    throw ConfigError("active block is not Hermitian (residue " + std::to_string(herm) + ")");
  }
  const Complex tr = r_.trace();
  if (!(std::abs(tr - Complex{1.0, 0.0}) <= kActiveBlockTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "active block diagonal must sum to 1, got " << tr.real();
    throw ConfigError(msg.str());
  }
}

std::array<double, 4> ActiveBlock::diagonal() const {
  return {r_(0, 0).real(), r_(1, 1).real(), r_(2, 2).real(), r_(3, 3).real()};
}

ActiveBlock digital_active(int k) {
  if (k < 0 || k > 3) throw ConfigError("digital state index must be in 0..3, got " + std::to_string(k));
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  r(k, k) = 1.0;
  return ActiveBlock{r};
}

ActiveBlock embed_superposition(const std::array<Complex, 4>& c) {
  double norm = 0.0;
  for (const Complex& x : c) norm += std::norm(x);
  if (!(std::abs(norm - 1.0) <= kActiveBlockTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "amplitudes are not normalized: sum |c|^2 = " << norm;
    throw ConfigError(msg.str());
  }
  Eigen::Matrix4cd r;
  for (int n = 0; n < 4; ++n) {
    for (int k = 0; k < 4; ++k) r(n, k) = std::conj(c[static_cast<std::size_t>(n)]) * c[static_cast<std::size_t>(k)];
  }
  return ActiveBlock{r};
}

DeviationMatrix thermal_deviation(const SpinSystemConfig& cfg, const ActiveBlock& active) {
  cfg.validate();
  if (cfg.n_spins != 4) {
    throw ConfigError("the prepared ensemble state is defined for 4 spins, got " +
                      std::to_string(cfg.n_spins));
  }
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(16, 16);
  r.topLeftCorner<4, 4>() = active.matrix();
  for (std::size_t p = 0; p < kPassiveDiagonal.size(); ++p) {
    const auto n = static_cast<Eigen::Index>(4 + p);
    r(n, n) = kPassiveDiagonal[p];
  }
  return DeviationMatrix{std::move(r)};
}

}  // namespace isingcn
