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

#include <benchmark/benchmark.h>

#include "isingcn/evolution.hpp"
#include "isingcn/operators.hpp"
#include "isingcn/states.hpp"

namespace {

using namespace isingcn;

const SpinSystemConfig kConfig = SpinSystemConfig::reference();

static void BM_BuildHamiltonian(benchmark::State& state) {
  for (auto _ : state) {
    auto h = build_hamiltonian(kConfig);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(BM_BuildHamiltonian);

// Cost per RK4 step, amortized over a 1000-step run.
static void BM_StepIntegrator(benchmark::State& state) {
  const auto frame = static_cast<StepFrame>(state.range(0));
  const OperatorMatrix h = build_hamiltonian(kConfig);
  const DeviationMatrix rho0 = thermal_deviation(kConfig, digital_active(0));
  const StepOptions options{1e-3, 1000, frame};
  for (auto _ : state) {
    auto traj = evolve_step(h, rho0, 1.0, options);
    benchmark::DoNotOptimize(traj.final_state.matrix().data());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
  state.SetLabel(frame == StepFrame::kInteraction ? "interaction" : "rotating");
}
BENCHMARK(BM_StepIntegrator)->Arg(static_cast<int>(StepFrame::kInteraction))->Arg(static_cast<int>(StepFrame::kRotating));

static void BM_StepIntegratorBySpins(benchmark::State& state) {
  SpinSystemConfig cfg;
  cfg.n_spins = static_cast<int>(state.range(0));
  cfg.omega.clear();
  for (int a = 0; a < cfg.n_spins; ++a) cfg.omega.push_back(100.0 * (a + 1));
  const OperatorMatrix h = build_hamiltonian(cfg);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
  r(0, 0) = 1.0;
  const DeviationMatrix rho0{r};
  const StepOptions options{1e-3, 100, StepFrame::kInteraction};
  for (auto _ : state) {
    auto traj = evolve_step(h, rho0, 0.1, options);
    benchmark::DoNotOptimize(traj.final_state.matrix().data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_StepIntegratorBySpins)->DenseRange(2, 7);

static void BM_ExactPropagator(benchmark::State& state) {
  const OperatorMatrix h = build_hamiltonian(kConfig);
  const DeviationMatrix rho0 = thermal_deviation(kConfig, digital_active(0));
  for (auto _ : state) {
    auto rho = evolve_exact(h, rho0, 31.4);
    benchmark::DoNotOptimize(rho.matrix().data());
  }
}
BENCHMARK(BM_ExactPropagator);

}  // namespace

BENCHMARK_MAIN();
