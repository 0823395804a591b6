// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cliffinit/ansatz.hpp"
#include "cliffinit/pauli.hpp"
#include "cliffinit/random.hpp"

namespace cliffinit {

struct AnnealConfig {
  std::uint64_t max_iterations = 10000;
  /// Inverse temperature in 1/energy units; infinity means zero temperature.
  double beta = std::numeric_limits<double>::infinity();
  /// Reset after this many consecutive candidates that fail to improve on the
  /// best energy seen since the last reset.
  std::uint64_t reset_threshold_k = 500;
  std::uint64_t seed = 0;
  bool record_trajectory = false;

  void validate() const;
};

struct TrajectoryEntry {
  std::uint64_t iteration;  // 1-based
  double candidate_energy;
  bool accepted;
  bool reset;         // a fresh random point was drawn after this iteration
  double best_so_far;  // global best, including any reset point
};

struct AnnealResult {
  QuarterTurns best_point;
  double best_energy = 0.0;
  std::uint64_t iterations_run = 0;
  std::uint64_t n_resets = 0;
  /// Always max_iterations + 1 + n_resets.
  std::uint64_t n_evaluations = 0;
  std::vector<TrajectoryEntry> trajectory;
};

/// Changes exactly two distinct, uniformly chosen entries, each to one of its
/// three other values.
QuarterTurns propose_move(const QuarterTurns& q, Rng& rng);

/// Metropolis rule: downhill and flat moves always pass, uphill moves pass
/// with probability exp(-beta * delta_e). Uniform draws are only consumed for
/// uphill moves at finite beta.
bool metropolis_accept(double delta_e, double beta, Rng& rng);

/// Simulated annealing over the quarter-turn lattice with threshold resets.
AnnealResult anneal_run(const Ansatz& a, const Hamiltonian& h, const AnnealConfig& cfg);

}  // namespace cliffinit
