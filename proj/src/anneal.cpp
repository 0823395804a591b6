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

#include "cliffinit/anneal.hpp"

#include <cmath>
#include <string>

#include "cliffinit/error.hpp"

namespace cliffinit {

void AnnealConfig::validate() const {
  if (max_iterations == 0) fail(ErrorCode::kInvalidArgument, "max_iterations must be at least 1");
  if (reset_threshold_k == 0) fail(ErrorCode::kInvalidArgument, "reset threshold k must be at least 1");
  if (!(beta > 0)) fail(ErrorCode::kInvalidArgument, "beta must be positive or infinite");
}

namespace {

QuarterTurns random_point(std::size_t n, Rng& rng) {
  std::vector<std::uint8_t> values(n);
  for (auto& v : values) v = static_cast<std::uint8_t>(rng.below(4));
  return QuarterTurns(std::move(values));
}

}  // namespace

QuarterTurns propose_move(const QuarterTurns& q, Rng& rng) {
  const std::size_t n = q.size();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "pair moves need at least two parameters");
  const std::size_t i = rng.below(n);
  std::size_t j = rng.below(n - 1);
  if (j >= i) ++j;
  QuarterTurns out = q;
  out.set(i, q[i] + 1 + static_cast<int>(rng.below(3)));
  out.set(j, q[j] + 1 + static_cast<int>(rng.below(3)));
  return out;
}

bool metropolis_accept(double delta_e, double beta, Rng& rng) {
  if (delta_e <= 0) return true;
  if (std::isinf(beta)) return false;
  return rng.uniform() < std::exp(-beta * delta_e);
}

AnnealResult anneal_run(const Ansatz& a, const Hamiltonian& h, const AnnealConfig& cfg) {
  cfg.validate();
  if (a.num_params() < 2) {
    fail(ErrorCode::kInvalidArgument, "annealing needs an ansatz with at least two parameters");
  }
  CliffordEvaluator evaluate(a, h);
  Rng rng(cfg.seed);

  QuarterTurns current = random_point(a.num_params(), rng);
  double current_energy = evaluate(current);

  AnnealResult result;
  result.best_point = current;
  result.best_energy = current_energy;
  if (cfg.record_trajectory) result.trajectory.reserve(cfg.max_iterations);

  double best_since_reset = current_energy;
  std::uint64_t stagnant = 0;

  for (std::uint64_t it = 1; it <= cfg.max_iterations; ++it) {
    QuarterTurns candidate = propose_move(current, rng);
    const double candidate_energy = evaluate(candidate);
    const bool accepted = metropolis_accept(candidate_energy - current_energy, cfg.beta, rng);

    if (candidate_energy < best_since_reset) {
      best_since_reset = candidate_energy;
      stagnant = 0;
    } else {
      ++stagnant;
    }
    if (candidate_energy < result.best_energy) {
      result.best_energy = candidate_energy;
      result.best_point = candidate;
    }
    if (accepted) {
      current = std::move(candidate);
      current_energy = candidate_energy;
    }

    bool reset = false;
    if (stagnant >= cfg.reset_threshold_k) {
      reset = true;
      ++result.n_resets;
      stagnant = 0;
      current = random_point(a.num_params(), rng);
      current_energy = evaluate(current);
      best_since_reset = current_energy;
      if (current_energy < result.best_energy) {
        result.best_energy = current_energy;
        result.best_point = current;
      }
    }
    if (cfg.record_trajectory) {
      result.trajectory.push_back({it, candidate_energy, accepted, reset, result.best_energy});
    }
    result.iterations_run = it;
  }
  result.n_evaluations = evaluate.evaluations();
  return result;
}

}  // namespace cliffinit
