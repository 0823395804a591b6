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

#ifndef CLIFFINIT_TOOLS_CLI_RUN_HPP_
#define CLIFFINIT_TOOLS_CLI_RUN_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "problem.hpp"

namespace cli {

struct AnnealSettings {
  uint64_t iterations = 10000;
  double beta = std::numeric_limits<double>::infinity();
  uint64_t reset_k = 500;
};

struct RunOptions {
  bool trajectory = false;
  std::optional<size_t> spsa_rounds;
  bool exact = true;
  bool timing = false;
};

struct Refinement {
  double energy = 0;
  double start_energy = 0;
  std::vector<double> theta;
};

struct RunOutcome {
  Json record;
  std::vector<cliffinit_trajectory_entry> trajectory;
  double best_energy = 0;
  std::vector<uint8_t> best_point;
  std::optional<double> exact_ground;
  std::optional<Refinement> refinement;
  uint64_t evaluations = 0;
};

// Exact ground energy, or nothing above the dense cap.
std::optional<double> exact_ground_energy(const cliffinit_hamiltonian* h);

Refinement refine(const Problem& p, const std::vector<uint8_t>& start, size_t rounds, uint64_t seed);

RunOutcome execute_run(const ProblemSpec& spec, const AnnealSettings& settings, uint64_t seed,
                       const RunOptions& options, std::optional<std::optional<double>> known_exact = {});

Json anneal_settings_to_json(const AnnealSettings& s);
AnnealSettings anneal_settings_from_json(const Json& j);
std::string run_id(const Json& config, uint64_t seed);
std::string trajectory_line(uint64_t seed, const cliffinit_trajectory_entry& e);

}  // namespace cli

#endif  // CLIFFINIT_TOOLS_CLI_RUN_HPP_
