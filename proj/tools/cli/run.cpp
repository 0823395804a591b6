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

#include "run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace cli {

std::optional<double> exact_ground_energy(const cliffinit_hamiltonian* h) {
  if (cliffinit_hamiltonian_num_qubits(h) > cliffinit_dense_qubit_cap()) return std::nullopt;
  double e = 0;
  check(cliffinit_exact_diagonalize(h, 1, &e));
  return e;
}

Refinement refine(const Problem& p, const std::vector<uint8_t>& start, size_t rounds, uint64_t seed) {
  cliffinit_spsa_config cfg;
  cliffinit_spsa_config_init(&cfg);
  cfg.rounds = rounds;
  cfg.seed = seed;
  Refinement r;
  r.theta.resize(start.size());
  check(cliffinit_spsa_refine(p.ansatz.get(), p.hamiltonian.get(), start.data(), start.size(), &cfg, r.theta.data(),
                              r.theta.size(), &r.energy, &r.start_energy));
  return r;
}

Json anneal_settings_to_json(const AnnealSettings& s) {
  Json j;
  j["iterations"] = s.iterations;
  if (std::isinf(s.beta)) {
    j["beta"] = "inf";
  } else {
    j["beta"] = s.beta;
  }
  j["reset_k"] = s.reset_k;
  return j;
}

AnnealSettings anneal_settings_from_json(const Json& j) {
  AnnealSettings s;
  s.iterations = j.at("iterations").get<uint64_t>();
  const Json& beta = j.at("beta");
  s.beta = beta.is_string() ? parse_beta(beta.get<std::string>()) : beta.get<double>();
  s.reset_k = j.at("reset_k").get<uint64_t>();
  return s;
}

std::string run_id(const Json& config, uint64_t seed) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx-s%llu", static_cast<unsigned long long>(hash),
                static_cast<unsigned long long>(seed));
  return buf;
}

std::string trajectory_line(uint64_t seed, const cliffinit_trajectory_entry& e) {
  Json j;
  j["seed"] = seed;
  j["it"] = e.iteration;
  j["E"] = e.candidate_energy;
  j["acc"] = e.accepted != 0;
  j["reset"] = e.reset != 0;
  j["best"] = e.best_so_far;
  return j.dump();
}

RunOutcome execute_run(const ProblemSpec& spec, const AnnealSettings& settings, uint64_t seed,
                       const RunOptions& options, std::optional<std::optional<double>> known_exact) {
  const auto start = std::chrono::steady_clock::now();
  const Problem p = build_problem(spec);
  cliffinit_anneal_config cfg;
  cliffinit_anneal_config_init(&cfg);
  cfg.max_iterations = settings.iterations;
  cfg.beta = settings.beta;
  cfg.reset_threshold_k = settings.reset_k;
  cfg.seed = seed;
  cfg.record_trajectory = options.trajectory ? 1 : 0;
  const auto result = make<AnnealResult>(
      [&](auto** out) { return cliffinit_anneal(p.ansatz.get(), p.hamiltonian.get(), &cfg, out); });

  RunOutcome out;
  out.best_energy = cliffinit_anneal_result_best_energy(result.get());
  out.best_point.resize(cliffinit_anneal_result_num_params(result.get()));
  check(cliffinit_anneal_result_best_point(result.get(), out.best_point.data(), out.best_point.size()));
  out.evaluations = cliffinit_anneal_result_evaluations(result.get());
  const size_t traj_len = cliffinit_anneal_result_trajectory_length(result.get());
  out.trajectory.resize(traj_len);
  for (size_t i = 0; i < traj_len; ++i) {
    check(cliffinit_anneal_result_trajectory_entry(result.get(), i, &out.trajectory[i]));
  }
  if (known_exact) {
    out.exact_ground = *known_exact;
  } else if (options.exact) {
    out.exact_ground = exact_ground_energy(p.hamiltonian.get());
  }
  if (options.spsa_rounds) out.refinement = refine(p, out.best_point, *options.spsa_rounds, seed);

  Json config = problem_to_json(spec);
  config["anneal"] = anneal_settings_to_json(settings);
  config["seed"] = seed;
  Json& r = out.record;
  r["run_id"] = run_id(config, seed);
  r["config"] = config;
  r["n_qubits"] = cliffinit_hamiltonian_num_qubits(p.hamiltonian.get());
  r["n_params"] = out.best_point.size();
  r["best_energy"] = out.best_energy;
  r["best_point"] = out.best_point;
  if (spec.model == "maxcut") {
    std::vector<double> weights;
    term_letters(p.hamiltonian.get(), &weights);
    double total = 0;
    for (double w : weights) total += w;
    r["best_cut"] = (total - out.best_energy) / 2;
  }
  r["exact_ground"] = out.exact_ground ? Json(*out.exact_ground) : Json(nullptr);
  if (out.refinement) {
    r["spsa"] = Json{{"rounds", *options.spsa_rounds},
                     {"start_energy", out.refinement->start_energy},
                     {"refined_energy", out.refinement->energy},
                     {"theta", out.refinement->theta}};
  } else {
    r["spsa"] = nullptr;
  }
  r["evaluations"] = out.evaluations;
  r["iterations"] = cliffinit_anneal_result_iterations(result.get());
  r["resets"] = cliffinit_anneal_result_resets(result.get());
  if (options.timing) {
    r["wall_clock_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace cli
