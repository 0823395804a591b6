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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "handles.hpp"

namespace {

enum Group : unsigned {
  kProblem = 1,
  kAnneal = 2,
  kSeeds = 4,
  kTrajectory = 8,
  kSpsa = 16,
  kSweep = 32,
};

void add_flags(CLI::App* app, cli::Flags& f, unsigned groups) {
  if (groups & kProblem) {
    app->add_option("--model", f.model, "Built-in model")->check(CLI::IsMember({"tfim", "maxcut"}));
    app->add_option("--hamiltonian", f.hamiltonian, "Hamiltonian file (coefficient + Pauli string per line)");
    app->add_option("--n", f.n, "Qubit count (TFIM) or vertex count (MAXCUT)");
    app->add_option("--J", f.J, "TFIM ZZ coupling")->capture_default_str();
    app->add_option("--gx", f.gx, "TFIM transverse field")->capture_default_str();
    app->add_option("--gz", f.gz, "TFIM longitudinal field")->capture_default_str();
    app->add_option("--edges", f.edges, "MAXCUT edges as u-v or u-v:w, comma separated");
    app->add_option("--graph", f.graph, "MAXCUT edge-list file, one 'u v [w]' per line");
    app->add_option("--ansatz", f.ansatz, "real | trotter | qaoa | custom:<file>")->capture_default_str();
    app->add_option("--depth", f.depth, "Ansatz layers")->capture_default_str();
  }
  if (groups & kAnneal) {
    app->add_option("--iters", f.iters, "Annealing iterations")->capture_default_str();
    app->add_option("--beta", f.beta, "Inverse temperature, number or 'inf'")->capture_default_str();
    app->add_option("--reset-k", f.reset_k, "Stagnation threshold before a random restart")->capture_default_str();
  }
  app->add_option("--seed", f.seed, "Base seed")->capture_default_str()->each([&f](const std::string&) {
    f.seed_given = true;
  });
  app->add_option("--threads", f.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--out", f.out, "Output file (default stdout)");
  if (groups & kSeeds) app->add_option("--seeds", f.seeds, "Runs per point, seeded base+row")->capture_default_str();
  if (groups & kTrajectory) app->add_option("--trajectory", f.trajectory, "Write the annealing trajectory as JSONL");
  if (groups & kSpsa) {
    app->add_option("--spsa-rounds", f.spsa_rounds, "SPSA rounds from the best Clifford point")
        ->each([&f](const std::string&) { f.spsa_given = true; });
  }
  if (groups & (kAnneal | kSweep)) {
    app->add_flag("--no-exact", f.no_exact, "Skip exact diagonalization");
    app->add_flag("--timing", f.timing, "Include wall-clock time in RunRecords");
  }
  if (groups & kSweep) {
    app->add_option("--fixtures", f.fixtures, "Hamiltonian files or directories of .ham files");
    app->add_option("--svg", f.svg, "Also write a minimal SVG plot");
    app->add_flag("--extrapolate", f.extrapolate,
                  "Add an extrapolated_ground column: TFIM ground energy above the dense cap, linear in n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-point pre-optimisation for variational circuits"};
  app.set_version_flag("--version", cliffinit_version());
  app.require_subcommand(1);
  cli::Flags f;

  auto* anneal = app.add_subcommand("anneal", "Anneal over Clifford points and print RunRecords (JSON lines)");
  add_flags(anneal, f, kProblem | kAnneal | kSeeds | kTrajectory | kSpsa);
  auto* sweep = app.add_subcommand("sweep", "Anneal over a parameter grid and print CSV rows");
  add_flags(sweep, f, kProblem | kAnneal | kSeeds | kSpsa | kSweep | kTrajectory);
  auto* compare = app.add_subcommand("compare-terms", "Per-term stabilizer vs exact ground-state expectations");
  add_flags(compare, f, kProblem | kAnneal);
  auto* count = app.add_subcommand("count", "Stabilizer-state counts and the nonzero-energy bound");
  add_flags(count, f, kProblem);
  auto* refine = app.add_subcommand("refine", "SPSA refinement starting from saved RunRecords");
  add_flags(refine, f, kSpsa);
  refine->add_option("--record", f.record, "RunRecord file (JSON or JSON lines)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*anneal) return cli::cmd_anneal(f);
    if (*sweep) return cli::cmd_sweep(f);
    if (*compare) return cli::cmd_compare_terms(f);
    if (*count) return cli::cmd_count(f);
    return cli::cmd_refine(f);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
