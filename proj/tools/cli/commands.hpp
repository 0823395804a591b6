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

#ifndef CLIFFINIT_TOOLS_CLI_COMMANDS_HPP_
#define CLIFFINIT_TOOLS_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cli {

// Raw flag values; numeric axes stay strings so `sweep` can accept grids.
struct Flags {
  std::string model;
  std::string hamiltonian;
  std::string n;
  std::string J = "1";
  std::string gx = "1";
  std::string gz = "0";
  std::string edges;
  std::string graph;
  std::string ansatz = "real";
  std::string depth = "1";
  uint64_t iters = 10000;
  std::string beta = "inf";
  uint64_t reset_k = 500;
  uint64_t seed = 0;
  bool seed_given = false;
  size_t seeds = 1;
  size_t threads = 1;
  std::string out;
  std::string trajectory;
  size_t spsa_rounds = 0;
  bool spsa_given = false;
  bool timing = false;
  bool no_exact = false;
  std::vector<std::string> fixtures;
  std::string svg;
  bool extrapolate = false;
  std::string record;
};

int cmd_anneal(const Flags& f);
int cmd_sweep(const Flags& f);
int cmd_compare_terms(const Flags& f);
int cmd_count(const Flags& f);
int cmd_refine(const Flags& f);

}  // namespace cli

#endif  // CLIFFINIT_TOOLS_CLI_COMMANDS_HPP_
