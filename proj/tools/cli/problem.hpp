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

#ifndef CLIFFINIT_TOOLS_CLI_PROBLEM_HPP_
#define CLIFFINIT_TOOLS_CLI_PROBLEM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "handles.hpp"
#include "json.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

struct EdgeSpec {
  uint32_t u = 0;
  uint32_t v = 0;
  int64_t weight = 1;
};

// One fully resolved Hamiltonian + ansatz choice.
struct ProblemSpec {
  std::string model;  // tfim | maxcut | file
  std::string path;
  size_t n = 0;
  double J = 1.0;
  double gx = 1.0;
  double gz = 0.0;
  std::vector<EdgeSpec> edges;
  std::string ansatz = "real";  // real | trotter | qaoa | custom
  std::string custom_path;
  size_t depth = 1;
};

struct Problem {
  Hamiltonian hamiltonian;
  Ansatz ansatz;
};

Problem build_problem(const ProblemSpec& spec);
Hamiltonian build_hamiltonian(const ProblemSpec& spec);

Json problem_to_json(const ProblemSpec& spec);
ProblemSpec problem_from_json(const Json& j);

// `lo:hi:count` (inclusive, linear) or a comma list of numbers.
std::vector<double> parse_axis(const std::string& text, const std::string& flag);
std::vector<size_t> parse_count_axis(const std::string& text, const std::string& flag);
double parse_beta(const std::string& text);
std::vector<EdgeSpec> parse_edges(const std::string& text);
std::vector<EdgeSpec> read_graph_file(const std::string& path);

std::string format_double(double v);
std::string read_file(const std::string& path);

}  // namespace cli

#endif  // CLIFFINIT_TOOLS_CLI_PROBLEM_HPP_
