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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cliffinit/pauli.hpp"

namespace cliffinit {

struct TfimParams {
  std::size_t n;
  double J = 1.0;
  double g_x = 0.0;
  double g_z = 0.0;
};

/// Open-chain transverse-field Ising model
///   sum_{i<n-1} J Z_i Z_{i+1} + sum_i (g_x X_i + g_z Z_i).
Hamiltonian tfim_hamiltonian(const TfimParams& p);

struct Edge {
  std::uint32_t u;
  std::uint32_t v;
  std::int64_t weight = 1;
};

struct Graph {
  std::size_t n;
  std::vector<Edge> edges;
};

/// sum_{(i,j)} w_ij Z_i Z_j. Its minimum is reached on a maximum cut.
Hamiltonian maxcut_hamiltonian(const Graph& g);

/// Cut value of a logical basis state (bit q of `assignment` is vertex q's side).
std::int64_t cut_value(const Graph& g, std::uint64_t assignment);

struct Fixture {
  Hamiltonian hamiltonian;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::filesystem::path path;

  /// Header value for `key`, or empty.
  std::string meta(const std::string& key) const;
};

Fixture load_chemistry_fixture(const std::filesystem::path& path);

}  // namespace cliffinit
