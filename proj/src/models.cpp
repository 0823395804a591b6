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

#include "cliffinit/models.hpp"

#include <fstream>
#include <set>

#include "cliffinit/error.hpp"

namespace cliffinit {

Hamiltonian tfim_hamiltonian(const TfimParams& p) {
  if (p.n < 2) fail(ErrorCode::kInvalidArgument, "the TFIM chain needs at least two sites");
  std::vector<PauliTerm> terms;
  auto single = [&](std::size_t q, bool x, bool z) {
    PauliString s(p.n);
    s.set(q, x, z);
    return s;
  };
  if (p.J != 0.0) {
    for (std::size_t i = 0; i + 1 < p.n; ++i) {
      PauliString s = single(i, false, true);
      s.set(i + 1, false, true);
      terms.push_back({p.J, std::move(s)});
    }
  }
  if (p.g_x != 0.0) {
    for (std::size_t i = 0; i < p.n; ++i) terms.push_back({p.g_x, single(i, true, false)});
  }
  if (p.g_z != 0.0) {
    for (std::size_t i = 0; i < p.n; ++i) terms.push_back({p.g_z, single(i, false, true)});
  }
  return Hamiltonian(p.n, std::move(terms));
}

namespace {

void validate_graph(const Graph& g) {
  if (g.n == 0) fail(ErrorCode::kInvalidArgument, "graph has no vertices");
  if (g.edges.empty()) fail(ErrorCode::kInvalidArgument, "graph has no edges");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v) fail(ErrorCode::kInvalidArgument, "self-loop on vertex " + std::to_string(e.u));
    if (e.u >= g.n || e.v >= g.n) fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      fail(ErrorCode::kInvalidArgument,
           "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
  }
}

}  // namespace

Hamiltonian maxcut_hamiltonian(const Graph& g) {
  validate_graph(g);
  std::vector<PauliTerm> terms;
  for (const auto& e : g.edges) {
    PauliString s(g.n);
    s.set(e.u, false, true);
    s.set(e.v, false, true);
    terms.push_back({static_cast<double>(e.weight), std::move(s)});
  }
  return Hamiltonian(g.n, std::move(terms));
}

std::int64_t cut_value(const Graph& g, std::uint64_t assignment) {
  std::int64_t total = 0;
  for (const auto& e : g.edges) {
    if (((assignment >> e.u) & 1) != ((assignment >> e.v) & 1)) total += e.weight;
  }
  return total;
}

std::string Fixture::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

Fixture load_chemistry_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open Hamiltonian file " + path.string());
  try {
    auto parsed = parse_hamiltonian_file(in);
    return {std::move(parsed.hamiltonian), std::move(parsed.metadata), path};
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace cliffinit
