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
#include <string>
#include <string_view>
#include <vector>

#include "cliffinit/pauli.hpp"

namespace cliffinit {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Y, Z, CX, CZ };

std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

struct CliffordGate {
  GateKind kind;
  std::uint32_t q0;
  std::uint32_t q1 = 0;  // target for CX, second qubit for CZ; unused otherwise

  static CliffordGate single(GateKind kind, std::uint32_t q) { return {kind, q, 0}; }
  static CliffordGate pair(GateKind kind, std::uint32_t a, std::uint32_t b) { return {kind, a, b}; }

  friend bool operator==(const CliffordGate&, const CliffordGate&) = default;
};

std::string to_string(const CliffordGate& gate);

/// Destabilizer/stabilizer generator table of an n-qubit stabilizer state.
///
/// Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers; each row stores
/// packed x/z words plus a sign bit. Gates are applied in place by
/// conjugating every row.
class Tableau {
 public:
  /// The tableau of |0...0>: destabilizer i = X_i, stabilizer i = Z_i.
  explicit Tableau(std::size_t n_qubits);

  std::size_t num_qubits() const { return n_; }

  void apply(const CliffordGate& gate);
  void apply_all(const std::vector<CliffordGate>& gates) {
    for (const auto& g : gates) apply(g);
  }

  /// Row i (0 <= i < 2n) as a Pauli string with phase 0 or 2.
  PauliString row(std::size_t i) const;
  PauliString destabilizer(std::size_t i) const { return row(i); }
  PauliString stabilizer(std::size_t i) const { return row(n_ + i); }

  /// <psi|P|psi> for a phase-free P: 0, +1 or -1.
  int expectation(const PauliString& p) const;

  /// Restores |0...0> without reallocating.
  void reset();

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::uint64_t* xrow(std::size_t r) { return xs_.data() + r * words_; }
  std::uint64_t* zrow(std::size_t r) { return zs_.data() + r * words_; }
  const std::uint64_t* xrow(std::size_t r) const { return xs_.data() + r * words_; }
  const std::uint64_t* zrow(std::size_t r) const { return zs_.data() + r * words_; }

  void check_qubit(std::uint32_t q) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::vector<std::uint8_t> signs_;
};

Tableau new_tableau(std::size_t n_qubits);
Tableau apply_gate(Tableau t, const CliffordGate& gate);
int expectation_pauli(const Tableau& t, const PauliString& p);
double energy(const Tableau& t, const Hamiltonian& h);

/// Checks every structural invariant of a tableau: commutation relations
/// between rows, Hermitian signs, and full symplectic rank. Returns an empty
/// string when all hold, otherwise a description of the first violation.
std::string check_invariants(const Tableau& t);

}  // namespace cliffinit
