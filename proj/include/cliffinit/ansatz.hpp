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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliffinit/pauli.hpp"
#include "cliffinit/stabilizer.hpp"

namespace cliffinit {

/// Rotation generators. R_A(theta) = exp(-i theta A / 2), with A = Z (x) Z for RZZ.
enum class RotationAxis : std::uint8_t { RX, RY, RZ, RZZ };

std::string_view axis_name(RotationAxis axis);

struct FixedSlot {
  CliffordGate gate;
};

struct RotationSlot {
  RotationAxis axis;
  std::uint32_t q0;
  std::uint32_t q1 = 0;  // RZZ only
  std::uint32_t param;
  bool negated = false;  // angle is -theta[param]
};

using GateSlot = std::variant<FixedSlot, RotationSlot>;

enum class AnsatzFamily { Real, Trotter, Qaoa, Custom };

std::string_view family_name(AnsatzFamily family);

/// A gate program whose rotation slots read angles from a parameter vector.
class Ansatz {
 public:
  /// Validates qubit indices, that every parameter in [0, n_params) is used,
  /// and (for Real/Trotter) that no parameter is shared between slots.
  Ansatz(std::size_t n_qubits, std::size_t n_params, std::vector<GateSlot> slots, AnsatzFamily family);

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t num_params() const { return n_params_; }
  std::span<const GateSlot> slots() const { return slots_; }
  AnsatzFamily family() const { return family_; }
  std::size_t num_rotation_slots() const;

 private:
  std::size_t n_qubits_;
  std::size_t n_params_;
  std::vector<GateSlot> slots_;
  AnsatzFamily family_;
};

/// A Clifford point: entry m stands for the angle m * pi / 2.
class QuarterTurns {
 public:
  QuarterTurns() = default;
  explicit QuarterTurns(std::vector<std::uint8_t> values);
  static QuarterTurns zeros(std::size_t n) { return QuarterTurns(std::vector<std::uint8_t>(n, 0)); }

  std::size_t size() const { return values_.size(); }
  std::uint8_t operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, int m) { values_[i] = static_cast<std::uint8_t>(((m % 4) + 4) % 4); }
  std::span<const std::uint8_t> values() const { return values_; }
  std::vector<double> radians() const;

  friend bool operator==(const QuarterTurns&, const QuarterTurns&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

Ansatz build_real_ansatz(std::size_t n_qubits, std::size_t depth);
Ansatz build_trotter_ansatz(std::size_t n_qubits, std::size_t depth);
Ansatz build_qaoa_ansatz(const Hamiltonian& h, std::size_t depth);

/// Reads a custom gate list. Accepts either a bare array of slot records or an
/// object {"n_qubits": n, "slots": [...]}; a record is
/// {"fixed": {"kind": "CX", "qubits": [0, 1]}} or
/// {"rot": {"axis": "RY", "qubits": [0], "param": 3}}.
Ansatz parse_custom_ansatz(std::string_view json_text);

/// Gate list realizing the ansatz at q, in application order. Zero rotations
/// are omitted and global phases dropped.
std::vector<CliffordGate> compile_clifford(const Ansatz& a, const QuarterTurns& q);

/// Appends the Clifford gates of one rotation slot turned by m quarter turns.
void append_rotation(std::vector<CliffordGate>& out, const RotationSlot& slot, int m);

double clifford_energy(const Ansatz& a, const QuarterTurns& q, const Hamiltonian& h);

/// Parameter-shift gradient at a Clifford point. For a parameter shared by
/// several slots, the per-slot shifts are summed.
std::vector<double> clifford_gradient(const Ansatz& a, const QuarterTurns& q, const Hamiltonian& h);

/// Reusable compile-and-evaluate pipeline. Holds the gate buffer and tableau
/// between calls, so repeated evaluations do not allocate.
class CliffordEvaluator {
 public:
  CliffordEvaluator(const Ansatz& a, const Hamiltonian& h);

  double operator()(const QuarterTurns& q);
  /// Energy with rotation slot `slot` turned by `delta` extra quarter turns.
  double shifted(const QuarterTurns& q, std::size_t slot, int delta);

  /// Tableau left by the most recent evaluation.
  const Tableau& tableau() const { return tableau_; }
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  double run(const QuarterTurns& q, std::optional<std::size_t> slot, int delta);

  const Ansatz& ansatz_;
  const Hamiltonian& hamiltonian_;
  std::vector<CliffordGate> gates_;
  Tableau tableau_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace cliffinit
