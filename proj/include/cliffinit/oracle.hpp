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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cliffinit/ansatz.hpp"
#include "cliffinit/pauli.hpp"
#include "cliffinit/stabilizer.hpp"

namespace cliffinit {

/// Dense 2^n amplitude vector. Basis index bit q holds the value of qubit q.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 16;

  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  /// Takes ownership of `amplitudes` (length 2^n) and normalizes them.
  StateVector(std::size_t n_qubits, std::vector<std::complex<double>> amplitudes);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::size_t basis) const { return amps_[basis]; }
  double norm() const;

  void apply(const CliffordGate& gate);
  void apply_rotation(RotationAxis axis, std::uint32_t q0, std::uint32_t q1, double theta);

  /// <psi|P|psi> for a phase-free P, by bit-mask traversal.
  std::complex<double> expectation(const PauliString& p) const;

 private:
  void check_qubit(std::uint32_t q) const;

  std::size_t n_;
  std::vector<std::complex<double>> amps_;
};

/// Applies every slot of the ansatz to |0...0> with continuous angles theta.
StateVector simulate_statevector(const Ansatz& a, std::span<const double> theta);

double exact_energy(const StateVector& s, const Hamiltonian& h);

/// Largest register handled by dense diagonalization.
inline constexpr std::size_t kDenseQubitCap = 12;

/// The n_lowest smallest eigenvalues of H in ascending order.
std::vector<double> exact_diagonalize(const Hamiltonian& h, std::size_t n_lowest);

struct GroundState {
  double energy;
  StateVector state;
};
GroundState exact_ground_state(const Hamiltonian& h);

struct SpsaConfig {
  std::size_t rounds = 200;
  /// Step gain; calibrated from the initial gradient scale when unset.
  std::optional<double> a;
  double c = 0.1;
  /// Stability constant; rounds / 10 when unset.
  std::optional<double> stability;
  double alpha = 0.602;
  double gamma = 0.101;
  std::uint64_t seed = 0;
  /// Calibration target for the magnitude of the first update, in radians.
  double target_step = 0.1;
  std::size_t calibration_samples = 10;

  void validate() const;
};

struct SpsaResult {
  std::vector<double> theta;  // best iterate, radians
  double energy;              // energy at theta
  double start_energy;
  std::size_t evaluations;
};

/// Two-measurement SPSA on the statevector energy, starting from a Clifford
/// point. Returns the best iterate seen, so energy <= start_energy.
SpsaResult spsa_refine(const Ansatz& a, const QuarterTurns& start, const Hamiltonian& h, const SpsaConfig& cfg);

/// Per-term <P_i> in Hamiltonian term order.
std::vector<double> term_expectations(const StateVector& s, const Hamiltonian& h);
std::vector<double> term_expectations(const Tableau& t, const Hamiltonian& h);

}  // namespace cliffinit
