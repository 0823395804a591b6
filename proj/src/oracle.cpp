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

#include "cliffinit/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "cliffinit/error.hpp"
#include "cliffinit/random.hpp"

namespace cliffinit {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

struct Masks {
  std::uint64_t x = 0, z = 0;
  int n_y = 0;
};

Masks masks_of(const PauliString& p) {
  Masks m;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.x(q)) m.x |= std::uint64_t{1} << q;
    if (p.z(q)) m.z |= std::uint64_t{1} << q;
    m.n_y += p.x(q) && p.z(q);
  }
  return m;
}

cplx i_pow(int k) {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[k & 3];
}

void require_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    fail(ErrorCode::kSizeMismatch, std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b) + " qubits");
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits == 0) fail(ErrorCode::kInvalidArgument, "a state needs at least one qubit");
  if (n_qubits > kMaxQubits) {
    fail(ErrorCode::kCapacity, "statevector limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                                   std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes) : StateVector(n_qubits) {
  if (amplitudes.size() != amps_.size()) {
    fail(ErrorCode::kSizeMismatch, "expected " + std::to_string(amps_.size()) + " amplitudes");
  }
  amps_ = std::move(amplitudes);
  const double nrm = norm();
  if (!(nrm > 0)) fail(ErrorCode::kInvalidArgument, "cannot normalize a zero vector");
  for (auto& a : amps_) a /= nrm;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::check_qubit(std::uint32_t q) const {
  if (q >= n_) fail(ErrorCode::kInvalidArgument, "qubit " + std::to_string(q) + " out of range");
}

void StateVector::apply(const CliffordGate& gate) {
  check_qubit(gate.q0);
  const std::size_t ma = std::size_t{1} << gate.q0;
  const std::size_t dim = amps_.size();
  if (is_two_qubit(gate.kind)) {
    check_qubit(gate.q1);
    if (gate.q0 == gate.q1) fail(ErrorCode::kInvalidArgument, "two-qubit gate on a single qubit");
    const std::size_t mb = std::size_t{1} << gate.q1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (gate.kind == GateKind::CX) {
        if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[i | mb]);
      } else if ((i & ma) && (i & mb)) {
        amps_[i] = -amps_[i];
      }
    }
    return;
  }
  const double r = std::numbers::sqrt2 / 2;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & ma) continue;
    cplx& a0 = amps_[i];
    cplx& a1 = amps_[i | ma];
    switch (gate.kind) {
      case GateKind::H: {
        const cplx u = a0, v = a1;
        a0 = r * (u + v);
        a1 = r * (u - v);
        break;
      }
      case GateKind::S: a1 *= kI; break;
      case GateKind::Sdg: a1 *= -kI; break;
      case GateKind::X: std::swap(a0, a1); break;
      case GateKind::Y: {
        const cplx u = a0, v = a1;
        a0 = -kI * v;
        a1 = kI * u;
        break;
      }
      case GateKind::Z: a1 = -a1; break;
      default: break;
    }
  }
}

void StateVector::apply_rotation(RotationAxis axis, std::uint32_t q0, std::uint32_t q1, double theta) {
  check_qubit(q0);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx lo = std::polar(1.0, -theta / 2), hi = std::polar(1.0, theta / 2);
  const std::size_t ma = std::size_t{1} << q0;
  const std::size_t dim = amps_.size();
  if (axis == RotationAxis::RZZ) {
    check_qubit(q1);
    if (q0 == q1) fail(ErrorCode::kInvalidArgument, "RZZ needs two distinct qubits");
    const std::size_t mb = std::size_t{1} << q1;
    for (std::size_t i = 0; i < dim; ++i) amps_[i] *= (((i & ma) != 0) == ((i & mb) != 0)) ? lo : hi;
    return;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & ma) continue;
    cplx& a0 = amps_[i];
    cplx& a1 = amps_[i | ma];
    const cplx u = a0, v = a1;
    switch (axis) {
      case RotationAxis::RX:
        a0 = c * u - kI * s * v;
        a1 = -kI * s * u + c * v;
        break;
      case RotationAxis::RY:
        a0 = c * u - s * v;
        a1 = s * u + c * v;
        break;
      case RotationAxis::RZ:
        a0 = lo * u;
        a1 = hi * v;
        break;
      default: break;
    }
  }
}

cplx StateVector::expectation(const PauliString& p) const {
  require_size(p.num_qubits(), n_, "Pauli expectation");
  if (p.phase_exp() != 0) fail(ErrorCode::kInvalidArgument, "expectation requires a phase-free Pauli string");
  const Masks m = masks_of(p);
  // P|b> = i^{n_y} (-1)^{|b & z|} |b ^ x>
  cplx total{};
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    const double sign = (std::popcount(b & m.z) & 1) ? -1.0 : 1.0;
    total += std::conj(amps_[b ^ m.x]) * amps_[b] * sign;
  }
  return total * i_pow(m.n_y);
}

StateVector simulate_statevector(const Ansatz& a, std::span<const double> theta) {
  if (theta.size() != a.num_params()) {
    fail(ErrorCode::kSizeMismatch, "angle vector has " + std::to_string(theta.size()) + " entries but the ansatz has " +
                                       std::to_string(a.num_params()) + " parameters");
  }
  StateVector s(a.num_qubits());
  for (const auto& slot : a.slots()) {
    if (const auto* fixed = std::get_if<FixedSlot>(&slot)) {
      s.apply(fixed->gate);
    } else {
      const auto& rot = std::get<RotationSlot>(slot);
      const double angle = rot.negated ? -theta[rot.param] : theta[rot.param];
      s.apply_rotation(rot.axis, rot.q0, rot.q1, angle);
    }
  }
  return s;
}

double exact_energy(const StateVector& s, const Hamiltonian& h) {
  require_size(h.num_qubits(), s.num_qubits(), "energy");
  double total = 0.0;
  for (const auto& term : h.terms()) total += term.coefficient * s.expectation(term.pauli).real();
  return total;
}

namespace {

bool is_real_hamiltonian(const Hamiltonian& h) {
  return std::all_of(h.terms().begin(), h.terms().end(),
                     [](const PauliTerm& t) { return masks_of(t.pauli).n_y % 2 == 0; });
}

template <typename Matrix>
Matrix dense_matrix(const Hamiltonian& h) {
  using Scalar = typename Matrix::Scalar;
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    const Masks mk = masks_of(term.pauli);
    const cplx prefactor = term.coefficient * i_pow(mk.n_y);
    for (std::size_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & mk.z) & 1) ? -1.0 : 1.0;
      if constexpr (std::is_same_v<Scalar, double>) {
        m(b ^ mk.x, b) += sign * prefactor.real();
      } else {
        m(b ^ mk.x, b) += sign * prefactor;
      }
    }
  }
  return m;
}

void require_dense(const Hamiltonian& h) {
  if (h.num_qubits() > kDenseQubitCap) {
    fail(ErrorCode::kCapacity, "exact diagonalization is capped at " + std::to_string(kDenseQubitCap) +
                                   " qubits, got " + std::to_string(h.num_qubits()));
  }
}

}  // namespace

std::vector<double> exact_diagonalize(const Hamiltonian& h, std::size_t n_lowest) {
  require_dense(h);
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  if (n_lowest == 0 || n_lowest > dim) {
    fail(ErrorCode::kInvalidArgument, "requested " + std::to_string(n_lowest) + " eigenvalues of a " +
                                          std::to_string(dim) + "-dimensional operator");
  }
  Eigen::VectorXd values;
  if (is_real_hamiltonian(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix<Eigen::MatrixXd>(h), Eigen::EigenvaluesOnly);
    values = solver.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix<Eigen::MatrixXcd>(h), Eigen::EigenvaluesOnly);
    values = solver.eigenvalues();
  }
  return std::vector<double>(values.data(), values.data() + n_lowest);
}

GroundState exact_ground_state(const Hamiltonian& h) {
  require_dense(h);
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  std::vector<cplx> amps(dim);
  double e0 = 0.0;
  if (is_real_hamiltonian(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix<Eigen::MatrixXd>(h));
    e0 = solver.eigenvalues()(0);
    for (std::size_t i = 0; i < dim; ++i) amps[i] = solver.eigenvectors()(i, 0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix<Eigen::MatrixXcd>(h));
    e0 = solver.eigenvalues()(0);
    for (std::size_t i = 0; i < dim; ++i) amps[i] = solver.eigenvectors()(i, 0);
  }
  return {e0, StateVector(h.num_qubits(), std::move(amps))};
}

void SpsaConfig::validate() const {
  if (rounds == 0) fail(ErrorCode::kInvalidArgument, "SPSA needs at least one round");
  const bool gains_ok = c > 0 && alpha > 0 && gamma > 0 && target_step > 0 && (!a || *a > 0) &&
                        (!stability || *stability > 0);
  if (!gains_ok) fail(ErrorCode::kInvalidArgument, "SPSA gains must be positive");
  if (calibration_samples == 0) fail(ErrorCode::kInvalidArgument, "SPSA calibration needs at least one sample");
}

SpsaResult spsa_refine(const Ansatz& a, const QuarterTurns& start, const Hamiltonian& h, const SpsaConfig& cfg) {
  cfg.validate();
  require_size(h.num_qubits(), a.num_qubits(), "SPSA");
  if (start.size() != a.num_params()) {
    fail(ErrorCode::kSizeMismatch, "start point has " + std::to_string(start.size()) + " entries but the ansatz has " +
                                       std::to_string(a.num_params()) + " parameters");
  }
  const std::size_t n = a.num_params();
  std::size_t evaluations = 0;
  auto energy_at = [&](const std::vector<double>& theta) {
    ++evaluations;
    return exact_energy(simulate_statevector(a, theta), h);
  };

  Rng rng(cfg.seed);
  std::vector<double> delta(n), plus(n), minus(n);
  auto draw_delta = [&] {
    for (auto& d : delta) d = rng.below(2) ? 1.0 : -1.0;
  };
  // Returns (y+ - y-) / (2 c), the common magnitude of every gradient component.
  auto probe = [&](const std::vector<double>& theta, double ck) {
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    return (energy_at(plus) - energy_at(minus)) / (2 * ck);
  };

  std::vector<double> theta = start.radians();
  const double start_energy = energy_at(theta);
  const double stability = cfg.stability.value_or(static_cast<double>(cfg.rounds) / 10);

  double gain = 0.0;
  if (cfg.a) {
    gain = *cfg.a;
  } else {
    double mean = 0.0;
    for (std::size_t s = 0; s < cfg.calibration_samples; ++s) {
      draw_delta();
      mean += std::abs(probe(theta, cfg.c));
    }
    mean /= static_cast<double>(cfg.calibration_samples);
    if (mean < 1e-12) mean = 1.0;
    gain = cfg.target_step * std::pow(stability + 1, cfg.alpha) / mean;
  }

  SpsaResult best{theta, start_energy, start_energy, 0};
  for (std::size_t k = 0; k < cfg.rounds; ++k) {
    const double ak = gain / std::pow(stability + static_cast<double>(k) + 1, cfg.alpha);
    const double ck = cfg.c / std::pow(static_cast<double>(k) + 1, cfg.gamma);
    draw_delta();
    const double g = probe(theta, ck);
    for (std::size_t i = 0; i < n; ++i) theta[i] -= ak * g * delta[i];
    const double e = energy_at(theta);
    if (e < best.energy) {
      best.energy = e;
      best.theta = theta;
    }
  }
  best.evaluations = evaluations;
  return best;
}

std::vector<double> term_expectations(const StateVector& s, const Hamiltonian& h) {
  require_size(h.num_qubits(), s.num_qubits(), "term expectations");
  std::vector<double> out;
  out.reserve(h.num_terms());
  for (const auto& term : h.terms()) out.push_back(s.expectation(term.pauli).real());
  return out;
}

std::vector<double> term_expectations(const Tableau& t, const Hamiltonian& h) {
  require_size(h.num_qubits(), t.num_qubits(), "term expectations");
  std::vector<double> out;
  out.reserve(h.num_terms());
  for (const auto& term : h.terms()) out.push_back(t.expectation(term.pauli));
  return out;
}

}  // namespace cliffinit
