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

#ifndef CLIFFINIT_TESTS_SUPPORT_HPP_
#define CLIFFINIT_TESTS_SUPPORT_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "cliffinit/pauli.hpp"
#include "cliffinit/random.hpp"
#include "cliffinit/stabilizer.hpp"

namespace cliffinit::testing {

// Dense 2^n x 2^n matrix of i^phase * prod X^x Z^z, qubit q = bit q of the basis index.
inline Eigen::MatrixXcd dense_pauli(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  Eigen::Matrix2cd x, z, y, id;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  id.setIdentity();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = n; q-- > 0;) {
    const Eigen::Matrix2cd& f = p.x(q) ? (p.z(q) ? y : x) : (p.z(q) ? z : id);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
    }
    out = std::move(next);
  }
  static const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhase[p.phase_exp()] * out;
}

inline PauliString random_pauli(std::size_t n, Rng& rng, bool with_phase = false) {
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto r = rng.below(4);
    p.set(q, r & 1, r >> 1);
  }
  if (with_phase) p.set_phase_exp(static_cast<int>(rng.below(4)));
  return p;
}

inline CliffordGate random_gate(std::size_t n, Rng& rng) {
  const auto kind = static_cast<GateKind>(rng.below(n >= 2 ? 8 : 6));
  const auto a = static_cast<std::uint32_t>(rng.below(n));
  if (!is_two_qubit(kind)) return CliffordGate::single(kind, a);
  auto b = static_cast<std::uint32_t>(rng.below(n - 1));
  if (b >= a) ++b;
  return CliffordGate::pair(kind, a, b);
}

inline std::vector<CliffordGate> random_circuit(std::size_t n, std::size_t length, Rng& rng) {
  std::vector<CliffordGate> gates;
  for (std::size_t i = 0; i < length; ++i) gates.push_back(random_gate(n, rng));
  return gates;
}

}  // namespace cliffinit::testing

#endif  // CLIFFINIT_TESTS_SUPPORT_HPP_
