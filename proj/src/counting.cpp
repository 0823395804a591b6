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

#include "cliffinit/counting.hpp"

#include <cmath>
#include <deque>
#include <map>

#include "cliffinit/error.hpp"

namespace cliffinit {

BigInt stabilizer_total(std::size_t n) {
  BigInt total = 1;
  total <<= n;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt factor = 1;
    factor <<= k;
    total *= factor + 1;
  }
  return total;
}

BigInt pauli_stabilized_count(std::size_t n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "pauli_stabilized_count needs n >= 1");
  return stabilizer_total(n - 1);
}

BigInt common_stabilizer_count(std::size_t n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "common_stabilizer_count needs n >= 2");
  return stabilizer_total(n - 2);
}

Rational nonzero_bound(const Hamiltonian& h) {
  const std::size_t m = h.num_non_identity_terms();
  if (h.num_terms() == 0) fail(ErrorCode::kInvalidArgument, "nonzero_bound needs a non-empty Hamiltonian");
  const std::size_t n = h.num_qubits();
  Rational bound(BigInt(2) * pauli_stabilized_count(n) * m, stabilizer_total(n));
  return bound > 1 ? Rational(1) : bound;
}

CountReport count_report(std::size_t n, const Hamiltonian* h) {
  CountReport report{n, stabilizer_total(n), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (n >= 1) report.per_pauli = pauli_stabilized_count(n);
  if (n >= 2) report.common_pair = common_stabilizer_count(n);
  if (h) {
    if (h->num_qubits() != n) {
      fail(ErrorCode::kSizeMismatch, "count report for " + std::to_string(n) + " qubits given a " +
                                         std::to_string(h->num_qubits()) + "-qubit Hamiltonian");
    }
    report.term_count = h->num_non_identity_terms();
    report.nonzero_bound = nonzero_bound(*h);
  }
  return report;
}

namespace {

using Key = std::vector<long long>;

// Stabilizer amplitudes are 0 or unit-modulus multiples of 2^{-k/2}, so a
// fixed grid distinguishes them.
Key canonical_key(StateVector& s) {
  std::complex<double> phase{1.0, 0.0};
  for (const auto& a : s.amplitudes()) {
    if (std::abs(a) > 1e-9) {
      phase = std::conj(a) / std::abs(a);
      break;
    }
  }
  std::vector<std::complex<double>> amps(s.amplitudes().begin(), s.amplitudes().end());
  Key key;
  key.reserve(2 * amps.size());
  for (auto& a : amps) {
    a *= phase;
    key.push_back(std::llround(a.real() * 1e8));
    key.push_back(std::llround(a.imag() * 1e8));
  }
  s = StateVector(s.num_qubits(), std::move(amps));
  return key;
}

}  // namespace

std::vector<StateVector> enumerate_stabilizer_states(std::size_t n) {
  if (n == 0 || n > 3) fail(ErrorCode::kInvalidArgument, "stabilizer enumeration supports 1 <= n <= 3");
  std::vector<CliffordGate> generators;
  for (std::uint32_t q = 0; q < n; ++q) {
    generators.push_back(CliffordGate::single(GateKind::H, q));
    generators.push_back(CliffordGate::single(GateKind::S, q));
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t != q) generators.push_back(CliffordGate::pair(GateKind::CX, q, t));
    }
  }
  std::map<Key, StateVector> seen;
  std::deque<StateVector> frontier;
  StateVector start(n);
  seen.emplace(canonical_key(start), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const StateVector current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      StateVector next = current;
      next.apply(g);
      Key key = canonical_key(next);
      if (seen.try_emplace(std::move(key), next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<StateVector> out;
  out.reserve(seen.size());
  for (auto& [key, state] : seen) out.push_back(std::move(state));
  return out;
}

}  // namespace cliffinit
