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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "cliffinit/oracle.hpp"
#include "cliffinit/pauli.hpp"

namespace cliffinit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Number of n-qubit stabilizer states, S(n) = 2^n prod_{k=1..n} (2^k + 1).
BigInt stabilizer_total(std::size_t n);

/// States with <P> = +1 for a fixed non-identity n-qubit Pauli string: S(n-1).
BigInt pauli_stabilized_count(std::size_t n);

/// States +1-stabilized by two independent commuting strings: S(n-2).
BigInt common_stabilizer_count(std::size_t n);

/// Exact min(1, 2 S(n-1) M / S(n)), M counting the non-identity terms.
Rational nonzero_bound(const Hamiltonian& h);

struct CountReport {
  std::size_t n_qubits;
  BigInt total_states;
  std::optional<BigInt> per_pauli;    // n >= 1
  std::optional<BigInt> common_pair;  // n >= 2
  std::optional<std::size_t> term_count;
  std::optional<Rational> nonzero_bound;
};

/// `h`, when given, must act on n qubits; it supplies M and the bound.
CountReport count_report(std::size_t n, const Hamiltonian* h = nullptr);

/// Every stabilizer state on n <= 3 qubits, by closure of |0...0> under
/// H, S and CX. Global phase is fixed so the first nonzero amplitude is real
/// and positive; the list is sorted by amplitudes.
std::vector<StateVector> enumerate_stabilizer_states(std::size_t n);

}  // namespace cliffinit
