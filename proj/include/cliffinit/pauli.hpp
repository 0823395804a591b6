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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffinit {

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... in symplectic form.
///
/// Qubit q carries the letter I, X, Z or Y for (x, z) = (0,0), (1,0), (0,1),
/// (1,1). The letter Y is the Hermitian Y = iXZ, so no phase is stored for it;
/// the i factors arising from reordering X and Z only appear in `multiply`.
/// Bits are packed 64 to a word.
class PauliString {
 public:
  explicit PauliString(std::size_t n_qubits);

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t num_words() const { return xs_.size(); }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
  void set(std::size_t q, bool x, bool z);

  /// Exponent k of the i^k prefactor, always in [0, 4).
  int phase_exp() const { return phase_; }
  void set_phase_exp(int k) { phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }

  std::span<const std::uint64_t> x_words() const { return xs_; }
  std::span<const std::uint64_t> z_words() const { return zs_; }
  std::span<std::uint64_t> x_words() { return xs_; }
  std::span<std::uint64_t> z_words() { return zs_; }

  /// True iff every letter is I (the phase is not consulted).
  bool is_identity_letters() const;
  std::size_t weight() const;

  /// Letters only, one character per qubit, qubit 0 first.
  std::string letters() const;
  /// Letters with a leading sign for phases 1..3 ("-XZ", "+iY", "-iY").
  std::string to_string() const;

  bool same_letters(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
  }
  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.phase_ == b.phase_ && a.same_letters(b);
  }

 private:
  std::size_t n_qubits_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::uint8_t phase_ = 0;
};

/// Parses a letter string over {I, X, Y, Z}; position j addresses qubit j.
PauliString parse_pauli(std::string_view text, std::size_t n_qubits);

/// Symplectic inner product test.
bool commutes(const PauliString& p, const PauliString& q);

/// Operator product p * q with exact phase.
PauliString multiply(const PauliString& p, const PauliString& q);

/// Log-i phase picked up when the letters (x1, z1) are multiplied on the right
/// by (x2, z2), summed over all qubits. Result in [0, 4).
int product_phase(std::span<const std::uint64_t> x1, std::span<const std::uint64_t> z1,
                  std::span<const std::uint64_t> x2, std::span<const std::uint64_t> z2);

struct PauliTerm {
  double coefficient;
  PauliString pauli;
};

/// H = sum_i c_i P_i with real coefficients and phase-free, distinct strings.
///
/// The constructor merges repeated strings (summing coefficients, keeping the
/// position of the first occurrence) and then drops terms whose coefficient
/// is exactly zero.
class Hamiltonian {
 public:
  Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::span<const PauliTerm> terms() const { return terms_; }
  const PauliTerm& term(std::size_t i) const { return terms_[i]; }

  /// Number of terms whose string is not the identity.
  std::size_t num_non_identity_terms() const;

  /// Serializes in the text format read by parse_hamiltonian. Coefficients use
  /// the shortest decimal form that round-trips.
  std::string to_text() const;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// A parsed Hamiltonian file together with its `# key=value` header comments.
struct HamiltonianFile {
  Hamiltonian hamiltonian;
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Reads the text format: one `<coefficient> <letters>` term per line, with
/// `#` comments and blank lines ignored.
HamiltonianFile parse_hamiltonian_file(std::istream& source);
Hamiltonian parse_hamiltonian(std::istream& source);
Hamiltonian parse_hamiltonian(std::string_view text);

}  // namespace cliffinit
