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

#include "cliffinit/stabilizer.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>

#include "cliffinit/error.hpp"

namespace cliffinit {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CX || kind == GateKind::CZ; }

std::string to_string(const CliffordGate& gate) {
  std::string out(gate_name(gate.kind));
  out += ' ' + std::to_string(gate.q0);
  if (is_two_qubit(gate.kind)) out += ' ' + std::to_string(gate.q1);
  return out;
}

Tableau::Tableau(std::size_t n_qubits) : n_(n_qubits), words_((n_qubits + 63) / 64) {
  if (n_qubits == 0) fail(ErrorCode::kInvalidArgument, "a tableau needs at least one qubit");
  reset();
}

void Tableau::reset() {
  xs_.assign(2 * n_ * words_, 0);
  zs_.assign(2 * n_ * words_, 0);
  signs_.assign(2 * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    xrow(i)[i >> 6] |= std::uint64_t{1} << (i & 63);
    zrow(n_ + i)[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
}

void Tableau::check_qubit(std::uint32_t q) const {
  if (q >= n_) {
    fail(ErrorCode::kInvalidArgument,
         "qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
  }
}

void Tableau::apply(const CliffordGate& gate) {
  const std::uint32_t a = gate.q0;
  check_qubit(a);
  const std::size_t wa = a >> 6;
  const unsigned sa = a & 63;
  const std::size_t rows = 2 * n_;

  if (is_two_qubit(gate.kind)) {
    const std::uint32_t b = gate.q1;
    check_qubit(b);
    if (a == b) fail(ErrorCode::kInvalidArgument, std::string(gate_name(gate.kind)) + " needs two distinct qubits");
    const std::size_t wb = b >> 6;
    const unsigned sb = b & 63;
    for (std::size_t r = 0; r < rows; ++r) {
      std::uint64_t* x = xrow(r);
      std::uint64_t* z = zrow(r);
      const unsigned xa = (x[wa] >> sa) & 1, za = (z[wa] >> sa) & 1;
      const unsigned xb = (x[wb] >> sb) & 1, zb = (z[wb] >> sb) & 1;
      if (gate.kind == GateKind::CX) {
        signs_[r] ^= xa & zb & (xb ^ za ^ 1);
        x[wb] ^= std::uint64_t{xa} << sb;
        z[wa] ^= std::uint64_t{zb} << sa;
      } else {
        signs_[r] ^= xa & xb & (za ^ zb);
        z[wa] ^= std::uint64_t{xb} << sa;
        z[wb] ^= std::uint64_t{xa} << sb;
      }
    }
    return;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t& xw = xrow(r)[wa];
    std::uint64_t& zw = zrow(r)[wa];
    const unsigned x = (xw >> sa) & 1, z = (zw >> sa) & 1;
    switch (gate.kind) {
      case GateKind::H:
        signs_[r] ^= x & z;
        if (x != z) {
          xw ^= std::uint64_t{1} << sa;
          zw ^= std::uint64_t{1} << sa;
        }
        break;
      case GateKind::S:
        signs_[r] ^= x & z;
        zw ^= std::uint64_t{x} << sa;
        break;
      case GateKind::Sdg:
        signs_[r] ^= x & (z ^ 1);
        zw ^= std::uint64_t{x} << sa;
        break;
      case GateKind::X: signs_[r] ^= z; break;
      case GateKind::Y: signs_[r] ^= x ^ z; break;
      case GateKind::Z: signs_[r] ^= x; break;
      default: break;
    }
  }
}

PauliString Tableau::row(std::size_t i) const {
  PauliString p(n_);
  std::copy_n(xrow(i), words_, p.x_words().begin());
  std::copy_n(zrow(i), words_, p.z_words().begin());
  p.set_phase_exp(2 * signs_[i]);
  return p;
}

namespace {

bool anticommutes(const std::uint64_t* x1, const std::uint64_t* z1, std::span<const std::uint64_t> x2,
                  std::span<const std::uint64_t> z2) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < x2.size(); ++w) acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
  return std::popcount(acc) & 1;
}

}  // namespace

int Tableau::expectation(const PauliString& p) const {
  if (p.num_qubits() != n_) {
    fail(ErrorCode::kSizeMismatch, "Pauli string on " + std::to_string(p.num_qubits()) +
                                       " qubits measured against a " + std::to_string(n_) + "-qubit tableau");
  }
  if (p.phase_exp() != 0) fail(ErrorCode::kInvalidArgument, "expectation requires a phase-free Pauli string");
  const auto px = p.x_words();
  const auto pz = p.z_words();
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (anticommutes(xrow(i), zrow(i), px, pz)) return 0;
  }

  // p commutes with the whole stabilizer group, so it is +-(product of the
  // stabilizers s_i whose destabilizer partner d_i anticommutes with p).
  constexpr std::size_t kInline = 8;
  std::array<std::uint64_t, 2 * kInline> inline_buf{};
  std::vector<std::uint64_t> heap_buf;
  std::span<std::uint64_t> buf;
  if (words_ <= kInline) {
    buf = std::span(inline_buf).first(2 * words_);
  } else {
    heap_buf.assign(2 * words_, 0);
    buf = heap_buf;
  }
  const auto acc_x = buf.first(words_);
  const auto acc_z = buf.last(words_);
  int phase = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!anticommutes(xrow(i), zrow(i), px, pz)) continue;
    const std::size_t s = n_ + i;
    const std::span<const std::uint64_t> sx(xrow(s), words_), sz(zrow(s), words_);
    phase += 2 * signs_[s] + product_phase(acc_x, acc_z, sx, sz);
    for (std::size_t w = 0; w < words_; ++w) {
      acc_x[w] ^= sx[w];
      acc_z[w] ^= sz[w];
    }
  }
  return (phase & 3) == 0 ? 1 : -1;
}

Tableau new_tableau(std::size_t n_qubits) { return Tableau(n_qubits); }

Tableau apply_gate(Tableau t, const CliffordGate& gate) {
  t.apply(gate);
  return t;
}

int expectation_pauli(const Tableau& t, const PauliString& p) { return t.expectation(p); }

double energy(const Tableau& t, const Hamiltonian& h) {
  if (h.num_qubits() != t.num_qubits()) {
    fail(ErrorCode::kSizeMismatch, "Hamiltonian on " + std::to_string(h.num_qubits()) +
                                       " qubits evaluated on a " + std::to_string(t.num_qubits()) + "-qubit tableau");
  }
  double total = 0.0;
  for (const auto& term : h.terms()) total += term.coefficient * t.expectation(term.pauli);
  return total;
}

std::string check_invariants(const Tableau& t) {
  const std::size_t n = t.num_qubits();
  std::vector<PauliString> rows;
  rows.reserve(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) rows.push_back(t.row(i));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (rows[i].phase_exp() % 2 != 0) return "row " + std::to_string(i) + " is not Hermitian";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!commutes(rows[n + i], rows[n + j])) {
        return "stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
      }
      if (!commutes(rows[i], rows[j])) {
        return "destabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
      }
      if (commutes(rows[i], rows[n + j]) != (i != j)) {
        return "destabilizer " + std::to_string(i) + " has the wrong commutation with stabilizer " + std::to_string(j);
      }
    }
  }
  // GF(2) rank of the 2n x 2n symplectic matrix.
  std::vector<std::vector<std::uint8_t>> m(2 * n, std::vector<std::uint8_t>(2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      m[i][q] = rows[i].x(q);
      m[i][n + q] = rows[i].z(q);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < 2 * n; ++col) {
    std::size_t pivot = rank;
    while (pivot < 2 * n && !m[pivot][col]) ++pivot;
    if (pivot == 2 * n) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < 2 * n; ++r) {
      if (r != rank && m[r][col]) {
        for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] ^= m[rank][c];
      }
    }
    ++rank;
  }
  if (rank != 2 * n) return "rows are not symplectically independent (rank " + std::to_string(rank) + ")";
  return {};
}

}  // namespace cliffinit
