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

#include "cliffinit/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include "cliffinit/error.hpp"

namespace cliffinit {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    fail(ErrorCode::kSizeMismatch, "Pauli strings act on " + std::to_string(p.num_qubits()) +
                                       " and " + std::to_string(q.num_qubits()) + " qubits");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits), xs_(words_for(n_qubits), 0), zs_(words_for(n_qubits), 0) {
  if (n_qubits == 0) fail(ErrorCode::kInvalidArgument, "a Pauli string needs at least one qubit");
}

void PauliString::set(std::size_t q, bool x, bool z) {
  const std::uint64_t mask = std::uint64_t{1} << (q & 63);
  auto& xw = xs_[q >> 6];
  auto& zw = zs_[q >> 6];
  xw = x ? (xw | mask) : (xw & ~mask);
  zw = z ? (zw | mask) : (zw & ~mask);
}

bool PauliString::is_identity_letters() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) total += std::popcount(xs_[w] | zs_[w]);
  return total;
}

std::string PauliString::letters() const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = kLetters[x(q) | (z(q) << 1)];
  return out;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + letters();
}

PauliString parse_pauli(std::string_view text, std::size_t n_qubits) {
  if (text.size() != n_qubits) {
    fail(ErrorCode::kParse, "expected " + std::to_string(n_qubits) + " Pauli letters, got " +
                                std::to_string(text.size()));
  }
  PauliString p(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': p.set(q, true, false); break;
      case 'Y': p.set(q, true, true); break;
      case 'Z': p.set(q, false, true); break;
      default:
        fail(ErrorCode::kParse, std::string("invalid Pauli character '") + text[q] +
                                    "' at position " + std::to_string(q));
    }
  }
  return p;
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  std::uint64_t acc = 0;
  const auto px = p.x_words(), pz = p.z_words(), qx = q.x_words(), qz = q.z_words();
  for (std::size_t w = 0; w < px.size(); ++w) acc ^= (px[w] & qz[w]) ^ (pz[w] & qx[w]);
  return (std::popcount(acc) & 1) == 0;
}

int product_phase(std::span<const std::uint64_t> x1, std::span<const std::uint64_t> z1,
                  std::span<const std::uint64_t> x2, std::span<const std::uint64_t> z2) {
  // Per qubit, XY = iZ, YZ = iX, ZX = iY contribute +1 and the reversed
  // orders contribute -1 to the exponent of i.
  int total = 0;
  for (std::size_t w = 0; w < x1.size(); ++w) {
    const std::uint64_t a_x = x1[w] & ~z1[w], a_y = x1[w] & z1[w], a_z = ~x1[w] & z1[w];
    const std::uint64_t b_x = x2[w] & ~z2[w], b_y = x2[w] & z2[w], b_z = ~x2[w] & z2[w];
    const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    const std::uint64_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
    total += std::popcount(plus) - std::popcount(minus);
  }
  return ((total % 4) + 4) % 4;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  PauliString r(p.num_qubits());
  const int phase =
      p.phase_exp() + q.phase_exp() + product_phase(p.x_words(), p.z_words(), q.x_words(), q.z_words());
  auto rx = r.x_words();
  auto rz = r.z_words();
  for (std::size_t w = 0; w < rx.size(); ++w) {
    rx[w] = p.x_words()[w] ^ q.x_words()[w];
    rz[w] = p.z_words()[w] ^ q.z_words()[w];
  }
  r.set_phase_exp(phase);
  return r;
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms) : n_qubits_(n_qubits) {
  if (n_qubits == 0) fail(ErrorCode::kInvalidArgument, "a Hamiltonian needs at least one qubit");
  // Keyed on the packed (x, z) words; the value is the slot in terms_.
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (auto& term : terms) {
    if (term.pauli.num_qubits() != n_qubits) {
      fail(ErrorCode::kSizeMismatch, "term " + term.pauli.letters() + " does not act on " +
                                         std::to_string(n_qubits) + " qubits");
    }
    if (term.pauli.phase_exp() != 0) {
      fail(ErrorCode::kInvalidArgument, "Hamiltonian terms must be phase-free, got " + term.pauli.to_string());
    }
    if (!std::isfinite(term.coefficient)) {
      fail(ErrorCode::kInvalidArgument, "non-finite coefficient on " + term.pauli.letters());
    }
    std::vector<std::uint64_t> key(term.pauli.x_words().begin(), term.pauli.x_words().end());
    key.insert(key.end(), term.pauli.z_words().begin(), term.pauli.z_words().end());
    auto [it, inserted] = index.try_emplace(std::move(key), terms_.size());
    if (inserted) {
      terms_.push_back(std::move(term));
    } else {
      terms_[it->second].coefficient += term.coefficient;
    }
  }
  std::erase_if(terms_, [](const PauliTerm& t) { return t.coefficient == 0.0; });
}

std::size_t Hamiltonian::num_non_identity_terms() const {
  std::size_t count = 0;
  for (const auto& t : terms_) count += !t.pauli.is_identity_letters();
  return count;
}

std::string Hamiltonian::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& t : terms_) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), t.coefficient);
    out.append(buf, end);
    out += ' ';
    out += t.pauli.letters();
    out += '\n';
  }
  return out;
}

HamiltonianFile parse_hamiltonian_file(std::istream& source) {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<PauliTerm> terms;
  std::size_t n_qubits = 0;
  std::string line;
  std::size_t line_no = 0;
  auto error = [&](const std::string& what) {
    fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(source, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const std::string_view comment = trim(body.substr(1));
      const auto eq = comment.find('=');
      if (eq != std::string_view::npos) {
        const std::string_view key = trim(comment.substr(0, eq));
        if (!key.empty() && key.find_first_of(" \t") == std::string_view::npos) {
          metadata.emplace_back(std::string(key), std::string(trim(comment.substr(eq + 1))));
        }
      }
      continue;
    }
    const auto split = body.find_first_of(" \t");
    if (split == std::string_view::npos) error("expected '<coefficient> <pauli letters>'");
    std::string_view coeff_text = body.substr(0, split);
    const std::string_view letters = trim(body.substr(split));
    if (letters.find_first_of(" \t") != std::string_view::npos) error("trailing tokens after Pauli string");
    if (!coeff_text.empty() && coeff_text.front() == '+') coeff_text.remove_prefix(1);
    double coefficient = 0.0;
    const auto [ptr, ec] = std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coefficient);
    if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size() || !std::isfinite(coefficient)) {
      error("unparsable coefficient '" + std::string(body.substr(0, split)) + "'");
    }
    if (n_qubits == 0) {
      n_qubits = letters.size();
    } else if (letters.size() != n_qubits) {
      error("inconsistent Pauli string length " + std::to_string(letters.size()) + " (expected " +
            std::to_string(n_qubits) + ")");
    }
    try {
      terms.push_back({coefficient, parse_pauli(letters, n_qubits)});
    } catch (const Error& e) {
      error(e.what());
    }
  }
  if (n_qubits == 0) fail(ErrorCode::kParse, "Hamiltonian source contains no terms");
  return {Hamiltonian(n_qubits, std::move(terms)), std::move(metadata)};
}

Hamiltonian parse_hamiltonian(std::istream& source) { return parse_hamiltonian_file(source).hamiltonian; }

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hamiltonian(in);
}

}  // namespace cliffinit
