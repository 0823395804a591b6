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

#include <gtest/gtest.h>

#include <sstream>

#include "cliffinit/error.hpp"
#include "cliffinit/pauli.hpp"
#include "support.hpp"

namespace cliffinit {
namespace {

using testing::dense_pauli;
using testing::random_pauli;

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(ParsePauli, MapsLettersToBits) {
  const PauliString p = parse_pauli("ZI", 2);
  EXPECT_FALSE(p.x(0));
  EXPECT_TRUE(p.z(0));
  EXPECT_FALSE(p.x(1));
  EXPECT_FALSE(p.z(1));
  EXPECT_EQ(p.phase_exp(), 0);

  const PauliString y = parse_pauli("Y", 1);
  EXPECT_TRUE(y.x(0));
  EXPECT_TRUE(y.z(0));
  EXPECT_EQ(y.phase_exp(), 0);
}

TEST(ParsePauli, IdentityString) {
  const PauliString p = parse_pauli("IIII", 4);
  EXPECT_TRUE(p.is_identity_letters());
  EXPECT_EQ(p.weight(), 0u);
}

TEST(ParsePauli, RejectsBadInput) {
  EXPECT_EQ(code_of([] { parse_pauli("ZA", 2); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_pauli("ZZZ", 2); }), ErrorCode::kParse);
}

TEST(ParsePauli, RoundTripsLetters) {
  Rng rng(11);
  for (std::size_t n : {1u, 5u, 64u, 65u, 130u}) {
    const PauliString p = random_pauli(n, rng);
    EXPECT_EQ(parse_pauli(p.letters(), n), p);
  }
}

TEST(PauliString, ToStringShowsPhase) {
  PauliString p = parse_pauli("XZ", 2);
  EXPECT_EQ(p.to_string(), "+XZ");
  p.set_phase_exp(1);
  EXPECT_EQ(p.to_string(), "+iXZ");
  p.set_phase_exp(2);
  EXPECT_EQ(p.to_string(), "-XZ");
  p.set_phase_exp(-1);
  EXPECT_EQ(p.to_string(), "-iXZ");
}

TEST(Commutes, Examples) {
  EXPECT_FALSE(commutes(parse_pauli("X", 1), parse_pauli("Z", 1)));
  EXPECT_TRUE(commutes(parse_pauli("XX", 2), parse_pauli("ZZ", 2)));
  EXPECT_TRUE(commutes(parse_pauli("ZZI", 3), parse_pauli("IZZ", 3)));
  EXPECT_EQ(code_of([] { commutes(parse_pauli("X", 1), parse_pauli("XX", 2)); }), ErrorCode::kSizeMismatch);
}

TEST(Multiply, Examples) {
  const PauliString xz = multiply(parse_pauli("X", 1), parse_pauli("Z", 1));
  EXPECT_TRUE(xz.x(0));
  EXPECT_TRUE(xz.z(0));
  EXPECT_EQ(xz.phase_exp(), 3);

  const PauliString xx = multiply(parse_pauli("X", 1), parse_pauli("X", 1));
  EXPECT_TRUE(xx.is_identity_letters());
  EXPECT_EQ(xx.phase_exp(), 0);

  EXPECT_EQ(multiply(parse_pauli("XI", 2), parse_pauli("IZ", 2)), parse_pauli("XZ", 2));
  EXPECT_EQ(code_of([] { multiply(parse_pauli("X", 1), parse_pauli("XX", 2)); }), ErrorCode::kSizeMismatch);
}

TEST(Multiply, MatchesDenseMatrixProduct) {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const PauliString p = random_pauli(n, rng, true);
    const PauliString q = random_pauli(n, rng, true);
    const Eigen::MatrixXcd expected = dense_pauli(p) * dense_pauli(q);
    EXPECT_LT((dense_pauli(multiply(p, q)) - expected).norm(), 1e-12) << p.to_string() << " * " << q.to_string();
  }
}

TEST(Commutes, MatchesDenseCommutator) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const PauliString p = random_pauli(n, rng);
    const PauliString q = random_pauli(n, rng);
    const Eigen::MatrixXcd a = dense_pauli(p), b = dense_pauli(q);
    EXPECT_EQ(commutes(p, q), (a * b - b * a).norm() < 1e-12);
  }
}

TEST(PauliProperties, AssociativeSymmetricAndSelfInverse) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const PauliString p = random_pauli(n, rng, true);
    const PauliString q = random_pauli(n, rng, true);
    const PauliString r = random_pauli(n, rng, true);
    EXPECT_EQ(multiply(p, multiply(q, r)), multiply(multiply(p, q), r));
    EXPECT_EQ(commutes(p, q), commutes(q, p));
    EXPECT_EQ(commutes(p, q), multiply(p, q).phase_exp() == multiply(q, p).phase_exp());

    const PauliString h = random_pauli(n, rng);
    const PauliString sq = multiply(h, h);
    EXPECT_TRUE(sq.is_identity_letters());
    EXPECT_EQ(sq.phase_exp(), 0);
  }
}

TEST(PauliProperties, WideStringsCrossWordBoundaries) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 60 + rng.below(80);
    const PauliString p = random_pauli(n, rng, true);
    const PauliString q = random_pauli(n, rng, true);
    const PauliString r = random_pauli(n, rng, true);
    EXPECT_EQ(multiply(p, multiply(q, r)), multiply(multiply(p, q), r));
    // Per-site reference for the symplectic product.
    int anti = 0;
    for (std::size_t j = 0; j < n; ++j) anti ^= (p.x(j) & q.z(j)) ^ (p.z(j) & q.x(j));
    EXPECT_EQ(commutes(p, q), anti == 0);
  }
}

TEST(Hamiltonian, ParsesTerms) {
  const Hamiltonian h = parse_hamiltonian("1.0 ZZ\n0.5 XI\n");
  EXPECT_EQ(h.num_qubits(), 2u);
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_EQ(h.term(0).coefficient, 1.0);
  EXPECT_EQ(h.term(1).pauli.letters(), "XI");
}

TEST(Hamiltonian, MergesAndDropsZeros) {
  EXPECT_EQ(parse_hamiltonian("1.0 ZZ\n-1.0 ZZ\n").num_terms(), 0u);
  const Hamiltonian h = parse_hamiltonian("0.25 XX\n1 ZZ\n0.5 XX\n");
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_EQ(h.term(0).pauli.letters(), "XX");
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 0.75);
}

TEST(Hamiltonian, CountsNonIdentityTerms) {
  const Hamiltonian h = parse_hamiltonian("-0.5 III\n1 ZZI\n2 IXI\n");
  EXPECT_EQ(h.num_terms(), 3u);
  EXPECT_EQ(h.num_non_identity_terms(), 2u);
}

TEST(Hamiltonian, AcceptsCommentsBlanksAndScientificNotation) {
  const Hamiltonian h = parse_hamiltonian("# comment\n\n  1e-3   XY \n+2.5E1 ZZ\n");
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 1e-3);
  EXPECT_DOUBLE_EQ(h.term(1).coefficient, 25.0);
}

TEST(Hamiltonian, ParseErrorsCarryLineNumbers) {
  const auto message = [](const std::string& text) {
    try {
      parse_hamiltonian(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("0.5 ZZZ\n0.5 XI\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("1 ZZ\nabc XX\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("1 ZZ\n\n1 XQ\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("1 ZZ junk\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("").find("no terms"), std::string::npos);
  EXPECT_NE(message("# only a comment\n").find("no terms"), std::string::npos);
}

TEST(Hamiltonian, KeepsMetadataHeaders) {
  std::istringstream in("# molecule=H2\n# free text comment\n# transform = jw\n1 Z\n");
  const HamiltonianFile f = parse_hamiltonian_file(in);
  ASSERT_EQ(f.metadata.size(), 2u);
  EXPECT_EQ(f.metadata[0].first, "molecule");
  EXPECT_EQ(f.metadata[0].second, "H2");
  EXPECT_EQ(f.metadata[1].first, "transform");
  EXPECT_EQ(f.metadata[1].second, "jw");
}

TEST(Hamiltonian, TextExportRoundTrips) {
  const Hamiltonian h = parse_hamiltonian("0.1 XYZ\n-0.30000000000000004 ZZI\n1e-17 III\n");
  const Hamiltonian back = parse_hamiltonian(h.to_text());
  ASSERT_EQ(back.num_terms(), h.num_terms());
  for (std::size_t i = 0; i < h.num_terms(); ++i) {
    EXPECT_EQ(back.term(i).coefficient, h.term(i).coefficient);
    EXPECT_EQ(back.term(i).pauli, h.term(i).pauli);
  }
}

TEST(Hamiltonian, RejectsInvalidTerms) {
  PauliString phased = parse_pauli("X", 1);
  phased.set_phase_exp(1);
  EXPECT_EQ(code_of([&] { Hamiltonian(1, {{1.0, phased}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Hamiltonian(2, {{1.0, parse_pauli("X", 1)}}); }), ErrorCode::kSizeMismatch);
  EXPECT_EQ(code_of([] { Hamiltonian(1, {{std::nan(""), parse_pauli("X", 1)}}); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace cliffinit
