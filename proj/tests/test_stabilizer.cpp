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

#include <cmath>

#include "cliffinit/error.hpp"
#include "cliffinit/oracle.hpp"
#include "cliffinit/stabilizer.hpp"
#include "support.hpp"

namespace cliffinit {
namespace {

using testing::random_circuit;
using testing::random_pauli;

PauliString P(std::string_view s) { return parse_pauli(s, s.size()); }

CliffordGate g1(GateKind k, std::uint32_t q) { return CliffordGate::single(k, q); }
CliffordGate g2(GateKind k, std::uint32_t a, std::uint32_t b) { return CliffordGate::pair(k, a, b); }

TEST(Tableau, InitialStateIsAllZeros) {
  const Tableau t = new_tableau(3);
  EXPECT_EQ(t.stabilizer(0).to_string(), "+ZII");
  EXPECT_EQ(t.stabilizer(1).to_string(), "+IZI");
  EXPECT_EQ(t.stabilizer(2).to_string(), "+IIZ");
  EXPECT_EQ(t.destabilizer(0).to_string(), "+XII");
  const Tableau one = new_tableau(1);
  EXPECT_EQ(one.destabilizer(0).to_string(), "+X");
  EXPECT_EQ(one.stabilizer(0).to_string(), "+Z");
  EXPECT_THROW(new_tableau(0), Error);
}

TEST(Tableau, GateExamples) {
  EXPECT_EQ(apply_gate(new_tableau(1), g1(GateKind::H, 0)).stabilizer(0).to_string(), "+X");

  Tableau bell = new_tableau(2);
  bell.apply(g1(GateKind::H, 0));
  bell.apply(g2(GateKind::CX, 0, 1));
  EXPECT_EQ(bell.stabilizer(0).to_string(), "+XX");
  EXPECT_EQ(bell.stabilizer(1).to_string(), "+ZZ");

  Tableau s = new_tableau(1);
  s.apply(g1(GateKind::S, 0));
  EXPECT_EQ(s.destabilizer(0).to_string(), "+Y");
  s.apply(g1(GateKind::S, 0));
  EXPECT_EQ(s.destabilizer(0).to_string(), "-X");
  EXPECT_EQ(s.stabilizer(0).to_string(), "+Z");
}

TEST(Tableau, HeisenbergActionOfEachGate) {
  struct Case {
    CliffordGate gate;
    const char* in;
    const char* out;
  };
  // Conjugation images g P g^dagger, read off by preparing the eigenstate of P.
  const Case cases[] = {
      {g1(GateKind::H, 0), "X", "+Z"},   {g1(GateKind::H, 0), "Y", "-Y"},   {g1(GateKind::S, 0), "X", "+Y"},
      {g1(GateKind::S, 0), "Y", "-X"},   {g1(GateKind::Sdg, 0), "X", "-Y"}, {g1(GateKind::Sdg, 0), "Y", "+X"},
      {g1(GateKind::X, 0), "Z", "-Z"},   {g1(GateKind::X, 0), "Y", "-Y"},   {g1(GateKind::Y, 0), "X", "-X"},
      {g1(GateKind::Y, 0), "Z", "-Z"},   {g1(GateKind::Z, 0), "X", "-X"},   {g2(GateKind::CX, 0, 1), "XI", "+XX"},
      {g2(GateKind::CX, 0, 1), "IZ", "+ZZ"}, {g2(GateKind::CX, 0, 1), "ZI", "+ZI"},
      {g2(GateKind::CX, 0, 1), "IX", "+IX"}, {g2(GateKind::CZ, 0, 1), "XI", "+XZ"},
      {g2(GateKind::CZ, 0, 1), "IX", "+ZX"}, {g2(GateKind::CZ, 0, 1), "ZI", "+ZI"},
  };
  for (const auto& c : cases) {
    const std::size_t n = std::string_view(c.in).size();
    StateVector sv(n);
    Tableau t(n);
    const auto prep = [&](const CliffordGate& g) {
      sv.apply(g);
      t.apply(g);
    };
    // +1 eigenstate of `in` via per-qubit basis changes.
    for (std::size_t q = 0; q < n; ++q) {
      const char l = c.in[q];
      if (l == 'X') prep(g1(GateKind::H, q));
      if (l == 'Y') prep(g1(GateKind::H, q)), prep(g1(GateKind::S, q));
    }
    ASSERT_EQ(t.expectation(P(c.in)), 1);
    prep(c.gate);
    const std::string out = c.out;
    const int sign = out[0] == '-' ? -1 : 1;
    EXPECT_EQ(t.expectation(P(out.substr(1))), sign) << to_string(c.gate) << " on " << c.in;
    EXPECT_NEAR(sv.expectation(P(out.substr(1))).real(), sign, 1e-12);
  }
}

TEST(Expectation, Examples) {
  const Tableau zero = new_tableau(2);
  EXPECT_EQ(expectation_pauli(zero, P("ZI")), 1);
  EXPECT_EQ(expectation_pauli(zero, P("XI")), 0);
  Tableau bell = new_tableau(2);
  bell.apply(g1(GateKind::H, 0));
  bell.apply(g2(GateKind::CX, 0, 1));
  EXPECT_EQ(expectation_pauli(bell, P("XX")), 1);
  EXPECT_EQ(expectation_pauli(bell, P("ZZ")), 1);
  EXPECT_EQ(expectation_pauli(bell, P("ZI")), 0);
  EXPECT_EQ(expectation_pauli(bell, P("YY")), -1);
}

TEST(Expectation, RejectsBadInput) {
  const Tableau t = new_tableau(2);
  EXPECT_THROW(expectation_pauli(t, P("Z")), Error);
  PauliString phased = P("ZZ");
  phased.set_phase_exp(2);
  EXPECT_THROW(expectation_pauli(t, phased), Error);
}

TEST(Energy, Examples) {
  Tableau bell = new_tableau(2);
  bell.apply(g1(GateKind::H, 0));
  bell.apply(g2(GateKind::CX, 0, 1));
  EXPECT_EQ(energy(bell, parse_hamiltonian("1.0 ZZ\n1.0 XX\n")), 2.0);
  const Hamiltonian zz = parse_hamiltonian("1.0 ZZ\n");
  EXPECT_EQ(energy(new_tableau(2), zz), 1.0);
  EXPECT_EQ(energy(apply_gate(new_tableau(2), g1(GateKind::X, 0)), zz), -1.0);
  EXPECT_THROW(energy(new_tableau(3), zz), Error);
}

TEST(Tableau, ApplyValidatesQubits) {
  Tableau t(2);
  EXPECT_THROW(t.apply(g1(GateKind::H, 2)), Error);
  EXPECT_THROW(t.apply(g2(GateKind::CX, 0, 0)), Error);
  EXPECT_THROW(t.apply(g2(GateKind::CZ, 1, 2)), Error);
}

TEST(TableauProperties, InvariantsHoldAfterRandomCircuits) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(trial < 150 ? 8 : 80);
    Tableau t(n);
    for (const auto& g : random_circuit(n, rng.below(120), rng)) {
      t.apply(g);
    }
    EXPECT_EQ(check_invariants(t), "") << "n=" << n;
    EXPECT_EQ(expectation_pauli(t, PauliString(n)), 1);
    for (int k = 0; k < 10; ++k) {
      const int e = expectation_pauli(t, random_pauli(n, rng));
      EXPECT_TRUE(e == -1 || e == 0 || e == 1);
    }
  }
}

TEST(TableauProperties, GateAlgebra) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    Tableau t(n);
    t.apply_all(random_circuit(n, 30, rng));
    const auto a = static_cast<std::uint32_t>(rng.below(n));
    const auto b = static_cast<std::uint32_t>((a + 1 + rng.below(n - 1)) % n);
    const auto pair_restores = [&](const CliffordGate& g, const CliffordGate& h) {
      Tableau u = t;
      u.apply(g);
      u.apply(h);
      return u == t;
    };
    EXPECT_TRUE(pair_restores(g1(GateKind::H, a), g1(GateKind::H, a)));
    EXPECT_TRUE(pair_restores(g1(GateKind::S, a), g1(GateKind::Sdg, a)));
    EXPECT_TRUE(pair_restores(g1(GateKind::Sdg, a), g1(GateKind::S, a)));
    EXPECT_TRUE(pair_restores(g2(GateKind::CX, a, b), g2(GateKind::CX, a, b)));
    EXPECT_TRUE(pair_restores(g2(GateKind::CZ, a, b), g2(GateKind::CZ, b, a)));
    for (auto k : {GateKind::X, GateKind::Y, GateKind::Z}) EXPECT_TRUE(pair_restores(g1(k, a), g1(k, a)));

    Tableau s4 = t;
    for (int i = 0; i < 4; ++i) s4.apply(g1(GateKind::S, a));
    EXPECT_EQ(s4, t);
    Tableau z2 = t;
    z2.apply(g1(GateKind::Z, b));
    z2.apply(g1(GateKind::Z, b));
    for (int k = 0; k < 20; ++k) {
      const PauliString p = random_pauli(n, rng);
      EXPECT_EQ(expectation_pauli(z2, p), expectation_pauli(t, p));
    }
  }
}

TEST(TableauProperties, MatchesStatevector) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto gates = random_circuit(n, rng.below(61), rng);
    Tableau t(n);
    StateVector sv(n);
    for (const auto& g : gates) {
      t.apply(g);
      sv.apply(g);
    }
    for (int k = 0; k < 30; ++k) {
      const PauliString p = random_pauli(n, rng);
      const auto e = sv.expectation(p);
      EXPECT_NEAR(e.real(), t.expectation(p), 1e-9) << p.letters();
      EXPECT_NEAR(e.imag(), 0.0, 1e-9);
    }
  }
}

TEST(TableauProperties, WideGhzState) {
  const std::size_t n = 70;
  Tableau t(n);
  t.apply(g1(GateKind::H, 0));
  for (std::uint32_t q = 0; q + 1 < n; ++q) t.apply(g2(GateKind::CX, q, q + 1));
  EXPECT_EQ(check_invariants(t), "");
  std::string all_x(n, 'X');
  EXPECT_EQ(expectation_pauli(t, P(all_x)), 1);
  std::string zz(n, 'I');
  zz[3] = zz[68] = 'Z';
  EXPECT_EQ(expectation_pauli(t, P(zz)), 1);
  std::string y2(n, 'X');
  y2[0] = y2[69] = 'Y';
  EXPECT_EQ(expectation_pauli(t, P(y2)), -1);
  std::string z1(n, 'I');
  z1[64] = 'Z';
  EXPECT_EQ(expectation_pauli(t, P(z1)), 0);
}

TEST(CliffordGate, Formatting) {
  EXPECT_EQ(to_string(g2(GateKind::CX, 0, 1)), "CX 0 1");
  EXPECT_EQ(to_string(g1(GateKind::Sdg, 3)), "Sdg 3");
  EXPECT_TRUE(is_two_qubit(GateKind::CZ));
  EXPECT_FALSE(is_two_qubit(GateKind::Y));
}

}  // namespace
}  // namespace cliffinit
