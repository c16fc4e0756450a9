// Copyright 2026 The wignerlab Authors
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

#include <chrono>
#include <random>

#include "oracle.h"
#include "wignerlab/clifford.h"
#include "wignerlab/dense.h"
#include "wignerlab/errors.h"

namespace wl = wignerlab;
using wl::CliffordCircuit;
using wl::PauliString;

namespace {

// U p U^dagger through the exponential-based gate oracle.
oracle::DenseMatrix dense_conjugate(const oracle::DenseMatrix& u, const PauliString& p) {
  return oracle::matmul(oracle::matmul(u, oracle::dense(p)), u.adjoint());
}

std::vector<wl::CliffordGate> all_gates(const wl::LayoutPtr& l, std::mt19937_64& rng) {
  std::vector<wl::CliffordGate> g;
  const size_t n = l->total_sites();
  for (size_t a = 0; a < n; ++a) {
    g.push_back(wl::Hadamard{a});
    for (size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      g.push_back(wl::ControlledX{a, b});
      g.push_back(wl::ControlledZ{a, b});
      g.push_back(wl::Swap{a, b});
    }
  }
  for (int t = 0; t < 6; ++t) {
    PauliString axis = oracle::random_string(l, rng);
    if (axis.is_identity()) continue;
    axis = axis.with_phase(0);
    if (!axis.is_hermitian()) axis = axis.with_phase(1);
    g.push_back(wl::QuarterRotation(axis, t % 2 ? 1 : -1));
  }
  return g;
}

}  // namespace

TEST(CliffordGate, ConjugationMatchesExponentialGates) {
  std::mt19937_64 rng(21);
  auto l = wl::HilbertLayout::matter_only(3);
  for (const auto& g : all_gates(l, rng)) {
    const auto u = oracle::gate(g, 3);
    for (int t = 0; t < 12; ++t) {
      const PauliString p = oracle::random_string(l, rng);
      EXPECT_LT(oracle::max_abs(oracle::dense(wl::conjugate_gate(g, p)), dense_conjugate(u, p)), 1e-12)
          << wl::gate_to_text(g, *l) << " on " << p.body();
    }
  }
}

TEST(CliffordGate, LibraryGateMatricesMatchExponentials) {
  std::mt19937_64 rng(2);
  auto l = wl::HilbertLayout::matter_only(2);
  EXPECT_LT(oracle::max_abs(wl::controlled_x_matrix(), oracle::gate(wl::ControlledX{0, 1}, 2)), 1e-12);
  EXPECT_LT(oracle::max_abs(wl::controlled_z_matrix(), oracle::gate(wl::ControlledZ{0, 1}, 2)), 1e-12);
  EXPECT_LT(oracle::max_abs(wl::swap_matrix(), oracle::gate(wl::Swap{0, 1}, 2)), 1e-12);
  EXPECT_LT(oracle::max_abs(wl::hadamard_matrix(), oracle::gate(wl::Hadamard{0}, 1)), 1e-12);
}

TEST(CliffordGate, RotationSignIsExponentSign) {
  auto l = wl::HilbertLayout::matter_only(1);
  // exp(-i pi/4 X) Z exp(i pi/4 X) = -Y
  const wl::QuarterRotation minus(wl::sigma_x(l, 1), -1);
  EXPECT_EQ(wl::conjugate_gate(minus, wl::sigma_z(l, 1)), wl::sigma_y(l, 1) * PauliString(l).with_phase(2));
  const wl::QuarterRotation plus(wl::sigma_x(l, 1), 1);
  EXPECT_EQ(wl::conjugate_gate(plus, wl::sigma_z(l, 1)), wl::sigma_y(l, 1));
  EXPECT_THROW(wl::QuarterRotation(PauliString(l), 1), std::invalid_argument);
  EXPECT_THROW(wl::QuarterRotation(wl::sigma_x(l, 1).with_phase(1), 1), std::invalid_argument);
}

TEST(CliffordCircuit, CircuitConjugationMatchesDenseProduct) {
  std::mt19937_64 rng(4);
  for (size_t L : {2u, 3u, 4u}) {
    for (const CliffordCircuit& c : {wl::build_u1(L), wl::build_u2(L), wl::build_u_gauged(L)}) {
      const auto u = oracle::circuit(c);
      for (int t = 0; t < 20; ++t) {
        const PauliString p = oracle::random_string(c.layout(), rng);
        EXPECT_LT(oracle::max_abs(oracle::dense(c.conjugate(p)), dense_conjugate(u, p)), 1e-12);
      }
    }
  }
}

TEST(CliffordCircuit, TextRoundTrip) {
  for (const CliffordCircuit& c : {wl::build_u1(5), wl::build_u2(4), wl::build_u_gauged(3)}) {
    const std::string text = c.to_text();
    const CliffordCircuit back = CliffordCircuit::parse(text, c.layout());
    EXPECT_EQ(back.to_text(), text);
  }
  auto l = wl::HilbertLayout::matter_only(3);
  const CliffordCircuit c = CliffordCircuit::parse("# comment\nCX 2 1\nH 3\nROT - Z1 Z2\n", l);
  ASSERT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(std::get<wl::ControlledX>(c.gates()[0]).control, 1u);
  EXPECT_EQ(std::get<wl::QuarterRotation>(c.gates()[2]).sign(), -1);
  EXPECT_THROW(CliffordCircuit::parse("CX 1 9\n", l), std::exception);
  EXPECT_THROW(CliffordCircuit::parse("FOO 1\n", l), wl::ParseError);
}

TEST(DualityTables, HoldSymbolicallyFromTwoTo64) {
  const auto start = std::chrono::steady_clock::now();
  for (size_t L = 2; L <= 64; ++L) {
    EXPECT_TRUE(wl::verify_automorphism(wl::build_u1(L), wl::phi1_table(L)).all_pass) << "L=" << L;
    EXPECT_TRUE(wl::verify_automorphism(wl::build_u2(L), wl::phi2_table(L)).all_pass) << "L=" << L;
    EXPECT_TRUE(wl::verify_automorphism(wl::build_u_gauged(L), wl::phi_gauged_table(L)).all_pass) << "L=" << L;
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(DualityTables, SmallTablesByHand) {
  auto l = wl::HilbertLayout::matter_only(3);
  const auto phi2 = wl::phi2_table(3);
  // X_1 -> Z_1 Z_2 and eta -> eta are among the entries
  bool saw_x1 = false, saw_eta = false;
  for (const auto& [g, img] : phi2.entries) {
    if (g == wl::sigma_x(l, 1)) saw_x1 = img == wl::sigma_z(l, 1) * wl::sigma_z(l, 2);
    if (g == wl::eta_string(l)) saw_eta = img == wl::eta_string(l);
  }
  EXPECT_TRUE(saw_x1);
  EXPECT_TRUE(saw_eta);
}

TEST(DualityTables, WrappedGaugedWiringFails) {
  // The last controlled-Z must couple site L to the ancilla; wrapping to site 1 breaks the table.
  const size_t L = 4;
  const CliffordCircuit good = wl::build_u_gauged(L);
  std::vector<wl::CliffordGate> gates = good.gates();
  for (auto& g : gates) {
    if (auto* cz = std::get_if<wl::ControlledZ>(&g); cz && (cz->a == L || cz->b == L)) *cz = wl::ControlledZ{0, L - 1};
  }
  const CliffordCircuit wrapped(good.layout(), gates);
  EXPECT_FALSE(wl::verify_automorphism(wrapped, wl::phi_gauged_table(L)).all_pass);
}

TEST(DualityTables, TamperedEntryIsReported) {
  auto m = wl::phi2_table(5);
  m.entries[0].second = m.entries[0].second * PauliString(m.entries[0].second.layout()).with_phase(2);
  const auto rep = wl::verify_automorphism(wl::build_u2(5), m);
  EXPECT_FALSE(rep.all_pass);
  EXPECT_EQ(rep.num_failures(), 1u);
}

TEST(DualityTables, TextRoundTrip) {
  const auto m = wl::phi_gauged_table(4);
  const auto back = wl::DualityMap::parse(m.to_text(), m.entries[0].first.layout(), m.name);
  ASSERT_EQ(back.entries.size(), m.entries.size());
  for (size_t i = 0; i < m.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].first, m.entries[i].first);
    EXPECT_EQ(back.entries[i].second, m.entries[i].second);
  }
}

TEST(DualityTables, GaugedCircuitSendsAncillaZToEta) {
  for (size_t L : {2u, 5u, 17u}) {
    const auto c = wl::build_u_gauged(L);
    const auto l = c.layout();
    EXPECT_EQ(c.conjugate(PauliString::single(l, *l->ancilla_index(), 'Z')), wl::eta_string(l));
  }
}
