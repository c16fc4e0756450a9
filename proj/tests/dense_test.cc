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

#include <random>
#include <sstream>

#include "oracle.h"
#include "wignerlab/dense.h"
#include "wignerlab/errors.h"
#include "wignerlab/hamiltonians.h"

namespace wl = wignerlab;
using wl::Complex;
using wl::DenseMatrix;
using wl::DenseOperator;
using wl::StateVector;

TEST(Materialize, StringsMatchKronecker) {
  std::mt19937_64 rng(1);
  for (auto l : {wl::HilbertLayout::matter_only(1), wl::HilbertLayout::matter_only(4),
                 wl::HilbertLayout::with_ancilla(3), wl::HilbertLayout::with_links(2)}) {
    for (int t = 0; t < 30; ++t) {
      const auto p = oracle::random_string(l, rng);
      EXPECT_LT(oracle::max_abs(wl::materialize(p).matrix, oracle::dense(p)), 1e-15);
    }
  }
}

TEST(Materialize, SumsAndCircuitsMatchOracles) {
  for (size_t L : {2u, 3u, 4u}) {
    const auto h = wl::build_hamiltonian({wl::ModelFamily::kMinimalGaugedHG, L});
    EXPECT_LT(oracle::max_abs(wl::materialize(h).matrix, oracle::dense(h)), 1e-14);
    for (const auto& c : {wl::build_u1(L), wl::build_u2(L), wl::build_u_gauged(L)}) {
      const auto u = wl::materialize(c);
      EXPECT_FALSE(u.antilinear);
      EXPECT_LT(oracle::max_abs(u.matrix, oracle::circuit(c)), 1e-12);
      EXPECT_TRUE(wl::is_unitary(u.matrix));
    }
  }
}

TEST(Materialize, HadamardFromExponential) {
  const double r = 1 / std::sqrt(2.0);
  const DenseMatrix expected = DenseMatrix::from_rows({{r, r}, {r, -r}});
  EXPECT_LT(oracle::max_abs(oracle::gate(wl::Hadamard{0}, 1), expected), 1e-14);
  EXPECT_LT(oracle::max_abs(wl::hadamard_matrix(), expected), 1e-15);
}

TEST(Materialize, SwapIsPermutation) {
  const DenseMatrix expected = DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  auto l = wl::HilbertLayout::matter_only(2);
  EXPECT_EQ(oracle::max_abs(wl::materialize(wl::CliffordCircuit(l, {wl::Swap{0, 1}})).matrix, expected), 0.0);
}

TEST(Materialize, EtaAtTwoSitesIsXX) {
  auto l = wl::HilbertLayout::matter_only(2);
  const DenseMatrix xx = oracle::kron(oracle::pauli2('X'), oracle::pauli2('X'));
  EXPECT_EQ(oracle::max_abs(wl::materialize(wl::eta_string(l)).matrix, xx), 0.0);
}

TEST(Materialize, CapsAreEnforced) {
  EXPECT_THROW(wl::materialize(wl::sigma_x(wl::HilbertLayout::matter_only(15), 1)), wl::DimensionCapExceeded);
  EXPECT_THROW(wl::materialize(wl::build_u2(13)), wl::DimensionCapExceeded);
  EXPECT_THROW(wl::materialize(wl::build_u2(5), {4, 4}), wl::DimensionCapExceeded);
}

TEST(Multiply, SumTimesMatrixMatchesDense) {
  std::mt19937_64 rng(6);
  const auto h = wl::build_hamiltonian({wl::ModelFamily::kSelfDualClosedH2, 3});
  const DenseMatrix m = oracle::random_matrix(8, 8, rng);
  const DenseMatrix hd = oracle::dense(h);
  EXPECT_LT(oracle::max_abs(wl::multiply(h, m), oracle::matmul(hd, m)), 1e-13);
  EXPECT_LT(oracle::max_abs(wl::multiply(m, h), oracle::matmul(m, hd)), 1e-13);
}

TEST(ApplyGate, MatchesMatrixAction) {
  std::mt19937_64 rng(13);
  const auto c = wl::build_u_gauged(3);
  StateVector psi = wl::random_state(16, 3);
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) wl::apply_gate(*it, amps);
  const StateVector expected = oracle::circuit(c) * psi;
  for (size_t i = 0; i < 16; ++i) EXPECT_LT(std::abs(amps[i] - expected[i]), 1e-13);
}

TEST(RandomState, DeterministicNormalizedDistinct) {
  const StateVector a = wl::random_state(2, 0), b = wl::random_state(2, 0);
  for (size_t i = 0; i < 2; ++i) EXPECT_EQ(a[i], b[i]);
  for (uint64_t s = 0; s < 50; ++s) EXPECT_NEAR(wl::random_state(1 + s % 17, s).norm(), 1.0, 1e-12);
  EXPECT_LT(std::abs(wl::inner(wl::random_state(4, 1), wl::random_state(4, 2))), 1 - 1e-6);
}

TEST(Antilinear, ComposeIdentity) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix m1 = oracle::random_matrix(5, 5, rng), m2 = oracle::random_matrix(5, 5, rng);
    const DenseOperator c = wl::compose({m1, true}, {m2, true});
    EXPECT_FALSE(c.antilinear);
    EXPECT_LT(oracle::max_abs(c.matrix, oracle::matmul(m1, m2.conjugate())), 1e-12);
    // Action agrees with applying the factors in turn.
    const StateVector psi = wl::random_state(5, t);
    const StateVector direct = DenseOperator{m1, true}.apply(DenseOperator{m2, false}.apply(psi));
    const StateVector composed = wl::compose({m1, true}, {m2, false}).apply(psi);
    for (size_t i = 0; i < 5; ++i) EXPECT_LT(std::abs(direct[i] - composed[i]), 1e-12);
  }
}

TEST(Transition, UnitaryCircuitsPreserveProbabilities) {
  const DenseOperator u = wl::materialize(wl::build_u2(4));
  std::vector<std::pair<StateVector, StateVector>> pairs;
  for (uint64_t k = 0; k < 20; ++k) pairs.emplace_back(wl::random_state(16, 2 * k), wl::random_state(16, 2 * k + 1));
  EXPECT_LT(wl::transition_experiment(u, pairs).max_abs_deviation, 1e-12);
  const DenseOperator anti{u.matrix, true};
  EXPECT_LT(wl::transition_experiment(anti, pairs).max_abs_deviation, 1e-12);
}

TEST(Transition, DimensionMismatchThrows) {
  const DenseOperator u{DenseMatrix::identity(4), false};
  std::vector<std::pair<StateVector, StateVector>> pairs{{wl::random_state(2, 0), wl::random_state(2, 1)}};
  EXPECT_THROW(wl::transition_experiment(u, pairs), std::invalid_argument);
}

TEST(Dump, BinaryAndCsvRoundTrip) {
  std::mt19937_64 rng(19);
  const DenseOperator op{oracle::random_matrix(4, 4, rng), true};
  std::stringstream bin;
  wl::write_binary(bin, op);
  EXPECT_EQ(bin.str().size(), 16u + 16 * 16);
  EXPECT_EQ(bin.str().substr(0, 6), "WLDUMP");
  const DenseOperator back = wl::read_binary_operator(bin);
  EXPECT_TRUE(back.antilinear);
  EXPECT_EQ(oracle::max_abs(back.matrix, op.matrix), 0.0);

  std::stringstream csv;
  wl::write_csv(csv, op.matrix);
  EXPECT_EQ(oracle::max_abs(wl::read_csv_matrix(csv), op.matrix), 0.0);

  const StateVector s = wl::random_state(8, 4);
  std::stringstream sb, sc;
  wl::write_binary(sb, s);
  wl::write_csv(sc, s);
  const StateVector s1 = wl::read_binary_state(sb), s2 = wl::read_csv_state(sc);
  for (size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(s1[i], s[i]);
    EXPECT_EQ(s2[i], s[i]);
  }
  std::stringstream junk("NOTADUMP........");
  EXPECT_THROW(wl::read_binary_operator(junk), wl::ParseError);
}
