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

#include "oracle.h"
#include "wignerlab/bitmask.h"
#include "wignerlab/errors.h"
#include "wignerlab/layout.h"
#include "wignerlab/pauli.h"

namespace wl = wignerlab;
using wl::PauliString;
using wl::PauliSum;

TEST(BitMask, WordBoundaries) {
  wl::BitMask m(130);
  m.set(0);
  m.set(63);
  m.set(64);
  m.set(129);
  EXPECT_EQ(m.popcount(), 4u);
  EXPECT_EQ(m.set_bits(), (std::vector<size_t>{0, 63, 64, 129}));
  m.flip(63);
  EXPECT_FALSE(m.test(63));
  wl::BitMask n(130);
  n.set(64);
  n.set(5);
  EXPECT_EQ(wl::BitMask::popcount_and(m, n), 1u);
  EXPECT_EQ((m ^ m).none(), true);
  EXPECT_LT(n, m);  // highest differing word decides
}

TEST(BitMask, AllAndU64) {
  wl::BitMask m(3);
  for (size_t i = 0; i < 3; ++i) m.set(i);
  EXPECT_TRUE(m.all());
  EXPECT_EQ(m.to_u64(), 7u);
}

TEST(Layout, LabelsAndAliases) {
  auto links = wl::HilbertLayout::with_links(3);
  EXPECT_EQ(links->describe(), "L=3, gauge=[3/2,5/2,7/2]");
  EXPECT_EQ(links->index_of("1/2"), links->index_of("7/2"));
  EXPECT_EQ(links->link_index(0), links->link_index(3));
  EXPECT_EQ(links->link_index(1), 3u);
  auto anc = wl::HilbertLayout::with_ancilla(3);
  EXPECT_EQ(anc->ancilla_index(), 3u);
  EXPECT_EQ(anc->label_of(3), "4");
  EXPECT_EQ(anc->dimension(), 16u);
  EXPECT_FALSE(wl::HilbertLayout::matter_only(3)->ancilla_index().has_value());
  for (auto l : {links, anc, wl::HilbertLayout::matter_only(5)}) {
    EXPECT_TRUE(wl::same_layout(wl::HilbertLayout::parse(l->describe()), l));
  }
  EXPECT_THROW(links->index_of("9"), std::out_of_range);
  EXPECT_THROW(wl::require_same_layout(links, anc, "test"), wl::LayoutMismatch);
}

TEST(PauliString, SingleQubitProducts) {
  auto l = wl::HilbertLayout::matter_only(1);
  auto x = wl::sigma_x(l, 1), y = wl::sigma_y(l, 1), z = wl::sigma_z(l, 1);
  const PauliString i = PauliString(l).with_phase(1);
  EXPECT_EQ(x * y, i * z);
  EXPECT_EQ(y * z, i * x);
  EXPECT_EQ(z * x, i * y);
  EXPECT_EQ(x * x, PauliString(l));
  EXPECT_FALSE(wl::commutes(x, z));
  EXPECT_TRUE(y.is_hermitian());
  EXPECT_FALSE(x.with_phase(1).is_hermitian());
}

TEST(PauliString, MatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  for (size_t n : {1u, 2u, 3u, 4u}) {
    auto l = wl::HilbertLayout::matter_only(n);
    for (int t = 0; t < 40; ++t) {
      const PauliString p = oracle::random_string(l, rng);
      const PauliString q = oracle::random_string(l, rng);
      const auto dp = oracle::dense(p), dq = oracle::dense(q);
      EXPECT_LT(oracle::max_abs(oracle::dense(p * q), oracle::matmul(dp, dq)), 1e-14);
      const auto comm = oracle::matmul(dp, dq) - oracle::matmul(dq, dp);
      EXPECT_EQ(wl::commutes(p, q), comm.frobenius_norm() < 1e-12);
      EXPECT_EQ(p.is_hermitian(), oracle::max_abs(dp, dp.adjoint()) < 1e-14);
    }
  }
}

TEST(PauliString, MultiplicationIsAssociative) {
  std::mt19937_64 rng(3);
  auto l = wl::HilbertLayout::with_links(40);  // 80 sites, spans two words
  for (int t = 0; t < 200; ++t) {
    auto a = oracle::random_string(l, rng), b = oracle::random_string(l, rng), c = oracle::random_string(l, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(wl::commutes(a, b), a * b == b * a);
  }
}

TEST(PauliString, TextRoundTrip) {
  std::mt19937_64 rng(5);
  for (auto l : {wl::HilbertLayout::matter_only(4), wl::HilbertLayout::with_ancilla(3),
                 wl::HilbertLayout::with_links(3)}) {
    for (int t = 0; t < 50; ++t) {
      auto p = oracle::random_string(l, rng);
      EXPECT_EQ(PauliString::parse(p.to_string()), p) << p.to_string();
    }
  }
  auto l = wl::HilbertLayout::matter_only(4);
  EXPECT_EQ(PauliString::parse("X1 Z3", l).to_string(), "(+1i^0) X1 Z3 | L=4, gauge=[]");
  EXPECT_EQ(PauliString::parse("Y2", l), wl::sigma_y(l, 2));
  EXPECT_THROW(PauliString::parse("Q1", l), wl::ParseError);
}

TEST(PauliSum, AlgebraMatchesDense) {
  std::mt19937_64 rng(9);
  auto l = wl::HilbertLayout::matter_only(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 20; ++t) {
    PauliSum a(l), b(l);
    for (int k = 0; k < 5; ++k) {
      a.add_term(oracle::random_string(l, rng), {u(rng), u(rng)});
      b.add_term(oracle::random_string(l, rng), {u(rng), u(rng)});
    }
    EXPECT_LT(oracle::max_abs(oracle::dense(a * b), oracle::matmul(oracle::dense(a), oracle::dense(b))), 1e-13);
    EXPECT_LT(oracle::max_abs(oracle::dense(a + b), oracle::dense(a) + oracle::dense(b)), 1e-14);
    EXPECT_LT(oracle::max_abs(oracle::dense(a.adjoint()), oracle::dense(a).adjoint()), 1e-14);
    EXPECT_LT(oracle::max_abs(oracle::dense(wl::sum_commutator(a, b)),
                              oracle::matmul(oracle::dense(a), oracle::dense(b)) -
                                  oracle::matmul(oracle::dense(b), oracle::dense(a))),
              1e-13);
    EXPECT_EQ(PauliSum::parse(a.to_string()), a);
  }
}

TEST(PauliSum, CancellationLeavesEmptySum) {
  auto l = wl::HilbertLayout::matter_only(2);
  PauliSum s(wl::sigma_x(l, 1));
  s -= PauliSum(wl::sigma_x(l, 1));
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.to_string(), "0 | L=2, gauge=[]");
  PauliSum y(wl::sigma_y(l, 1));
  EXPECT_EQ(y.coefficient_of(wl::sigma_y(l, 1)), wl::Complex(1.0));
  EXPECT_EQ(y.coefficient_of(PauliString(l).with_phase(2) * wl::sigma_y(l, 1)), wl::Complex(-1.0));
}

TEST(SymmetryProjector, IdempotentAndComplementary) {
  for (size_t L : {2u, 3u, 6u}) {
    auto l = wl::HilbertLayout::with_ancilla(L);
    for (auto kind : {wl::ProjectorKind::kEta, wl::ProjectorKind::kAncilla}) {
      auto p = wl::symmetry_projector(1, l, kind), m = wl::symmetry_projector(-1, l, kind);
      EXPECT_EQ((p * p).chopped(), p);
      EXPECT_TRUE((p * m).chopped().empty());
      EXPECT_EQ(p + m, PauliSum::identity(l));
    }
  }
  EXPECT_THROW(wl::symmetry_projector(0, wl::HilbertLayout::matter_only(2)), std::invalid_argument);
  EXPECT_THROW(wl::symmetry_projector(1, wl::HilbertLayout::matter_only(2), wl::ProjectorKind::kAncilla),
               std::invalid_argument);
}

TEST(EtaString, IsProductOfAllMatterX) {
  auto l = wl::HilbertLayout::with_ancilla(2);
  EXPECT_EQ(wl::eta_string(l), wl::sigma_x(l, 1) * wl::sigma_x(l, 2));
}
