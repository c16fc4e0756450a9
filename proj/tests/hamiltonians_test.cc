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

#include "oracle.h"
#include "wignerlab/hamiltonians.h"

namespace wl = wignerlab;
using wl::ModelFamily;
using wl::PauliString;
using wl::PauliSum;

namespace {

PauliSum model(ModelFamily f, size_t L) { return wl::build_hamiltonian({f, L}); }

}  // namespace

TEST(Hamiltonians, TermCounts) {
  // At L = 2 the boundary bond coincides with the bulk bond and merges.
  EXPECT_EQ(model(ModelFamily::kPeriodicHPlus, 2).size(), 3u);
  EXPECT_EQ(model(ModelFamily::kAntiperiodicHMinus, 2).size(), 2u);
  for (size_t L : {3u, 7u}) {
    EXPECT_EQ(model(ModelFamily::kOpenH1, L).size(), 2 * L - 2);
    EXPECT_EQ(model(ModelFamily::kSelfDualClosedH2, L).size(), 2 * L);
    EXPECT_EQ(model(ModelFamily::kPeriodicHPlus, L).size(), 2 * L);
    EXPECT_EQ(model(ModelFamily::kAntiperiodicHMinus, L).size(), 2 * L);
    EXPECT_EQ(model(ModelFamily::kMinimalGaugedHG, L).size(), 2 * L);
    EXPECT_EQ(model(ModelFamily::kFullyGaugedHG, L).size(), 2 * L);
  }
  EXPECT_THROW(model(ModelFamily::kOpenH1, 1), std::invalid_argument);
}

TEST(Hamiltonians, SelfDualClosedChainStringsAtTwoSites) {
  const PauliSum h = model(ModelFamily::kSelfDualClosedH2, 2);
  const PauliSum expected = PauliSum::parse("(-1+0i) Z1 Z2 + (-1+0i) X1 + (-1+0i) X2 + (1+0i) Y1 Y2 | L=2, gauge=[]");
  EXPECT_EQ(h, expected) << h.to_string();
}

TEST(Hamiltonians, AllHermitian) {
  for (auto f : {ModelFamily::kOpenH1, ModelFamily::kSelfDualClosedH2, ModelFamily::kPeriodicHPlus,
                 ModelFamily::kAntiperiodicHMinus, ModelFamily::kMinimalGaugedHG, ModelFamily::kFullyGaugedHG}) {
    const PauliSum h = model(f, 3);
    EXPECT_EQ(h.adjoint(), h) << wl::model_name(f);
    const auto d = oracle::dense(h);
    EXPECT_LT(oracle::max_abs(d, d.adjoint()), 1e-15);
  }
}

TEST(Hamiltonians, ModelNamesRoundTrip) {
  for (auto f : {ModelFamily::kOpenH1, ModelFamily::kSelfDualClosedH2, ModelFamily::kPeriodicHPlus,
                 ModelFamily::kAntiperiodicHMinus, ModelFamily::kMinimalGaugedHG, ModelFamily::kFullyGaugedHG}) {
    EXPECT_EQ(wl::parse_model_name(wl::model_name(f)), f);
  }
  EXPECT_FALSE(wl::parse_model_name("h3").has_value());
}

TEST(Hamiltonians, BoundaryTermsDifferOnlyInSign) {
  const PauliSum diff = model(ModelFamily::kPeriodicHPlus, 4) - model(ModelFamily::kAntiperiodicHMinus, 4);
  auto l = diff.layout();
  EXPECT_EQ(diff, PauliSum(wl::sigma_z(l, 4) * wl::sigma_z(l, 1), -2.0));
}

TEST(GaussLaw, CommutesAndMultipliesToEta) {
  for (size_t L : {2u, 3u, 6u}) {
    auto links = wl::HilbertLayout::with_links(L);
    const PauliSum h = model(ModelFamily::kFullyGaugedHG, L);
    PauliSum prod = PauliSum::identity(links);
    for (const auto& g : wl::gauss_law_operators(links)) {
      EXPECT_TRUE(wl::sum_commutator(h, g).chopped().empty());
      prod *= g;
    }
    EXPECT_EQ(prod, PauliSum(wl::eta_string(links)));
  }
  EXPECT_THROW(wl::gauss_law_operators(wl::HilbertLayout::matter_only(3)), std::invalid_argument);
}

TEST(DualVariables, SubstitutionIsAnInvolution) {
  std::mt19937_64 rng(8);
  auto links = wl::HilbertLayout::with_links(5);
  const auto m = wl::dual_variable_map(links);
  for (int t = 0; t < 100; ++t) {
    const PauliString p = oracle::random_string(links, rng);
    EXPECT_EQ(wl::substitute(m, wl::substitute(m, p)), p);
  }
}

TEST(DualVariables, SubstitutionPreservesProductsWithoutLinkZ) {
  std::mt19937_64 rng(10);
  auto links = wl::HilbertLayout::with_links(4);
  const auto m = wl::dual_variable_map(links);
  const auto no_link_z = [&](PauliString p) {
    for (size_t j = 1; j <= 4; ++j) p.set_z(links->link_index(j), false);
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    const PauliString p = no_link_z(oracle::random_string(links, rng)), q = no_link_z(oracle::random_string(links, rng));
    EXPECT_EQ(wl::substitute(m, p * q), wl::substitute(m, p) * wl::substitute(m, q));
  }
}

TEST(DualVariables, FullyGaugedCollapsesToMinimal) {
  for (size_t L : {2u, 3u, 5u, 12u}) {
    auto links = wl::HilbertLayout::with_links(L);
    const PauliSum sub = wl::substitute(wl::dual_variable_map(links), model(ModelFamily::kFullyGaugedHG, L));
    const PauliSum hg = model(ModelFamily::kMinimalGaugedHG, L);
    EXPECT_EQ(wl::collapse_links_to_ancilla(sub, hg.layout()), hg);
  }
}

TEST(DualVariables, CollapseRejectsPartialStrings) {
  auto links = wl::HilbertLayout::with_links(3);
  PauliSum bad(PauliString::parse("X3/2 Z1", links));
  EXPECT_THROW(wl::collapse_links_to_ancilla(bad, wl::HilbertLayout::with_ancilla(3)), std::invalid_argument);
}

TEST(ProjectedCommutation, MatchingSignsCommute) {
  for (size_t L : {3u, 4u}) {
    for (int s : {1, -1}) {
      const auto r = wl::projected_commutation_check(L, s);
      EXPECT_TRUE(r.dense_ran);
      EXPECT_TRUE(r.pass()) << "L=" << L << " s=" << s << " dense=" << r.dense_norm;
    }
  }
  const auto big = wl::projected_commutation_check(40, 1);
  EXPECT_FALSE(big.dense_ran);
  EXPECT_TRUE(big.symbolic_pass);
}

TEST(ProjectedCommutation, MismatchedSignsFail) {
  const auto r = wl::projected_commutation_check(3, 1, -1);
  EXPECT_FALSE(r.symbolic_pass);
  EXPECT_FALSE(r.dense_pass);
  // Frozen from the dense oracle: ||[H^-, D_+]||_F = 4 sqrt 2 at L = 3.
  EXPECT_NEAR(r.dense_norm, 4 * std::sqrt(2.0), 1e-10);
}
