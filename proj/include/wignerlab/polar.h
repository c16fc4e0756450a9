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

#ifndef WIGNERLAB_POLAR_H
#define WIGNERLAB_POLAR_H

#include <string>
#include <vector>

#include "wignerlab/dense.h"

namespace wignerlab {

class SectorEmbedding;

/// Relative rank threshold: sigma_i counts when sigma_i > kRankRelativeTolerance * sigma_max.
inline constexpr double kRankRelativeTolerance = 1e-10;

struct SVDResult {
  DenseMatrix w;
  std::vector<double> sigma;  ///< descending, non-negative
  DenseMatrix v;
  size_t rank = 0;

  DenseMatrix sigma_matrix() const { return DenseMatrix::diagonal(sigma); }
  /// W Sigma V^dagger.
  DenseMatrix reconstruct() const;
};

/// A = W Sigma V^dagger for a square linear operator.
///
/// V diagonalizes A^dagger A; for every sigma_i above the rank threshold the
/// left vector is w_i = A v_i / sigma_i, with sigma_i = ||A v_i||. Remaining
/// columns of W are standard basis vectors Gram-Schmidt orthogonalized (two
/// passes) against the columns already present, in index order.
SVDResult svd(const DenseOperator& a);

/// A = U P with U unitary and P = V Sigma V^dagger positive semi-definite.
///
/// For an antilinear input M o K the factors are U o K (unitary_part, flagged
/// antilinear) and conj(P) (psd_part), so compose(unitary_part, psd_part)
/// reproduces the input in both cases.
struct PolarFactors {
  DenseOperator unitary_part;
  DenseOperator psd_part;
  bool antilinear = false;
  std::vector<double> sigma;
  size_t rank = 0;
  bool invertible = false;
  double reconstruction_error = 0.0;  ///< ||A - U P||_F
};

PolarFactors polar_decompose(const DenseOperator& a);

struct TheoremStructureReport {
  PolarFactors factors;
  double block_identity_error = 0.0;  ///< ||iota^dagger P iota - I||_F
  double offdiag_error = 0.0;         ///< ||(1 - P_H) P^2 P_H||_F
  double projector_absorption_error = 0.0;  ///< max(||P_H P - P_H||_F, ||P P_H - P_H||_F)
  bool block_identity = false;
  bool offdiag_vanishes = false;
  bool projector_absorbs = false;
  bool pass() const { return block_identity && offdiag_vanishes && projector_absorbs; }
};

/// Polar-decomposes `d` and checks that the PSD factor acts as the identity on
/// the embedded subspace, has no off-diagonal P^2 block out of it, and obeys
/// P_H P = P P_H = P_H. Tolerance 1e-9 (scaled by tol_scale).
TheoremStructureReport verify_theorem_structure(const DenseOperator& d, const SectorEmbedding& embedding,
                                                double tol_scale = 1.0);

struct CorollaryReport {
  double precondition_norm = 0.0;  ///< ||[H_G, P_H]||_F
  bool precondition_holds = false;
  bool skipped = false;
  double projected_commutator_norm = 0.0;  ///< ||P_H [H_G, U] P_H||_F
  bool pass = false;
};

/// Checks P_H [H_G, U] P_H = 0 with U the unitary polar factor of `d`, after
/// confirming [H_G, P_H] = 0; the check is skipped when the precondition fails.
CorollaryReport corollary_check(const DenseMatrix& h_g, const DenseOperator& d, const SectorEmbedding& embedding,
                                double tol_scale = 1.0);

}  // namespace wignerlab

#endif  // WIGNERLAB_POLAR_H
