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

#ifndef WIGNERLAB_GAUGE_MODELS_H
#define WIGNERLAB_GAUGE_MODELS_H

#include <optional>
#include <string>
#include <vector>

#include "wignerlab/dense.h"
#include "wignerlab/hamiltonians.h"
#include "wignerlab/pauli.h"

namespace wignerlab {

/// Isometric inclusion iota of a 2^L dimensional space into a sector of a
/// larger layout. Columns of the isometry are orthonormal.
class SectorEmbedding {
 public:
  /// |g> (x) |alpha> with Z_{L+1} |g> = sign |g>; |g_+> is ancilla bit 0.
  static SectorEmbedding ancilla(size_t L, int sign);
  /// Identity embedding of a layout into itself.
  static SectorEmbedding full_space(LayoutPtr layout);
  /// Orthonormal basis of the range of a Hermitian projector, Gram-Schmidt
  /// over its columns in index order.
  static SectorEmbedding from_projector(LayoutPtr layout, const DenseMatrix& projector, std::string label);

  const LayoutPtr& layout() const { return layout_; }
  const std::string& label() const { return label_; }
  const DenseMatrix& isometry() const { return iota_; }
  size_t source_dim() const { return iota_.cols(); }
  size_t target_dim() const { return iota_.rows(); }
  /// P_H = iota iota^dagger.
  DenseMatrix projector() const;

  StateVector embed(const StateVector& alpha) const;
  /// iota^dagger A iota (for antilinear A the linear part is restricted and the flag kept).
  DenseOperator restrict(const DenseOperator& a) const;

 private:
  SectorEmbedding(LayoutPtr layout, DenseMatrix iota, std::string label);
  LayoutPtr layout_;
  DenseMatrix iota_;
  std::string label_;
};

StateVector embed_state(const StateVector& alpha, const SectorEmbedding& e);

/// D_sign = U2 P_sign on the matter layout.
DenseOperator build_d_noninvertible(size_t L, int sign, const MaterializeLimits& limits = {});
/// D^_sign = U_G P~_sign on the ancilla layout, P~_sign = (1 + sign Z_{L+1}) / 2.
/// With `antilinear` the operator is U_G K P~_sign.
DenseOperator build_d_hat(size_t L, int sign, bool antilinear = false, const MaterializeLimits& limits = {});
/// U_G times an arbitrary projector on the ancilla layout.
DenseOperator build_d_hat_with_projector(size_t L, const PauliSum& projector, bool antilinear = false,
                                         const MaterializeLimits& limits = {});

/// prod_j (1 + G_j) / 2 on the link layout. Requires L <= max_sites.
DenseOperator gauss_sector_projector(size_t L, size_t max_sites = 5);

/// Eigenvalues of H restricted to the range of a projector.
std::vector<double> sector_spectrum(const DenseMatrix& h, const DenseMatrix& projector);

struct SpectralCluster {
  double value;
  size_t multiplicity;
};

/// Sorted eigenvalues grouped by consecutive gaps <= tol.
std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& sorted, double tol = 1e-8);

struct SpectralMismatch {
  double value;
  size_t count_a;
  size_t count_b;
};

struct SpectralComparison {
  std::optional<size_t> uniform_factor;  ///< multiplicity_a / multiplicity_b, when one integer fits all
  std::vector<SpectralCluster> clusters_a;
  std::vector<SpectralCluster> clusters_b;
  std::vector<SpectralMismatch> mismatches;  ///< per-value table when the factor is not uniform
  bool equivalent() const { return uniform_factor.has_value(); }
};

SpectralComparison compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-8);

struct GaussSubsectorRow {
  int wilson_sign;  ///< eigenvalue of the product of all link X~
  size_t dim;
  std::vector<std::string> matches;  ///< e.g. "h-periodic|eta=+1"
};

struct SpectralEquivalenceReport {
  size_t L = 0;
  std::string model_a = "h-full-gauged";
  std::string model_b = "h-min-gauged";
  SpectralComparison comparison;
  std::vector<GaussSubsectorRow> gauss_subsectors;  ///< descriptive only
  bool pass() const { return comparison.equivalent(); }
};

/// Diagonalizes the fully and minimally gauged models and compares multisets.
SpectralEquivalenceReport spectral_equivalence_check(size_t L, size_t max_sites = 5);

}  // namespace wignerlab

#endif  // WIGNERLAB_GAUGE_MODELS_H
