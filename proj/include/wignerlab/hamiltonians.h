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

#ifndef WIGNERLAB_HAMILTONIANS_H
#define WIGNERLAB_HAMILTONIANS_H

#include <optional>
#include <string_view>
#include <vector>

#include "wignerlab/clifford.h"
#include "wignerlab/dense.h"
#include "wignerlab/pauli.h"

namespace wignerlab {

/// Transverse-field Ising chains at the self-dual point (all couplings 1).
enum class ModelFamily {
  kOpenH1,              // -sum_{j<L} Z_j Z_{j+1} - sum_{j<L} X_j
  kSelfDualClosedH2,    // H1 - X_L - eta Z_L Z_1
  kPeriodicHPlus,       // H1 - X_L - Z_L Z_1
  kAntiperiodicHMinus,  // H1 - X_L + Z_L Z_1
  kMinimalGaugedHG,     // H1 - X_L - Z_L Z_{L+1} Z_1, ancilla on the (L,1) link
  kFullyGaugedHG,       // gauge link X~_{j+1/2} inside every bond, Gauss law G_j
};

struct ModelSpec {
  ModelFamily family;
  size_t L;
};

/// CLI names: h1, h2, h-periodic, h-antiperiodic, h-min-gauged, h-full-gauged.
std::string_view model_name(ModelFamily family);
std::optional<ModelFamily> parse_model_name(std::string_view name);

LayoutPtr layout_for(const ModelSpec& spec);

/// Exact term list. Throws std::invalid_argument for L < 2.
PauliSum build_hamiltonian(const ModelSpec& spec);

/// G_j = Z~_{j-1/2} X_j Z~_{j+1/2}, j = 1..L, with link 1/2 identified with L+1/2.
/// Throws std::invalid_argument unless `layout` is the link layout.
std::vector<PauliSum> gauss_law_operators(const LayoutPtr& layout);

/// Dual matter fields on the link layout:
///   Z_j -> X~_{3/2} ... X~_{j-1/2} Z_j (empty string for j = 1),  X_j -> X_j.
/// The map is an involution, so it also rewrites original fields in terms of
/// dual ones.
DualityMap dual_variable_map(const LayoutPtr& layout);

/// Applies a generator table as a homomorphism: each X_s / Z_s factor of a
/// string is replaced by its image (sites absent from the table are fixed).
/// Replaces each X_s / Z_s factor of p by its image in `map`, keeping the
/// X-before-Z order of the string. Multiplicative on operators without link Z.
PauliString substitute(const DualityMap& map, const PauliString& p);
PauliSum substitute(const DualityMap& map, const PauliSum& s);

/// Rewrites an operator on the link layout whose link content is only X~'s,
/// either none or all L of them, onto the ancilla layout with
/// prod_j X~_{j-1/2} -> Z_{L+1}. Throws std::invalid_argument otherwise.
PauliSum collapse_links_to_ancilla(const PauliSum& s, const LayoutPtr& ancilla_layout);

struct ProjectedCommutationReport {
  size_t L = 0;
  int hamiltonian_sign = 1;  ///< H^+ or H^-
  int projector_sign = 1;    ///< D_+ or D_-
  bool dense_ran = false;
  double dense_norm = 0.0;       ///< ||[H, D]||_F
  double dense_threshold = 0.0;  ///< 1e-10 ||H||_F ||D||_F
  bool dense_pass = false;
  size_t symbolic_residual_terms = 0;  ///< terms left in U H U^dagger P - H P
  bool symbolic_pass = false;
  bool pass() const { return symbolic_pass && (!dense_ran || dense_pass); }
};

/// Checks [H^{hs}, U2 P_{ps}] = 0 densely (when L fits `dense_max_sites`) and
/// symbolically via U2 H U2^dagger P = H P, which holds because U2 commutes
/// with eta.
ProjectedCommutationReport projected_commutation_check(size_t L, int projector_sign, int hamiltonian_sign,
                                                       size_t dense_max_sites = 8);
inline ProjectedCommutationReport projected_commutation_check(size_t L, int sign) {
  return projected_commutation_check(L, sign, sign);
}

}  // namespace wignerlab

#endif  // WIGNERLAB_HAMILTONIANS_H
