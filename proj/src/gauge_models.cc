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

#include "wignerlab/gauge_models.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include "wignerlab/eigensolver.h"
#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

// Columns of `p` Gram-Schmidt orthonormalized, two passes each.
DenseMatrix orthonormal_range(const DenseMatrix& p) {
  const size_t n = p.rows();
  std::vector<std::vector<Complex>> basis;
  double trace = 0.0;
  for (size_t i = 0; i < n; ++i) trace += p(i, i).real();
  const size_t want = static_cast<size_t>(std::llround(trace));
  for (size_t c = 0; c < p.cols() && basis.size() < want; ++c) {
    std::vector<Complex> v(p.column(c).begin(), p.column(c).end());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Complex dot = 0.0;
        for (size_t i = 0; i < n; ++i) dot += std::conj(b[i]) * v[i];
        for (size_t i = 0; i < n; ++i) v[i] -= dot * b[i];
      }
    }
    double nrm = 0.0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) continue;
    for (auto& z : v) z /= nrm;
    basis.push_back(std::move(v));
  }
  DenseMatrix out(n, basis.size());
  for (size_t c = 0; c < basis.size(); ++c) {
    for (size_t i = 0; i < n; ++i) out(i, c) = basis[c][i];
  }
  return out;
}

void check_sign(int sign, const char* what) {
  if (sign != 1 && sign != -1) throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

}  // namespace

SectorEmbedding::SectorEmbedding(LayoutPtr layout, DenseMatrix iota, std::string label)
    : layout_(std::move(layout)), iota_(std::move(iota)), label_(std::move(label)) {}

SectorEmbedding SectorEmbedding::ancilla(size_t L, int sign) {
  check_sign(sign, "SectorEmbedding::ancilla");
  LayoutPtr layout = HilbertLayout::with_ancilla(L);
  const size_t src = size_t{1} << L;
  const size_t offset = sign > 0 ? 0 : src;
  DenseMatrix iota(2 * src, src);
  for (size_t b = 0; b < src; ++b) iota(b + offset, b) = 1.0;
  return SectorEmbedding(std::move(layout), std::move(iota), sign > 0 ? "ancilla+" : "ancilla-");
}

SectorEmbedding SectorEmbedding::full_space(LayoutPtr layout) {
  const size_t dim = layout->dimension();
  return SectorEmbedding(std::move(layout), DenseMatrix::identity(dim), "full");
}

SectorEmbedding SectorEmbedding::from_projector(LayoutPtr layout, const DenseMatrix& projector, std::string label) {
  if (projector.rows() != layout->dimension() || !projector.is_square()) {
    throw std::invalid_argument("SectorEmbedding::from_projector: projector does not match layout dimension");
  }
  return SectorEmbedding(std::move(layout), orthonormal_range(projector), std::move(label));
}

DenseMatrix SectorEmbedding::projector() const { return iota_ * iota_.adjoint(); }

StateVector SectorEmbedding::embed(const StateVector& alpha) const {
  if (alpha.dim() != source_dim()) {
    throw std::invalid_argument("embed: state dimension " + std::to_string(alpha.dim()) + " != source dimension " +
                                std::to_string(source_dim()));
  }
  return iota_ * alpha;
}

DenseOperator SectorEmbedding::restrict(const DenseOperator& a) const {
  if (a.dim() != target_dim()) throw std::invalid_argument("restrict: operator dimension mismatch");
  const DenseMatrix right = a.antilinear ? iota_.conjugate() : iota_;
  return {iota_.adjoint() * (a.matrix * right), a.antilinear};
}

StateVector embed_state(const StateVector& alpha, const SectorEmbedding& e) { return e.embed(alpha); }

DenseOperator build_d_noninvertible(size_t L, int sign, const MaterializeLimits& limits) {
  check_sign(sign, "build_d_noninvertible");
  const CliffordCircuit u2 = build_u2(L);
  const DenseMatrix u = materialize(u2, limits).matrix;
  return {multiply(u, symmetry_projector(sign, u2.layout())), false};
}

DenseOperator build_d_hat_with_projector(size_t L, const PauliSum& projector, bool antilinear,
                                         const MaterializeLimits& limits) {
  const CliffordCircuit ug = build_u_gauged(L);
  require_same_layout(ug.layout(), projector.layout(), "build_d_hat_with_projector");
  const DenseMatrix u = materialize(ug, limits).matrix;
  if (!antilinear) return {multiply(u, projector), false};
  // U K P = U conj(P) K
  return {u * materialize(projector, limits).matrix.conjugate(), true};
}

DenseOperator build_d_hat(size_t L, int sign, bool antilinear, const MaterializeLimits& limits) {
  check_sign(sign, "build_d_hat");
  const PauliSum p = symmetry_projector(sign, HilbertLayout::with_ancilla(L), ProjectorKind::kAncilla);
  return build_d_hat_with_projector(L, p, antilinear, limits);
}

DenseOperator gauss_sector_projector(size_t L, size_t max_sites) {
  if (L > max_sites) {
    throw DimensionCapExceeded("gauss_sector_projector: L=" + std::to_string(L) + " exceeds cap " +
                                   std::to_string(max_sites),
                               2 * L, 2 * max_sites);
  }
  const LayoutPtr layout = HilbertLayout::with_links(L);
  PauliSum prod = PauliSum::identity(layout);
  for (const PauliSum& g : gauss_law_operators(layout)) {
    prod = prod * ((PauliSum::identity(layout) + g) * 0.5);
  }
  return materialize(prod, {2 * L, 2 * L});
}

std::vector<double> sector_spectrum(const DenseMatrix& h, const DenseMatrix& projector) {
  const DenseMatrix b = orthonormal_range(projector);
  if (b.cols() == 0) return {};
  return hermitian_eigensolve(b.adjoint() * (h * b)).eigenvalues;
}

std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<double>& sorted, double tol) {
  std::vector<SpectralCluster> out;
  double sum = 0.0;
  double last = 0.0;
  for (double v : sorted) {
    if (!out.empty() && v - last <= tol) {
      sum += v;
      ++out.back().multiplicity;
      out.back().value = sum / static_cast<double>(out.back().multiplicity);
    } else {
      out.push_back({v, 1});
      sum = v;
    }
    last = v;
  }
  return out;
}

SpectralComparison compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  SpectralComparison cmp;
  cmp.clusters_a = cluster_eigenvalues(a, tol);
  cmp.clusters_b = cluster_eigenvalues(b, tol);
  std::vector<SpectralMismatch> table;
  size_t i = 0, j = 0;
  while (i < cmp.clusters_a.size() || j < cmp.clusters_b.size()) {
    const bool has_a = i < cmp.clusters_a.size();
    const bool has_b = j < cmp.clusters_b.size();
    if (has_a && has_b && std::abs(cmp.clusters_a[i].value - cmp.clusters_b[j].value) <= tol) {
      table.push_back({cmp.clusters_a[i].value, cmp.clusters_a[i].multiplicity, cmp.clusters_b[j].multiplicity});
      ++i, ++j;
    } else if (has_a && (!has_b || cmp.clusters_a[i].value < cmp.clusters_b[j].value)) {
      table.push_back({cmp.clusters_a[i].value, cmp.clusters_a[i].multiplicity, 0});
      ++i;
    } else {
      table.push_back({cmp.clusters_b[j].value, 0, cmp.clusters_b[j].multiplicity});
      ++j;
    }
  }
  std::optional<size_t> factor;
  bool uniform = !table.empty();
  for (const auto& row : table) {
    if (row.count_a == 0 || row.count_b == 0 || row.count_a % row.count_b != 0) {
      uniform = false;
      break;
    }
    const size_t r = row.count_a / row.count_b;
    if (factor && *factor != r) {
      uniform = false;
      break;
    }
    factor = r;
  }
  if (uniform) {
    cmp.uniform_factor = factor;
  } else {
    cmp.mismatches = std::move(table);
  }
  return cmp;
}

SpectralEquivalenceReport spectral_equivalence_check(size_t L, size_t max_sites) {
  if (L > max_sites) {
    throw DimensionCapExceeded("spectral_equivalence_check: L=" + std::to_string(L) + " exceeds cap " +
                                   std::to_string(max_sites),
                               2 * L, 2 * max_sites);
  }
  SpectralEquivalenceReport report;
  report.L = L;
  const PauliSum full = build_hamiltonian({ModelFamily::kFullyGaugedHG, L});
  const PauliSum minimal = build_hamiltonian({ModelFamily::kMinimalGaugedHG, L});
  const MaterializeLimits limits{2 * L, 2 * L};
  const DenseMatrix h_full = materialize(full, limits).matrix;
  const DenseMatrix h_min = materialize(minimal, limits).matrix;
  report.comparison =
      compare_spectra(hermitian_eigensolve(h_full).eigenvalues, hermitian_eigensolve(h_min).eigenvalues);

  // Gauss sector split by the Wilson loop, matched against H^+/- in eta sectors.
  const LayoutPtr links = full.layout();
  const DenseMatrix gauss = gauss_sector_projector(L, max_sites).matrix;
  PauliString wilson(links);
  for (size_t j = 1; j <= L; ++j) wilson *= PauliString::single(links, links->link_index(j), 'X');
  const LayoutPtr matter = HilbertLayout::matter_only(L);
  struct Candidate {
    std::string name;
    std::vector<double> spectrum;
  };
  std::vector<Candidate> candidates;
  for (ModelFamily f : {ModelFamily::kPeriodicHPlus, ModelFamily::kAntiperiodicHMinus}) {
    const DenseMatrix h = materialize(build_hamiltonian({f, L}), limits).matrix;
    for (int s : {1, -1}) {
      const DenseMatrix p = materialize(symmetry_projector(s, matter), limits).matrix;
      candidates.push_back({std::string(model_name(f)) + (s > 0 ? "|eta=+1" : "|eta=-1"), sector_spectrum(h, p)});
    }
  }
  for (int w : {1, -1}) {
    const PauliSum wilson_projector = (PauliSum::identity(links) + PauliSum(wilson, double(w))) * 0.5;
    const DenseMatrix pw = materialize(wilson_projector, limits).matrix;
    const std::vector<double> spec = sector_spectrum(h_full, gauss * pw);
    GaussSubsectorRow row{w, spec.size(), {}};
    for (const auto& c : candidates) {
      const SpectralComparison cmp = compare_spectra(spec, c.spectrum);
      if (cmp.uniform_factor && *cmp.uniform_factor == 1) row.matches.push_back(c.name);
    }
    report.gauss_subsectors.push_back(std::move(row));
  }
  return report;
}

}  // namespace wignerlab
