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

#include "wignerlab/polar.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wignerlab/eigensolver.h"
#include "wignerlab/gauge_models.h"

namespace wignerlab {

namespace {

double column_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Orthogonalizes v against the first `count` columns of w.
void project_out(const DenseMatrix& w, size_t count, std::vector<Complex>& v) {
  for (size_t c = 0; c < count; ++c) {
    const auto col = w.column(c);
    Complex dot = 0.0;
    for (size_t i = 0; i < v.size(); ++i) dot += std::conj(col[i]) * v[i];
    for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * col[i];
  }
}

}  // namespace

DenseMatrix SVDResult::reconstruct() const { return w * (sigma_matrix() * v.adjoint()); }

SVDResult svd(const DenseOperator& a) {
  if (a.antilinear) throw std::invalid_argument("svd: expects a linear operator");
  const DenseMatrix& m = a.matrix;
  if (!m.is_square()) throw std::invalid_argument("svd: expects a square matrix");
  const size_t n = m.rows();

  const SpectrumResult eig = hermitian_eigensolve(m.adjoint() * m);
  // Eigenvalues ascend; singular values are re-measured as ||A v_i|| and sorted descending.
  const DenseMatrix av = m * eig.eigenvectors;
  std::vector<double> norms(n);
  for (size_t k = 0; k < n; ++k) norms[k] = column_norm(av.column(k));
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return norms[x] > norms[y]; });

  SVDResult out;
  out.v = DenseMatrix(n, n);
  out.w = DenseMatrix(n, n);
  out.sigma.resize(n);
  for (size_t k = 0; k < n; ++k) {
    out.sigma[k] = norms[order[k]];
    for (size_t i = 0; i < n; ++i) out.v(i, k) = eig.eigenvectors(i, order[k]);
  }
  const double threshold = n ? kRankRelativeTolerance * out.sigma[0] : 0.0;
  while (out.rank < n && out.sigma[out.rank] > threshold && out.sigma[out.rank] > 0.0) ++out.rank;

  for (size_t k = 0; k < out.rank; ++k) {
    const auto src = av.column(order[k]);
    for (size_t i = 0; i < n; ++i) out.w(i, k) = src[i] / out.sigma[k];
  }
  size_t filled = out.rank;
  for (size_t e = 0; e < n && filled < n; ++e) {
    std::vector<Complex> v(n, 0.0);
    v[e] = 1.0;
    project_out(out.w, filled, v);
    project_out(out.w, filled, v);
    const double nrm = column_norm(v);
    if (nrm < 1e-6) continue;
    for (size_t i = 0; i < n; ++i) out.w(i, filled) = v[i] / nrm;
    ++filled;
  }
  if (filled < n) throw std::runtime_error("svd: kernel completion failed");
  return out;
}

PolarFactors polar_decompose(const DenseOperator& a) {
  const SVDResult s = svd({a.matrix, false});
  const DenseMatrix u = s.w * s.v.adjoint();
  const DenseMatrix p = s.v * (s.sigma_matrix() * s.v.adjoint());
  PolarFactors f;
  f.antilinear = a.antilinear;
  f.sigma = s.sigma;
  f.rank = s.rank;
  f.invertible = s.rank == a.dim();
  f.reconstruction_error = frobenius_distance(a.matrix, u * p);
  if (a.antilinear) {
    // M K = U P K = (U K) conj(P)
    f.unitary_part = {u, true};
    f.psd_part = {p.conjugate(), false};
  } else {
    f.unitary_part = {u, false};
    f.psd_part = {p, false};
  }
  return f;
}

TheoremStructureReport verify_theorem_structure(const DenseOperator& d, const SectorEmbedding& embedding,
                                                double tol_scale) {
  if (embedding.target_dim() != d.dim() || embedding.source_dim() > d.dim()) {
    throw std::invalid_argument("verify_theorem_structure: embedding does not fit the operator dimension");
  }
  const double tol = 1e-9 * tol_scale;
  TheoremStructureReport r;
  r.factors = polar_decompose(d);
  const DenseMatrix& p = r.factors.psd_part.matrix;
  const DenseMatrix& iota = embedding.isometry();
  const DenseMatrix ph = embedding.projector();
  const size_t n = d.dim();

  r.block_identity_error = frobenius_distance(iota.adjoint() * (p * iota), DenseMatrix::identity(iota.cols()));
  const DenseMatrix complement = DenseMatrix::identity(n) - ph;
  r.offdiag_error = (complement * ((p * p) * ph)).frobenius_norm();
  r.projector_absorption_error = std::max(frobenius_distance(ph * p, ph), frobenius_distance(p * ph, ph));
  r.block_identity = r.block_identity_error < tol;
  r.offdiag_vanishes = r.offdiag_error < tol;
  r.projector_absorbs = r.projector_absorption_error < tol;
  return r;
}

CorollaryReport corollary_check(const DenseMatrix& h_g, const DenseOperator& d, const SectorEmbedding& embedding,
                                double tol_scale) {
  if (h_g.rows() != d.dim() || embedding.target_dim() != d.dim()) {
    throw std::invalid_argument("corollary_check: dimension mismatch");
  }
  CorollaryReport r;
  const DenseMatrix ph = embedding.projector();
  r.precondition_norm = commutator(h_g, ph).frobenius_norm();
  r.precondition_holds = commutes_within_tolerance(h_g, ph, tol_scale);
  if (!r.precondition_holds) {
    r.skipped = true;
    return r;
  }
  const PolarFactors f = polar_decompose(d);
  const DenseMatrix& u = f.unitary_part.matrix;
  DenseMatrix projected;
  if (f.unitary_part.antilinear) {
    // P [H, U K] P = P (H U - U conj(H)) conj(P) K
    projected = ph * ((h_g * u - u * h_g.conjugate()) * ph.conjugate());
  } else {
    projected = ph * (commutator(h_g, u) * ph);
  }
  r.projected_commutator_norm = projected.frobenius_norm();
  r.pass = r.projected_commutator_norm < 1e-9 * tol_scale;
  return r;
}

}  // namespace wignerlab
