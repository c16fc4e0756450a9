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

#include "wignerlab/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

double max_residual(const DenseMatrix& h, const std::vector<double>& values, const DenseMatrix& vectors) {
  const DenseMatrix hv = h * vectors;
  double worst = 0.0;
  for (size_t k = 0; k < values.size(); ++k) {
    double s = 0.0;
    for (size_t r = 0; r < h.rows(); ++r) s += std::norm(hv(r, k) - values[k] * vectors(r, k));
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

// Reflector I - 2 v v^dagger acting on rows [first, n).
struct Reflector {
  size_t first = 0;
  std::vector<Complex> v;
};

// a <- H a H for every column below the pivot; returns the reflector used.
// The working copy is kept full so column access stays contiguous.
Reflector reduce_column(DenseMatrix& a, size_t k) {
  const size_t n = a.rows();
  Reflector h{k + 1, {}};
  const size_t m = n - h.first;
  auto col = a.column(k);
  double xnorm = 0.0;
  for (size_t i = h.first; i < n; ++i) xnorm += std::norm(col[i]);
  xnorm = std::sqrt(xnorm);
  if (xnorm == 0.0) return h;

  const Complex x0 = col[h.first];
  const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
  const Complex alpha = -phase * xnorm;
  h.v.assign(col.begin() + static_cast<std::ptrdiff_t>(h.first), col.end());
  h.v[0] -= alpha;
  double vnorm = 0.0;
  for (const auto& z : h.v) vnorm += std::norm(z);
  vnorm = std::sqrt(vnorm);
  for (auto& z : h.v) z /= vnorm;

  // p = A v on the trailing block, then q = p - (v^dagger p) v.
  std::vector<Complex> p(m, 0.0);
  for (size_t j = 0; j < m; ++j) {
    const Complex vj = h.v[j];
    const Complex* aj = a.column(h.first + j).data() + h.first;
    for (size_t i = 0; i < m; ++i) p[i] += aj[i] * vj;
  }
  Complex kk = 0.0;
  for (size_t i = 0; i < m; ++i) kk += std::conj(h.v[i]) * p[i];
  for (size_t i = 0; i < m; ++i) p[i] -= kk.real() * h.v[i];

  for (size_t j = 0; j < m; ++j) {
    const Complex qj = std::conj(p[j]) * 2.0, vj = std::conj(h.v[j]) * 2.0;
    Complex* aj = a.column(h.first + j).data() + h.first;
    for (size_t i = 0; i < m; ++i) aj[i] -= h.v[i] * qj + p[i] * vj;
  }
  for (size_t i = h.first; i < n; ++i) col[i] = 0.0;
  col[h.first] = alpha;
  for (size_t i = h.first; i < n; ++i) a(k, i) = std::conj(col[i]);
  return h;
}

// m <- H m, column by column.
void apply_reflector(const Reflector& h, DenseMatrix& m) {
  if (h.v.empty()) return;
  for (size_t c = 0; c < m.cols(); ++c) {
    Complex* mc = m.column(c).data() + h.first;
    Complex dot = 0.0;
    for (size_t i = 0; i < h.v.size(); ++i) dot += std::conj(h.v[i]) * mc[i];
    dot *= 2.0;
    for (size_t i = 0; i < h.v.size(); ++i) mc[i] -= h.v[i] * dot;
  }
}

// Implicit QL on the symmetric tridiagonal (d, e), e[i] coupling i and i+1.
// z is column-major n x n and accumulates the rotations.
size_t tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, size_t cap) {
  const size_t n = d.size();
  const double eps = std::numeric_limits<double>::epsilon();
  size_t total = 0;
  double shift = 0.0, tst = 0.0;
  for (size_t l = 0; l < n; ++l) {
    tst = std::max(tst, std::abs(d[l]) + std::abs(e[l]));
    size_t m = l;
    while (m + 1 < n && std::abs(e[m]) > eps * tst) ++m;
    if (m > l) {
      size_t iter = 0;
      do {
        if (iter++ == cap) {
          throw ConvergenceFailure("hermitian_eigensolve: no convergence after " + std::to_string(cap) +
                                       " QL steps for eigenvalue " + std::to_string(l),
                                   std::abs(e[l]));
        }
        ++total;
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0, s = 0.0, s2 = 0.0;
        const double el1 = e[l + 1];
        for (size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          double* zi = z.data() + i * n;
          double* zi1 = zi + n;
          for (size_t k = 0; k < n; ++k) {
            const double t = zi1[k];
            zi1[k] = s * zi[k] + c * t;
            zi[k] = c * zi[k] - s * t;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst);
    }
    d[l] += shift;
    e[l] = 0.0;
  }
  return total;
}

}  // namespace

SpectrumResult hermitian_eigensolve(const DenseOperator& op, const EigenOptions& options) {
  if (op.antilinear) throw std::invalid_argument("hermitian_eigensolve: antilinear operator");
  return hermitian_eigensolve(op.matrix, options);
}

SpectrumResult hermitian_eigensolve(const DenseMatrix& h, const EigenOptions& options) {
  if (!h.is_square()) throw std::invalid_argument("hermitian_eigensolve: matrix is not square");
  const size_t n = h.rows();
  double scale = 0.0;
  for (const auto& v : h.data()) scale = std::max(scale, std::abs(v));
  if (!is_hermitian(h, options.hermitian_tolerance * std::max(scale, 1.0))) {
    throw std::invalid_argument("hermitian_eigensolve: matrix is not Hermitian");
  }

  DenseMatrix a = h;
  for (size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  std::vector<Reflector> reflectors;
  for (size_t k = 0; k + 2 < n; ++k) reflectors.push_back(reduce_column(a, k));

  // Phases d_k turn the complex off-diagonal into |e_k|.
  std::vector<double> diag(n), off(n, 0.0);
  std::vector<Complex> phase(n, 1.0);
  for (size_t k = 0; k < n; ++k) diag[k] = a(k, k).real();
  for (size_t k = 0; k + 1 < n; ++k) {
    const Complex sub = a(k + 1, k);
    off[k] = std::abs(sub);
    phase[k + 1] = off[k] > 0.0 ? phase[k] * sub / off[k] : phase[k];
  }

  std::vector<double> z(n * n, 0.0);
  for (size_t k = 0; k < n; ++k) z[k * n + k] = 1.0;
  SpectrumResult out;
  out.iterations = tridiagonal_ql(diag, off, z, options.max_iterations);

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return diag[i] < diag[j]; });

  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n);
  for (size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = diag[order[k]];
    const double* src = z.data() + order[k] * n;
    auto dst = out.eigenvectors.column(k);
    for (size_t i = 0; i < n; ++i) dst[i] = phase[i] * src[i];
  }
  for (size_t k = reflectors.size(); k-- > 0;) apply_reflector(reflectors[k], out.eigenvectors);
  out.residual = max_residual(h, out.eigenvalues, out.eigenvectors);
  return out;
}

}  // namespace wignerlab
