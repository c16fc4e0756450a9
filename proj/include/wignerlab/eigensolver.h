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

#ifndef WIGNERLAB_EIGENSOLVER_H
#define WIGNERLAB_EIGENSOLVER_H

#include <vector>

#include "wignerlab/dense.h"

namespace wignerlab {

struct SpectrumResult {
  std::vector<double> eigenvalues;  ///< ascending
  DenseMatrix eigenvectors;         ///< column k belongs to eigenvalues[k]
  double residual = 0.0;            ///< max_k ||H v_k - lambda_k v_k||
  size_t iterations = 0;            ///< implicit QL steps, summed over eigenvalues
};

struct EigenOptions {
  /// QL steps allowed per eigenvalue.
  size_t max_iterations = 60;
  /// Entrywise Hermiticity tolerance, relative to the largest entry.
  double hermitian_tolerance = 1e-12;
};

/// Diagonalizes a Hermitian matrix: Householder reduction to a complex
/// tridiagonal, a diagonal phase change making it real symmetric, then
/// implicit QL with Wilkinson-style shifts. Vectors inside a degenerate
/// cluster form an orthonormal basis with no canonical choice.
///
/// Throws std::invalid_argument for non-square, antilinear or non-Hermitian
/// input and ConvergenceFailure when an eigenvalue exceeds the step cap.
SpectrumResult hermitian_eigensolve(const DenseOperator& op, const EigenOptions& options = {});
SpectrumResult hermitian_eigensolve(const DenseMatrix& m, const EigenOptions& options = {});

}  // namespace wignerlab

#endif  // WIGNERLAB_EIGENSOLVER_H
