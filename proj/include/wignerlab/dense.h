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

#ifndef WIGNERLAB_DENSE_H
#define WIGNERLAB_DENSE_H

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "wignerlab/clifford.h"
#include "wignerlab/pauli.h"

namespace wignerlab {

inline constexpr double kUnitaryTolerance = 1e-10;
/// Commutator pass threshold is this times ||A||_F ||B||_F.
inline constexpr double kCommutatorRelativeTolerance = 1e-10;
/// Residual bound of the eigensolver is this times the dimension.
inline constexpr double kEigenResidualPerDim = 1e-9;

/// Column-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(size_t rows, size_t cols);
  static DenseMatrix identity(size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix diagonal(std::span<const double> values);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(size_t r, size_t c) { return data_[c * rows_ + r]; }
  const Complex& operator()(size_t r, size_t c) const { return data_[c * rows_ + r]; }
  std::span<Complex> column(size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const Complex> column(size_t c) const { return {data_.data() + c * rows_, rows_}; }
  std::span<const Complex> data() const { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix conjugate() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Complex s);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
  friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

  double frobenius_norm() const;
  /// Principal block [r0, r0+nr) x [c0, c0+nc).
  DenseMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Complex> data_;
};

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);
/// ||[a, b]||_F compared against kCommutatorRelativeTolerance * ||a|| ||b|| * scale.
bool commutes_within_tolerance(const DenseMatrix& a, const DenseMatrix& b, double scale = 1.0);
bool is_hermitian(const DenseMatrix& m, double tol = 1e-12);
/// ||M^dagger M - I||_F < tol.
bool is_unitary(const DenseMatrix& m, double tol = kUnitaryTolerance);

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}
  static StateVector basis(size_t dim, size_t index);

  size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](size_t i) const { return amps_[i]; }
  Complex& operator[](size_t i) { return amps_[i]; }

  double norm() const;
  StateVector normalized() const;
  StateVector conjugate() const;

 private:
  std::vector<Complex> amps_;
};

/// <a|b> (antilinear in a).
Complex inner(const StateVector& a, const StateVector& b);
StateVector operator*(const DenseMatrix& m, const StateVector& v);

/// Matrix M together with an antilinearity flag. When `antilinear` is set the
/// operator is M o K: psi -> M conj(psi).
struct DenseOperator {
  DenseMatrix matrix;
  bool antilinear = false;

  size_t dim() const { return matrix.rows(); }
  StateVector apply(const StateVector& psi) const;
};

/// a o b. (M1 K^s1)(M2 K^s2) = M1 conj^s1(M2) K^{s1 xor s2}.
DenseOperator compose(const DenseOperator& a, const DenseOperator& b);

struct MaterializeLimits {
  size_t max_sum_sites = 14;
  size_t max_circuit_sites = 12;
};

/// Explicit matrices. Strings act directly on basis states,
/// X^x Z^z |b> = (-1)^{|z & b|} |b xor x>; circuits are ordered products of
/// the exact gate matrices below. Throws DimensionCapExceeded.
DenseOperator materialize(const PauliString& p, const MaterializeLimits& limits = {});
DenseOperator materialize(const PauliSum& s, const MaterializeLimits& limits = {});
DenseOperator materialize(const CliffordCircuit& c, const MaterializeLimits& limits = {});

// Exact gate matrices. Two-site gates use local index bit(first) + 2 bit(second),
// where (first, second) = (control, target) for ControlledX.
DenseMatrix controlled_x_matrix();
DenseMatrix controlled_z_matrix();
DenseMatrix swap_matrix();
DenseMatrix hadamard_matrix();

/// In-place psi <- g psi on a full state of 2^n amplitudes.
void apply_gate(const CliffordGate& gate, std::span<Complex> psi);
/// out += coefficient * p psi.
void accumulate_pauli(const PauliString& p, Complex coefficient, std::span<const Complex> psi, std::span<Complex> out);

/// s * m and m * s without materializing s.
DenseMatrix multiply(const PauliSum& s, const DenseMatrix& m);
DenseMatrix multiply(const DenseMatrix& m, const PauliSum& s);

/// Deterministic normalized state. Amplitudes are (g_re + i g_im) / norm with
/// g_re, g_im standard normals from Box-Muller on std::mt19937_64(seed),
/// each uniform taken as the top 53 bits of one engine output.
StateVector random_state(size_t dim, uint64_t seed);

struct TransitionRecord {
  double reference;    ///< |<beta|alpha>|^2 (|<alpha|beta>|^2 for antilinear, same modulus)
  double transformed;  ///< |<D beta|D alpha>|^2
  double deviation;    ///< transformed - reference
};

struct TransitionReport {
  std::vector<TransitionRecord> records;
  double max_abs_deviation = 0.0;
};

/// Compares transition probabilities before and after applying `d` to each
/// (alpha, beta). Throws std::invalid_argument on dimension mismatch.
TransitionReport transition_experiment(const DenseOperator& d,
                                       std::span<const std::pair<StateVector, StateVector>> pairs);

// Dump formats. Binary: 8-byte magic "WLDUMP" + kind ('L' linear, 'A' antilinear,
// 'S' state) + version byte, then dim as uint64 little endian, then column-major
// interleaved (re, im) little-endian doubles. Only square matrices are dumped.
// CSV: one line per row with re,im pairs (states: one "re,im" line per amplitude).
void write_binary(std::ostream& out, const DenseOperator& op);
void write_binary(std::ostream& out, const StateVector& state);
DenseOperator read_binary_operator(std::istream& in);
StateVector read_binary_state(std::istream& in);
void write_csv(std::ostream& out, const DenseMatrix& m);
void write_csv(std::ostream& out, const StateVector& state);
DenseMatrix read_csv_matrix(std::istream& in);
StateVector read_csv_state(std::istream& in);

}  // namespace wignerlab

#endif  // WIGNERLAB_DENSE_H
