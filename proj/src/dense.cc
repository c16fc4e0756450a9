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

#include "wignerlab/dense.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_cap(size_t sites, size_t cap, const char* what) {
  if (sites > cap) {
    throw DimensionCapExceeded(std::string(what) + ": " + std::to_string(sites) + " sites exceeds dense cap of " +
                                   std::to_string(cap),
                               sites, cap);
  }
}

void apply_one_site(const DenseMatrix& m, size_t site, std::span<Complex> psi) {
  const size_t bit = size_t{1} << site;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Complex a = psi[i], b = psi[i | bit];
    psi[i] = m00 * a + m01 * b;
    psi[i | bit] = m10 * a + m11 * b;
  }
}

void apply_two_site(const DenseMatrix& m, size_t first, size_t second, std::span<Complex> psi) {
  const size_t b0 = size_t{1} << first, b1 = size_t{1} << second;
  for (size_t i = 0; i < psi.size(); ++i) {
    if (i & (b0 | b1)) continue;
    const size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = psi[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += m(r, c) * in[c];
      psi[idx[r]] = acc;
    }
  }
}

void check_gate_sites(size_t s, size_t n) {
  if (s >= n) throw std::out_of_range("apply_gate: site index out of range");
}

void put_u64(std::ostream& out, uint64_t v) {
  unsigned char bytes[8];
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(v >> (8 * k));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

uint64_t get_u64(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw ParseError("binary dump: truncated");
  uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= uint64_t{bytes[k]} << (8 * k);
  return v;
}

void put_complex(std::ostream& out, Complex c) {
  put_u64(out, std::bit_cast<uint64_t>(c.real()));
  put_u64(out, std::bit_cast<uint64_t>(c.imag()));
}

Complex get_complex(std::istream& in) {
  const double re = std::bit_cast<double>(get_u64(in));
  const double im = std::bit_cast<double>(get_u64(in));
  return {re, im};
}

void write_header(std::ostream& out, char kind, uint64_t dim) {
  const char magic[8] = {'W', 'L', 'D', 'U', 'M', 'P', kind, 1};
  out.write(magic, 8);
  put_u64(out, dim);
}

std::pair<char, uint64_t> read_header(std::istream& in) {
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, "WLDUMP", 6) != 0 || magic[7] != 1) {
    throw ParseError("binary dump: bad magic");
  }
  return {magic[6], get_u64(in)};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_csv_line(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    size_t used = 0;
    try {
      out.push_back(std::stod(cell, &used));
    } catch (const std::exception&) {
      throw ParseError("csv: bad number '" + cell + "'");
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(size_t n) {
  DenseMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const size_t nr = rows.size();
  const size_t nc = nr ? rows.begin()->size() : 0;
  DenseMatrix m(nr, nc);
  size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
    size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (size_t c = 0; c < cols_; ++c) {
    for (size_t r = 0; r < rows_; ++r) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseMatrix DenseMatrix::conjugate() const {
  DenseMatrix out = *this;
  for (auto& v : out.data_) v = std::conj(v);
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("DenseMatrix +: shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("DenseMatrix -: shape mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix *: shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (size_t j = 0; j < b.cols_; ++j) {
    Complex* oc = out.data_.data() + j * out.rows_;
    for (size_t k = 0; k < a.cols_; ++k) {
      const Complex bkj = b(k, j);
      if (bkj == Complex{}) continue;
      const Complex* ac = a.data_.data() + k * a.rows_;
      for (size_t i = 0; i < a.rows_; ++i) oc[i] += ac[i] * bkj;
    }
  }
  return out;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

DenseMatrix DenseMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("DenseMatrix::block: out of range");
  DenseMatrix out(nr, nc);
  for (size_t c = 0; c < nc; ++c) {
    for (size_t r = 0; r < nr; ++r) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).frobenius_norm(); }

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_difference: shape mismatch");
  double m = 0.0;
  for (size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

bool commutes_within_tolerance(const DenseMatrix& a, const DenseMatrix& b, double scale) {
  return commutator(a, b).frobenius_norm() <
         kCommutatorRelativeTolerance * scale * a.frobenius_norm() * b.frobenius_norm();
}

bool is_hermitian(const DenseMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (size_t c = 0; c < m.cols(); ++c) {
    for (size_t r = 0; r <= c; ++r) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const DenseMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return frobenius_distance(m.adjoint() * m, DenseMatrix::identity(m.rows())) < tol;
}

// ---------------------------------------------------------------------------
// States and operators

StateVector StateVector::basis(size_t dim, size_t index) {
  if (index >= dim) throw std::out_of_range("StateVector::basis: index out of range");
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& v : amps_) s += std::norm(v);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("StateVector::normalized: zero vector");
  StateVector out = *this;
  for (auto& v : out.amps_) v /= n;
  return out;
}

StateVector StateVector::conjugate() const {
  StateVector out = *this;
  for (auto& v : out.amps_) v = std::conj(v);
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

StateVector operator*(const DenseMatrix& m, const StateVector& v) {
  if (m.cols() != v.dim()) throw std::invalid_argument("matrix * state: dimension mismatch");
  std::vector<Complex> out(m.rows());
  for (size_t c = 0; c < m.cols(); ++c) {
    const Complex vc = v[c];
    if (vc == Complex{}) continue;
    auto col = m.column(c);
    for (size_t r = 0; r < m.rows(); ++r) out[r] += col[r] * vc;
  }
  return StateVector(std::move(out));
}

StateVector DenseOperator::apply(const StateVector& psi) const {
  return antilinear ? matrix * psi.conjugate() : matrix * psi;
}

DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
  return {a.matrix * (a.antilinear ? b.matrix.conjugate() : b.matrix), a.antilinear != b.antilinear};
}

// ---------------------------------------------------------------------------
// Materialization

DenseMatrix controlled_x_matrix() {
  // local index = control + 2 target; flips target when control = 1.
  return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
}

DenseMatrix controlled_z_matrix() {
  return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}

DenseMatrix swap_matrix() {
  return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

DenseMatrix hadamard_matrix() {
  return DenseMatrix::from_rows({{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}});
}

void accumulate_pauli(const PauliString& p, Complex coefficient, std::span<const Complex> psi,
                      std::span<Complex> out) {
  const uint64_t x = p.x_mask().to_u64(), z = p.z_mask().to_u64();
  const Complex c = coefficient * i_pow(p.phase_exp());
  for (size_t b = 0; b < psi.size(); ++b) {
    const Complex v = psi[b];
    if (v == Complex{}) continue;
    const bool odd = std::popcount(z & b) & 1;
    out[b ^ x] += odd ? -c * v : c * v;
  }
}

void apply_gate(const CliffordGate& gate, std::span<Complex> psi) {
  const size_t n = static_cast<size_t>(std::countr_zero(psi.size()));
  if ((size_t{1} << n) != psi.size()) throw std::invalid_argument("apply_gate: state length is not a power of two");
  std::visit(Overloaded{
                 [&](const Hadamard& g) {
                   check_gate_sites(g.site, n);
                   apply_one_site(hadamard_matrix(), g.site, psi);
                 },
                 [&](const ControlledX& g) {
                   check_gate_sites(g.control, n);
                   check_gate_sites(g.target, n);
                   apply_two_site(controlled_x_matrix(), g.control, g.target, psi);
                 },
                 [&](const ControlledZ& g) {
                   check_gate_sites(g.a, n);
                   check_gate_sites(g.b, n);
                   apply_two_site(controlled_z_matrix(), g.a, g.b, psi);
                 },
                 [&](const Swap& g) {
                   check_gate_sites(g.a, n);
                   check_gate_sites(g.b, n);
                   apply_two_site(swap_matrix(), g.a, g.b, psi);
                 },
                 [&](const QuarterRotation& g) {
                   if (g.axis().num_sites() != n) throw LayoutMismatch("apply_gate: rotation axis width mismatch");
                   // exp(s i pi/4 A) = (1 + s i A) / sqrt 2 for A^2 = 1.
                   std::vector<Complex> rotated(psi.begin(), psi.end());
                   for (auto& v : rotated) v *= kInvSqrt2;
                   accumulate_pauli(g.axis(), Complex(0.0, g.sign() * kInvSqrt2), psi, rotated);
                   std::copy(rotated.begin(), rotated.end(), psi.begin());
                 },
             },
             gate);
}

DenseOperator materialize(const PauliString& p, const MaterializeLimits& limits) {
  check_cap(p.num_sites(), limits.max_sum_sites, "materialize(PauliString)");
  const size_t dim = p.layout()->dimension();
  DenseMatrix m(dim, dim);
  const uint64_t x = p.x_mask().to_u64(), z = p.z_mask().to_u64();
  const Complex c = i_pow(p.phase_exp());
  for (size_t b = 0; b < dim; ++b) m(b ^ x, b) = (std::popcount(z & b) & 1) ? -c : c;
  return {std::move(m), false};
}

DenseOperator materialize(const PauliSum& s, const MaterializeLimits& limits) {
  check_cap(s.layout()->total_sites(), limits.max_sum_sites, "materialize(PauliSum)");
  const size_t dim = s.layout()->dimension();
  DenseMatrix m(dim, dim);
  for (const auto& [p, c] : s.terms()) {
    const uint64_t x = p.x_mask().to_u64(), z = p.z_mask().to_u64();
    for (size_t b = 0; b < dim; ++b) {
      const bool odd = std::popcount(z & b) & 1;
      m(b ^ x, b) += odd ? -c : c;
    }
  }
  return {std::move(m), false};
}

DenseOperator materialize(const CliffordCircuit& c, const MaterializeLimits& limits) {
  check_cap(c.layout()->total_sites(), limits.max_circuit_sites, "materialize(CliffordCircuit)");
  const size_t dim = c.layout()->dimension();
  DenseMatrix m = DenseMatrix::identity(dim);
  const auto& gates = c.gates();
  for (size_t col = 0; col < dim; ++col) {
    auto psi = m.column(col);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_gate(*it, psi);
  }
  return {std::move(m), false};
}

DenseMatrix multiply(const PauliSum& s, const DenseMatrix& m) {
  if (s.layout()->dimension() != m.rows()) throw std::invalid_argument("multiply(PauliSum, matrix): shape mismatch");
  DenseMatrix out(m.rows(), m.cols());
  for (size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [p, coef] : s.terms()) accumulate_pauli(p, coef, m.column(c), out.column(c));
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& m, const PauliSum& s) {
  if (s.layout()->dimension() != m.cols()) throw std::invalid_argument("multiply(matrix, PauliSum): shape mismatch");
  DenseMatrix out(m.rows(), m.cols());
  for (const auto& [p, coef] : s.terms()) {
    const uint64_t x = p.x_mask().to_u64(), z = p.z_mask().to_u64();
    for (size_t b = 0; b < m.cols(); ++b) {
      // (M P)[:, b] = M[:, b ^ x] P(b ^ x, b)
      const Complex v = (std::popcount(z & b) & 1) ? -coef : coef;
      auto src = m.column(b ^ x);
      auto dst = out.column(b);
      for (size_t r = 0; r < m.rows(); ++r) dst[r] += src[r] * v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random states and transition experiments

StateVector random_state(size_t dim, uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_state: dim must be >= 1");
  std::mt19937_64 engine(seed);
  auto uniform = [&engine]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  auto normal_pair = [&]() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    return std::pair{r * std::cos(t), r * std::sin(t)};
  };
  std::vector<Complex> amps(dim);
  for (auto& a : amps) {
    auto [g1, g2] = normal_pair();
    a = {g1, g2};
  }
  return StateVector(std::move(amps)).normalized();
}

TransitionReport transition_experiment(const DenseOperator& d,
                                       std::span<const std::pair<StateVector, StateVector>> pairs) {
  TransitionReport report;
  report.records.reserve(pairs.size());
  for (const auto& [alpha, beta] : pairs) {
    if (alpha.dim() != d.dim() || beta.dim() != d.dim()) {
      throw std::invalid_argument("transition_experiment: state dimension does not match operator");
    }
    const StateVector da = d.apply(alpha), db = d.apply(beta);
    const double transformed = std::norm(inner(db, da));
    const double reference = d.antilinear ? std::norm(inner(alpha, beta)) : std::norm(inner(beta, alpha));
    report.records.push_back({reference, transformed, transformed - reference});
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(transformed - reference));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Dumps

void write_binary(std::ostream& out, const DenseOperator& op) {
  if (!op.matrix.is_square()) throw std::invalid_argument("write_binary: only square matrices are dumped");
  write_header(out, op.antilinear ? 'A' : 'L', op.dim());
  for (const auto& v : op.matrix.data()) put_complex(out, v);
}

void write_binary(std::ostream& out, const StateVector& state) {
  write_header(out, 'S', state.dim());
  for (const auto& v : state.amplitudes()) put_complex(out, v);
}

DenseOperator read_binary_operator(std::istream& in) {
  auto [kind, dim] = read_header(in);
  if (kind != 'L' && kind != 'A') throw ParseError("binary dump: not an operator");
  DenseOperator op{DenseMatrix(dim, dim), kind == 'A'};
  for (size_t c = 0; c < dim; ++c) {
    for (size_t r = 0; r < dim; ++r) op.matrix(r, c) = get_complex(in);
  }
  return op;
}

StateVector read_binary_state(std::istream& in) {
  auto [kind, dim] = read_header(in);
  if (kind != 'S') throw ParseError("binary dump: not a state");
  std::vector<Complex> amps(dim);
  for (auto& a : amps) a = get_complex(in);
  return StateVector(std::move(amps));
}

void write_csv(std::ostream& out, const DenseMatrix& m) {
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const StateVector& state) {
  for (const auto& a : state.amplitudes()) out << format_double(a.real()) << ',' << format_double(a.imag()) << '\n';
}

DenseMatrix read_csv_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(parse_csv_line(line));
    if (rows.back().size() % 2 != 0 || rows.back().size() != rows.front().size()) {
      throw ParseError("csv: ragged or odd row");
    }
  }
  const size_t nc = rows.empty() ? 0 : rows.front().size() / 2;
  DenseMatrix m(rows.size(), nc);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < nc; ++c) m(r, c) = {rows[r][2 * c], rows[r][2 * c + 1]};
  }
  return m;
}

StateVector read_csv_state(std::istream& in) {
  std::vector<Complex> amps;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto v = parse_csv_line(line);
    if (v.size() != 2) throw ParseError("csv: state lines need exactly re,im");
    amps.emplace_back(v[0], v[1]);
  }
  return StateVector(std::move(amps));
}

}  // namespace wignerlab
