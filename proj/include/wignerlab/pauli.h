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

#ifndef WIGNERLAB_PAULI_H
#define WIGNERLAB_PAULI_H

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wignerlab/bitmask.h"
#include "wignerlab/layout.h"

namespace wignerlab {

using Complex = std::complex<double>;

/// Drop threshold for coefficients produced by floating-point arithmetic.
inline constexpr double kCoefficientTolerance = 1e-12;

/// Exact value of i^k.
Complex i_pow(unsigned k);

/// The operator i^phase_exp * prod_sites X^x[s] Z^z[s].
///
/// Y is stored as x = z = 1 together with a phase: Y = i X Z. Products follow
/// from Z^a X^b = (-1)^{a.b} X^b Z^a, so every phase stays an exact power of i.
class PauliString {
 public:
  explicit PauliString(LayoutPtr layout);
  PauliString(LayoutPtr layout, BitMask x, BitMask z, unsigned phase_exp = 0);

  /// Single-site operator; `op` is one of 'I', 'X', 'Y', 'Z'.
  static PauliString single(LayoutPtr layout, size_t index, char op);

  /// Parses "(+1i^0) X1 Z3 | L=4, gauge=[]". The phase prefix is optional.
  static PauliString parse(std::string_view text);
  /// Parses the operator part only ("X1 Y3", optionally prefixed) over `layout`.
  static PauliString parse(std::string_view text, LayoutPtr layout);

  const LayoutPtr& layout() const { return layout_; }
  const BitMask& x_mask() const { return x_; }
  const BitMask& z_mask() const { return z_; }
  unsigned phase_exp() const { return phase_; }
  size_t num_sites() const { return x_.size(); }

  bool is_identity() const { return x_.none() && z_.none(); }
  bool is_hermitian() const;
  /// Number of sites acted on non-trivially.
  size_t weight() const;
  /// Sites acted on non-trivially, increasing.
  std::vector<size_t> support() const;
  /// 'I', 'X', 'Y' or 'Z' at a site (ignoring phase).
  char op_at(size_t index) const;

  /// Phase-free copy.
  PauliString canonical() const;
  PauliString with_phase(unsigned phase_exp) const;

  void set_x(size_t index, bool v) { x_.set(index, v); }
  void set_z(size_t index, bool v) { z_.set(index, v); }
  void add_phase(unsigned k) { phase_ = (phase_ + k) & 3u; }

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }

  /// Operator part, e.g. "(-1i^1) Y1 X2".
  std::string body() const;
  /// Full text including the layout.
  std::string to_string() const;

  /// Same layout, masks and phase.
  friend bool operator==(const PauliString& a, const PauliString& b);
  /// Orders by masks only; used to key PauliSum terms.
  friend bool mask_less(const PauliString& a, const PauliString& b);

 private:
  LayoutPtr layout_;
  BitMask x_;
  BitMask z_;
  unsigned phase_ = 0;
};

/// Group product p*q with exact phase. Throws LayoutMismatch.
PauliString mul(const PauliString& p, const PauliString& q);
/// True iff pq = qp, i.e. the symplectic form vanishes mod 2.
bool commutes(const PauliString& p, const PauliString& q);

/// Matter Pauli on site j (1-based).
PauliString sigma_x(const LayoutPtr& layout, size_t site);
PauliString sigma_y(const LayoutPtr& layout, size_t site);
PauliString sigma_z(const LayoutPtr& layout, size_t site);
/// Pauli on a site addressed by label, e.g. "4" (ancilla) or "3/2" (link).
PauliString pauli_at(const LayoutPtr& layout, std::string_view label, char op);

struct MaskLess {
  bool operator()(const PauliString& a, const PauliString& b) const { return mask_less(a, b); }
};

/// Complex linear combination of phase-free Pauli strings.
///
/// Keys always carry phase 0; a string's phase is folded into its coefficient
/// on insertion. Terms whose coefficient becomes exactly zero are erased, so
/// a - a is the empty sum without any tolerance. `chopped` applies the
/// floating tolerance explicitly.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex, MaskLess>;

  explicit PauliSum(LayoutPtr layout);
  PauliSum(const PauliString& p, Complex coefficient = 1.0);

  static PauliSum identity(LayoutPtr layout, Complex coefficient = 1.0);
  static PauliSum parse(std::string_view text);

  const LayoutPtr& layout() const { return layout_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const PauliString& p, Complex coefficient);
  /// Coefficient of the operator `p` (phase included), zero when absent.
  Complex coefficient_of(const PauliString& p) const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(Complex scale);
  PauliSum& operator*=(const PauliSum& rhs);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;
  /// Copy without terms of modulus <= tol.
  PauliSum chopped(double tol = kCoefficientTolerance) const;
  /// Largest coefficient modulus, 0 for the empty sum.
  double max_abs_coefficient() const;

  /// "(-1+0i) Z1 Z2 + (-1+0i) X1 | L=2, gauge=[]"; "0 | ..." when empty.
  std::string to_string() const;

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  LayoutPtr layout_;
  TermMap terms_;
};

/// ab - ba in canonical form; empty iff the sums commute exactly.
PauliSum sum_commutator(const PauliSum& a, const PauliSum& b);

/// prod_{j=1}^{L} X_j over the matter sites; identity on gauge slots.
PauliString eta_string(const LayoutPtr& layout);

/// Which Z2 generator a symmetry projector is built from.
enum class ProjectorKind {
  kEta,      // (1 +- eta) / 2 on the matter sites
  kAncilla,  // (1 +- Z_{L+1}) / 2 on the ancilla slot
};

/// (1 + sign * s) / 2 with s = eta or the ancilla Z. Throws
/// std::invalid_argument for |sign| != 1 or a missing ancilla slot.
PauliSum symmetry_projector(int sign, const LayoutPtr& layout, ProjectorKind kind = ProjectorKind::kEta);

}  // namespace wignerlab

#endif  // WIGNERLAB_PAULI_H
