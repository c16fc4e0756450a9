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

#ifndef WIGNERLAB_CLIFFORD_H
#define WIGNERLAB_CLIFFORD_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wignerlab/pauli.h"

namespace wignerlab {

// Gate site fields are layout indices (0-based). The text format uses labels.

/// exp(i pi/4 (Z_c X_t - Z_c - X_t + 1)): flips `target` when `control` is |1>.
struct ControlledX {
  size_t control;
  size_t target;
};

/// exp(-i pi/4 (Z_a Z_b - Z_a - Z_b + 1)): symmetric in its two sites.
struct ControlledZ {
  size_t a;
  size_t b;
};

/// (1 + sigma_a . sigma_b) / 2.
struct Swap {
  size_t a;
  size_t b;
};

/// i exp(-i pi/(2 sqrt 2) (Z + X)) = (X + Z)/sqrt 2.
struct Hadamard {
  size_t site;
};

/// exp(sign * i pi/4 * axis) for a Hermitian Pauli string `axis`.
///
/// `sign` is the sign of the exponent: the factors exp(-i pi/4 A) of the
/// self-duality circuits are QuarterRotation{A, -1}, printed "ROT - ...".
class QuarterRotation {
 public:
  QuarterRotation(PauliString axis, int sign);
  const PauliString& axis() const { return axis_; }
  int sign() const { return sign_; }
  /// Sites where the axis acts; conjugation only touches these.
  const std::vector<size_t>& support() const { return support_; }

 private:
  PauliString axis_;
  int sign_;
  std::vector<size_t> support_;
};

using CliffordGate = std::variant<ControlledX, ControlledZ, Swap, Hadamard, QuarterRotation>;

/// g p g^dagger, exactly phase-tracked. Throws LayoutMismatch for rotations
/// over another layout and std::out_of_range for bad site indices.
PauliString conjugate_gate(const CliffordGate& gate, const PauliString& p);
void conjugate_gate_in_place(const CliffordGate& gate, PauliString& p);

/// Ordered product of gates, stored left to right as the operator product
/// U = g_0 g_1 ... g_{n-1} is written. Conjugation U p U^dagger therefore
/// applies the last gate to p first.
class CliffordCircuit {
 public:
  explicit CliffordCircuit(LayoutPtr layout, std::vector<CliffordGate> gates = {});

  const LayoutPtr& layout() const { return layout_; }
  const std::vector<CliffordGate>& gates() const { return gates_; }
  void append(CliffordGate gate);

  PauliString conjugate(const PauliString& p) const;

  /// One gate per line: "CX 2 1", "CZ 4 3", "SWAP 1 4", "H 2", "ROT - Z1 Z2".
  std::string to_text() const;
  static CliffordCircuit parse(std::string_view text, LayoutPtr layout);

 private:
  LayoutPtr layout_;
  std::vector<CliffordGate> gates_;
};

PauliString conjugate_circuit(const CliffordCircuit& c, const PauliString& p);
/// Term-wise conjugation of a sum.
PauliSum conjugate_circuit(const CliffordCircuit& c, const PauliSum& s);

/// Line format of a single gate.
std::string gate_to_text(const CliffordGate& gate, const HilbertLayout& layout);

/// Table of generator -> claimed image under conjugation.
struct DualityMap {
  std::string name;
  std::vector<std::pair<PauliString, PauliString>> entries;

  /// Two columns separated by " -> ", one entry per line, operator bodies only.
  std::string to_text() const;
  static DualityMap parse(std::string_view text, LayoutPtr layout, std::string name = {});
};

struct AutomorphismEntry {
  PauliString generator;
  PauliString expected;
  PauliString actual;
  bool pass;
};

struct AutomorphismReport {
  std::string map_name;
  std::vector<AutomorphismEntry> entries;
  bool all_pass = true;
  size_t num_failures() const;
};

/// Conjugates every generator of `m` through `c` and compares with the
/// tabulated image, phase included.
AutomorphismReport verify_automorphism(const CliffordCircuit& c, const DualityMap& m);

/// Open-chain self-duality circuit:
/// (prod_{j<=L/2} S_{j,L-j+1}) (prod_{j<L} CX_{j+1,j}) H^{(x)L}. Requires L >= 2.
CliffordCircuit build_u1(size_t L);
/// Closed-chain circuit e^{-i pi/4 X_1} e^{-i pi/4 Z_1 Z_2} ... e^{-i pi/4 X_L}. Requires L >= 2.
CliffordCircuit build_u2(size_t L);
/// Minimally gauged circuit CX_{1,L+1} (prod_{j=1}^{L} H_j CZ_{j+1,j}) H_{L+1} on
/// the ancilla layout. For j = L the controlled-Z couples site L to the
/// ancilla L+1 itself; no wrap to site 1.
CliffordCircuit build_u_gauged(size_t L);

/// Phi_1: X_j -> Z_r Z_{r+1}, Z_j Z_{j+1} -> X_r (r = L-j), eta -> Z_L.
DualityMap phi1_table(size_t L);
/// Phi_2: X_j -> Z_j Z_{j+1}, Z_j Z_{j+1} -> X_{j+1}, X_L -> eta Z_L Z_1,
/// eta Z_L Z_1 -> X_1, eta -> eta.
DualityMap phi2_table(size_t L);
/// Phi_G: as Phi_2 in the bulk, Z_L Z_{L+1} Z_1 -> X_1, X_L -> Z_L Z_{L+1} Z_1.
DualityMap phi_gauged_table(size_t L);

}  // namespace wignerlab

#endif  // WIGNERLAB_CLIFFORD_H
