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

#include "wignerlab/clifford.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_site(size_t s, const PauliString& p) {
  if (s >= p.num_sites()) throw std::out_of_range("Clifford gate site index out of range for " + p.layout()->describe());
}

void swap_bits(PauliString& p, size_t a, size_t b) {
  const bool xa = p.x_mask().test(a), xb = p.x_mask().test(b);
  const bool za = p.z_mask().test(a), zb = p.z_mask().test(b);
  p.set_x(a, xb);
  p.set_x(b, xa);
  p.set_z(a, zb);
  p.set_z(b, za);
}

}  // namespace

QuarterRotation::QuarterRotation(PauliString axis, int sign) : axis_(std::move(axis)), sign_(sign) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("QuarterRotation: sign must be +1 or -1");
  if (axis_.is_identity()) throw std::invalid_argument("QuarterRotation: identity axis");
  if (!axis_.is_hermitian()) throw std::invalid_argument("QuarterRotation: axis must be Hermitian");
  support_ = axis_.support();
}

void conjugate_gate_in_place(const CliffordGate& gate, PauliString& p) {
  std::visit(
      Overloaded{
          [&](const Hadamard& g) {
            check_site(g.site, p);
            const bool x = p.x_mask().test(g.site), z = p.z_mask().test(g.site);
            p.set_x(g.site, z);
            p.set_z(g.site, x);
            if (x && z) p.add_phase(2);  // H (XZ) H = ZX = -XZ
          },
          [&](const ControlledX& g) {
            check_site(g.control, p);
            check_site(g.target, p);
            if (g.control == g.target) throw std::invalid_argument("ControlledX: control equals target");
            // X_c -> X_c X_t, Z_t -> Z_c Z_t; reordering into X^x Z^z form costs no phase.
            if (p.x_mask().test(g.control)) p.set_x(g.target, !p.x_mask().test(g.target));
            if (p.z_mask().test(g.target)) p.set_z(g.control, !p.z_mask().test(g.control));
          },
          [&](const ControlledZ& g) {
            check_site(g.a, p);
            check_site(g.b, p);
            if (g.a == g.b) throw std::invalid_argument("ControlledZ: repeated site");
            // X_a -> X_a Z_b, X_b -> Z_a X_b; Z_b^{xa} X_b^{xb} = (-1)^{xa xb} X_b^{xb} Z_b^{xa}.
            const bool xa = p.x_mask().test(g.a), xb = p.x_mask().test(g.b);
            if (xa && xb) p.add_phase(2);
            if (xa) p.set_z(g.b, !p.z_mask().test(g.b));
            if (xb) p.set_z(g.a, !p.z_mask().test(g.a));
          },
          [&](const Swap& g) {
            check_site(g.a, p);
            check_site(g.b, p);
            swap_bits(p, g.a, g.b);
          },
          [&](const QuarterRotation& g) {
            const PauliString& a = g.axis();
            require_same_layout(a.layout(), p.layout(), "QuarterRotation conjugation");
            size_t form = 0, swaps = 0;
            for (size_t s : g.support()) {
              const bool px = p.x_mask().test(s), pz = p.z_mask().test(s);
              const bool ax = a.x_mask().test(s), az = a.z_mask().test(s);
              form += (px && az) + (pz && ax);
              swaps += (pz && ax);
            }
            if ((form & 1u) == 0) return;
            // e^{s i pi/4 A} P e^{-s i pi/4 A} = P e^{-s i pi/2 A} = -s i P A for {A, P} = 0.
            p.add_phase(static_cast<unsigned>(a.phase_exp() + 2 * (swaps & 1u)));
            for (size_t s : g.support()) {
              if (a.x_mask().test(s)) p.set_x(s, !p.x_mask().test(s));
              if (a.z_mask().test(s)) p.set_z(s, !p.z_mask().test(s));
            }
            p.add_phase(g.sign() > 0 ? 3u : 1u);
          },
      },
      gate);
}

PauliString conjugate_gate(const CliffordGate& gate, const PauliString& p) {
  PauliString out = p;
  conjugate_gate_in_place(gate, out);
  return out;
}

CliffordCircuit::CliffordCircuit(LayoutPtr layout, std::vector<CliffordGate> gates)
    : layout_(std::move(layout)), gates_(std::move(gates)) {}

void CliffordCircuit::append(CliffordGate gate) { gates_.push_back(std::move(gate)); }

PauliString CliffordCircuit::conjugate(const PauliString& p) const {
  require_same_layout(layout_, p.layout(), "conjugate_circuit");
  PauliString out = p;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) conjugate_gate_in_place(*it, out);
  return out;
}

PauliString conjugate_circuit(const CliffordCircuit& c, const PauliString& p) { return c.conjugate(p); }

PauliSum conjugate_circuit(const CliffordCircuit& c, const PauliSum& s) {
  require_same_layout(c.layout(), s.layout(), "conjugate_circuit");
  PauliSum out(s.layout());
  for (const auto& [p, coef] : s.terms()) out.add_term(c.conjugate(p), coef);
  return out;
}

std::string gate_to_text(const CliffordGate& gate, const HilbertLayout& layout) {
  return std::visit(
      Overloaded{
          [&](const ControlledX& g) { return "CX " + layout.label_of(g.control) + " " + layout.label_of(g.target); },
          [&](const ControlledZ& g) { return "CZ " + layout.label_of(g.a) + " " + layout.label_of(g.b); },
          [&](const Swap& g) { return "SWAP " + layout.label_of(g.a) + " " + layout.label_of(g.b); },
          [&](const Hadamard& g) { return "H " + layout.label_of(g.site); },
          [&](const QuarterRotation& g) {
            // The axis is Hermitian, so its printed prefix is +-1; fold a -1 into the letters' sign slot.
            std::string body = g.axis().body();
            const bool negative = body[1] == '-';
            const std::string letters = body.substr(body.find(')') + 2);
            return std::string("ROT ") + (g.sign() > 0 ? "+" : "-") + (negative ? " -" : " ") + letters;
          },
      },
      gate);
}

std::string CliffordCircuit::to_text() const {
  std::string out;
  for (const auto& g : gates_) out += gate_to_text(g, *layout_) + "\n";
  return out;
}

CliffordCircuit CliffordCircuit::parse(std::string_view text, LayoutPtr layout) {
  CliffordCircuit circuit(layout);
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  auto site = [&](const std::string& label) {
    try {
      return layout->index_of(label);
    } catch (const std::out_of_range& e) {
      throw ParseError("circuit line " + std::to_string(line_no) + ": " + e.what());
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op.front() == '#') continue;
    auto bad = [&]() { return ParseError("circuit line " + std::to_string(line_no) + ": cannot parse '" + line + "'"); };
    std::string a, b;
    if (op == "CX" || op == "CZ" || op == "SWAP") {
      if (!(ls >> a >> b)) throw bad();
      std::string extra;
      if (ls >> extra) throw bad();
      const size_t ia = site(a), ib = site(b);
      if (ia == ib) throw bad();
      if (op == "CX") circuit.append(ControlledX{ia, ib});
      if (op == "CZ") circuit.append(ControlledZ{ia, ib});
      if (op == "SWAP") circuit.append(Swap{ia, ib});
    } else if (op == "H") {
      if (!(ls >> a)) throw bad();
      std::string extra;
      if (ls >> extra) throw bad();
      circuit.append(Hadamard{site(a)});
    } else if (op == "ROT") {
      std::string sign;
      if (!(ls >> sign) || (sign != "+" && sign != "-")) throw bad();
      std::string rest;
      std::getline(ls, rest);
      std::istringstream rs(rest);
      std::string first;
      if (!(rs >> first)) throw bad();
      bool negate = false;
      if (first == "-") {
        negate = true;
        std::getline(rs, rest);
      }
      PauliString axis = PauliString::parse(rest, layout);
      if (negate) axis.add_phase(2);
      try {
        circuit.append(QuarterRotation(std::move(axis), sign == "+" ? 1 : -1));
      } catch (const std::invalid_argument& e) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": " + e.what());
      }
    } else {
      throw bad();
    }
  }
  return circuit;
}

std::string DualityMap::to_text() const {
  std::string out;
  for (const auto& [g, img] : entries) out += g.body() + " -> " + img.body() + "\n";
  return out;
}

DualityMap DualityMap::parse(std::string_view text, LayoutPtr layout, std::string name) {
  DualityMap m{std::move(name), {}};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("duality map: missing '->' in '" + line + "'");
    m.entries.emplace_back(PauliString::parse(line.substr(0, arrow), layout),
                           PauliString::parse(line.substr(arrow + 2), layout));
  }
  return m;
}

size_t AutomorphismReport::num_failures() const {
  size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 0 : 1;
  return n;
}

AutomorphismReport verify_automorphism(const CliffordCircuit& c, const DualityMap& m) {
  AutomorphismReport report{m.name, {}, true};
  report.entries.reserve(m.entries.size());
  for (const auto& [gen, expected] : m.entries) {
    PauliString actual = c.conjugate(gen);
    const bool pass = actual == expected;
    report.all_pass = report.all_pass && pass;
    report.entries.push_back({gen, expected, std::move(actual), pass});
  }
  return report;
}

CliffordCircuit build_u1(size_t L) {
  if (L < 2) throw std::invalid_argument("build_u1: L must be >= 2");
  CliffordCircuit c(HilbertLayout::matter_only(L));
  for (size_t j = 1; j <= L / 2; ++j) c.append(Swap{j - 1, L - j});
  for (size_t j = 1; j <= L - 1; ++j) c.append(ControlledX{j, j - 1});
  for (size_t j = 0; j < L; ++j) c.append(Hadamard{j});
  return c;
}

CliffordCircuit build_u2(size_t L) {
  if (L < 2) throw std::invalid_argument("build_u2: L must be >= 2");
  auto layout = HilbertLayout::matter_only(L);
  CliffordCircuit c(layout);
  for (size_t j = 1; j <= L - 1; ++j) {
    c.append(QuarterRotation(sigma_x(layout, j), -1));
    c.append(QuarterRotation(sigma_z(layout, j) * sigma_z(layout, j + 1), -1));
  }
  c.append(QuarterRotation(sigma_x(layout, L), -1));
  return c;
}

CliffordCircuit build_u_gauged(size_t L) {
  if (L < 2) throw std::invalid_argument("build_u_gauged: L must be >= 2");
  auto layout = HilbertLayout::with_ancilla(L);
  const size_t anc = *layout->ancilla_index();
  CliffordCircuit c(layout);
  c.append(ControlledX{0, anc});
  for (size_t j = 1; j <= L; ++j) {
    c.append(Hadamard{j - 1});
    c.append(ControlledZ{j, j - 1});  // index j is site j+1, which is the ancilla when j = L
  }
  c.append(Hadamard{anc});
  return c;
}

namespace {

PauliString zz(const LayoutPtr& layout, size_t i, size_t j) { return sigma_z(layout, i) * sigma_z(layout, j); }

}  // namespace

DualityMap phi1_table(size_t L) {
  if (L < 2) throw std::invalid_argument("phi1_table: L must be >= 2");
  auto layout = HilbertLayout::matter_only(L);
  DualityMap m{"phi1", {}};
  for (size_t j = 1; j <= L - 1; ++j) {
    const size_t r = L - j;
    m.entries.emplace_back(sigma_x(layout, j), zz(layout, r, r + 1));
    m.entries.emplace_back(zz(layout, j, j + 1), sigma_x(layout, r));
  }
  m.entries.emplace_back(eta_string(layout), sigma_z(layout, L));
  return m;
}

DualityMap phi2_table(size_t L) {
  if (L < 2) throw std::invalid_argument("phi2_table: L must be >= 2");
  auto layout = HilbertLayout::matter_only(L);
  DualityMap m{"phi2", {}};
  for (size_t j = 1; j <= L - 1; ++j) {
    m.entries.emplace_back(sigma_x(layout, j), zz(layout, j, j + 1));
    m.entries.emplace_back(zz(layout, j, j + 1), sigma_x(layout, j + 1));
  }
  const PauliString eta = eta_string(layout);
  const PauliString boundary = eta * sigma_z(layout, L) * sigma_z(layout, 1);
  m.entries.emplace_back(sigma_x(layout, L), boundary);
  m.entries.emplace_back(boundary, sigma_x(layout, 1));
  m.entries.emplace_back(eta, eta);
  return m;
}

DualityMap phi_gauged_table(size_t L) {
  if (L < 2) throw std::invalid_argument("phi_gauged_table: L must be >= 2");
  auto layout = HilbertLayout::with_ancilla(L);
  DualityMap m{"phi_gauged", {}};
  for (size_t j = 1; j <= L - 1; ++j) {
    m.entries.emplace_back(zz(layout, j, j + 1), sigma_x(layout, j + 1));
    m.entries.emplace_back(sigma_x(layout, j), zz(layout, j, j + 1));
  }
  const PauliString boundary =
      sigma_z(layout, L) * PauliString::single(layout, *layout->ancilla_index(), 'Z') * sigma_z(layout, 1);
  m.entries.emplace_back(boundary, sigma_x(layout, 1));
  m.entries.emplace_back(sigma_x(layout, L), boundary);
  return m;
}

}  // namespace wignerlab
