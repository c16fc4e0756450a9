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

#include "wignerlab/hamiltonians.h"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wignerlab {

namespace {

constexpr std::array<std::pair<ModelFamily, std::string_view>, 6> kModelNames = {{
    {ModelFamily::kOpenH1, "h1"},
    {ModelFamily::kSelfDualClosedH2, "h2"},
    {ModelFamily::kPeriodicHPlus, "h-periodic"},
    {ModelFamily::kAntiperiodicHMinus, "h-antiperiodic"},
    {ModelFamily::kMinimalGaugedHG, "h-min-gauged"},
    {ModelFamily::kFullyGaugedHG, "h-full-gauged"},
}};

void add_open_chain(PauliSum& h, const LayoutPtr& layout, size_t L) {
  for (size_t j = 1; j < L; ++j) h.add_term(sigma_z(layout, j) * sigma_z(layout, j + 1), -1.0);
  for (size_t j = 1; j < L; ++j) h.add_term(sigma_x(layout, j), -1.0);
}

PauliString link_x(const LayoutPtr& layout, size_t j) { return PauliString::single(layout, layout->link_index(j), 'X'); }
PauliString link_z(const LayoutPtr& layout, size_t j) { return PauliString::single(layout, layout->link_index(j), 'Z'); }

void require_links(const LayoutPtr& layout, const char* what) {
  if (!layout->has_links()) {
    throw std::invalid_argument(std::string(what) + ": expected the link layout, got " + layout->describe());
  }
}

}  // namespace

std::string_view model_name(ModelFamily family) {
  for (const auto& [f, name] : kModelNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<ModelFamily> parse_model_name(std::string_view name) {
  for (const auto& [f, n] : kModelNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

LayoutPtr layout_for(const ModelSpec& spec) {
  switch (spec.family) {
    case ModelFamily::kMinimalGaugedHG: return HilbertLayout::with_ancilla(spec.L);
    case ModelFamily::kFullyGaugedHG: return HilbertLayout::with_links(spec.L);
    default: return HilbertLayout::matter_only(spec.L);
  }
}

PauliSum build_hamiltonian(const ModelSpec& spec) {
  const size_t L = spec.L;
  if (L < 2) throw std::invalid_argument("build_hamiltonian: L must be >= 2");
  const LayoutPtr layout = layout_for(spec);
  PauliSum h(layout);
  const PauliString boundary_zz = sigma_z(layout, L) * sigma_z(layout, 1);

  switch (spec.family) {
    case ModelFamily::kOpenH1:
      add_open_chain(h, layout, L);
      break;
    case ModelFamily::kSelfDualClosedH2:
      add_open_chain(h, layout, L);
      h.add_term(sigma_x(layout, L), -1.0);
      h.add_term(eta_string(layout) * boundary_zz, -1.0);
      break;
    case ModelFamily::kPeriodicHPlus:
    case ModelFamily::kAntiperiodicHMinus:
      add_open_chain(h, layout, L);
      h.add_term(sigma_x(layout, L), -1.0);
      h.add_term(boundary_zz, spec.family == ModelFamily::kPeriodicHPlus ? -1.0 : 1.0);
      break;
    case ModelFamily::kMinimalGaugedHG: {
      add_open_chain(h, layout, L);
      h.add_term(sigma_x(layout, L), -1.0);
      const PauliString anc_z = PauliString::single(layout, *layout->ancilla_index(), 'Z');
      h.add_term(sigma_z(layout, L) * anc_z * sigma_z(layout, 1), -1.0);
      break;
    }
    case ModelFamily::kFullyGaugedHG:
      for (size_t j = 1; j < L; ++j) {
        h.add_term(sigma_z(layout, j) * link_x(layout, j) * sigma_z(layout, j + 1), -1.0);
        h.add_term(sigma_x(layout, j), -1.0);
      }
      h.add_term(sigma_x(layout, L), -1.0);
      h.add_term(sigma_z(layout, L) * link_x(layout, 0) * sigma_z(layout, 1), -1.0);
      break;
  }
  return h;
}

std::vector<PauliSum> gauss_law_operators(const LayoutPtr& layout) {
  require_links(layout, "gauss_law_operators");
  std::vector<PauliSum> out;
  for (size_t j = 1; j <= layout->n_matter(); ++j) {
    out.emplace_back(link_z(layout, j - 1) * sigma_x(layout, j) * link_z(layout, j));
  }
  return out;
}

DualityMap dual_variable_map(const LayoutPtr& layout) {
  require_links(layout, "dual_variable_map");
  DualityMap m{"dual_variables", {}};
  PauliString tail(layout);
  for (size_t j = 1; j <= layout->n_matter(); ++j) {
    if (j > 1) tail *= link_x(layout, j - 1);
    m.entries.emplace_back(sigma_z(layout, j), tail * sigma_z(layout, j));
    m.entries.emplace_back(sigma_x(layout, j), sigma_x(layout, j));
  }
  return m;
}

PauliString substitute(const DualityMap& map, const PauliString& p) {
  const LayoutPtr& layout = p.layout();
  const size_t n = p.num_sites();
  std::vector<std::optional<PauliString>> img_x(n), img_z(n);
  for (const auto& [gen, img] : map.entries) {
    require_same_layout(gen.layout(), layout, "substitute");
    if (gen.weight() != 1 || gen.phase_exp() != 0 || gen.x_mask().popcount() + gen.z_mask().popcount() != 1) {
      throw std::invalid_argument("substitute: table generators must be single-site X or Z, got " + gen.body());
    }
    const size_t s = gen.support().front();
    (gen.x_mask().test(s) ? img_x : img_z)[s] = img;
  }
  PauliString out(layout);
  out.add_phase(p.phase_exp());
  for (size_t s = 0; s < n; ++s) {
    if (p.x_mask().test(s)) out *= img_x[s] ? *img_x[s] : PauliString::single(layout, s, 'X');
    if (p.z_mask().test(s)) out *= img_z[s] ? *img_z[s] : PauliString::single(layout, s, 'Z');
  }
  return out;
}

PauliSum substitute(const DualityMap& map, const PauliSum& s) {
  PauliSum out(s.layout());
  for (const auto& [p, c] : s.terms()) out.add_term(substitute(map, p), c);
  return out;
}

PauliSum collapse_links_to_ancilla(const PauliSum& s, const LayoutPtr& ancilla_layout) {
  const LayoutPtr& from = s.layout();
  require_links(from, "collapse_links_to_ancilla");
  const auto anc = ancilla_layout->ancilla_index();
  if (!anc || ancilla_layout->n_matter() != from->n_matter()) {
    throw std::invalid_argument("collapse_links_to_ancilla: target must be the matching ancilla layout");
  }
  const size_t L = from->n_matter();
  PauliSum out(ancilla_layout);
  for (const auto& [p, c] : s.terms()) {
    size_t links_x = 0;
    for (size_t j = 1; j <= L; ++j) {
      const size_t idx = from->link_index(j);
      if (p.z_mask().test(idx)) throw std::invalid_argument("collapse_links_to_ancilla: term carries a link Z: " + p.body());
      links_x += p.x_mask().test(idx);
    }
    if (links_x != 0 && links_x != L) {
      throw std::invalid_argument("collapse_links_to_ancilla: partial link string in " + p.body());
    }
    PauliString q(ancilla_layout);
    for (size_t k = 0; k < L; ++k) {
      q.set_x(k, p.x_mask().test(k));
      q.set_z(k, p.z_mask().test(k));
    }
    q.set_z(*anc, links_x == L);
    out.add_term(q, c);
  }
  return out;
}

ProjectedCommutationReport projected_commutation_check(size_t L, int projector_sign, int hamiltonian_sign,
                                                       size_t dense_max_sites) {
  if (std::abs(projector_sign) != 1 || std::abs(hamiltonian_sign) != 1) {
    throw std::invalid_argument("projected_commutation_check: signs must be +1 or -1");
  }
  ProjectedCommutationReport report;
  report.L = L;
  report.projector_sign = projector_sign;
  report.hamiltonian_sign = hamiltonian_sign;

  const PauliSum h = build_hamiltonian(
      {hamiltonian_sign > 0 ? ModelFamily::kPeriodicHPlus : ModelFamily::kAntiperiodicHMinus, L});
  const CliffordCircuit u2 = build_u2(L);
  const PauliSum p = symmetry_projector(projector_sign, h.layout());

  const PauliSum residual = conjugate_circuit(u2, h) * p - h * p;
  report.symbolic_residual_terms = residual.chopped().size();
  report.symbolic_pass = report.symbolic_residual_terms == 0;

  if (L <= dense_max_sites) {
    report.dense_ran = true;
    const DenseMatrix hd = materialize(h).matrix;
    const DenseMatrix d = multiply(materialize(u2).matrix, p);
    report.dense_norm = commutator(hd, d).frobenius_norm();
    report.dense_threshold = kCommutatorRelativeTolerance * hd.frobenius_norm() * d.frobenius_norm();
    report.dense_pass = report.dense_norm < report.dense_threshold;
  }
  return report;
}

}  // namespace wignerlab
