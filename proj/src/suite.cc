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

#include "wignerlab/suite.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "wignerlab/clifford.h"
#include "wignerlab/dense.h"
#include "wignerlab/eigensolver.h"
#include "wignerlab/errors.h"
#include "wignerlab/gauge_models.h"
#include "wignerlab/hamiltonians.h"
#include "wignerlab/polar.h"

namespace wignerlab {

using nlohmann::json;

namespace {

const std::map<std::string, Fault> kFaultNames = {
    {"none", Fault::kNone},
    {"flip-boundary-sign", Fault::kFlipBoundarySign},
    {"nontrivial-projector", Fault::kNontrivialProjector},
};

const std::vector<std::string> kCommands = {"verify-automorphism", "commutators", "transition-check", "polar",
                                            "spectrum", "gauge-equivalence", "full-suite"};

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string sign_tag(int s) { return s > 0 ? "plus" : "minus"; }

MaterializeLimits limits_of(const RunConfig& c) { return {c.dense_cap, c.dense_cap}; }

bool fits(const RunConfig& c, size_t sites) { return sites <= c.dense_cap; }

std::string cap_note(const RunConfig& c, size_t sites) {
  return "dense cap: needs " + std::to_string(sites) + " sites, cap " + std::to_string(c.dense_cap);
}

// H^sign, honoring the boundary fault on H^+.
PauliSum h_pm(const RunConfig& c, int sign) {
  const bool flip = c.fault == Fault::kFlipBoundarySign && sign > 0;
  const int s = flip ? -1 : sign;
  return build_hamiltonian({s > 0 ? ModelFamily::kPeriodicHPlus : ModelFamily::kAntiperiodicHMinus, c.L});
}

int h_pm_sign(const RunConfig& c, int sign) { return c.fault == Fault::kFlipBoundarySign && sign > 0 ? -1 : sign; }

DenseOperator d_hat(const RunConfig& c, int sign, bool antilinear) {
  if (c.fault == Fault::kNontrivialProjector) {
    const LayoutPtr anc = HilbertLayout::with_ancilla(c.L);
    return build_d_hat_with_projector(c.L, symmetry_projector(1, anc), antilinear, limits_of(c));
  }
  return build_d_hat(c.L, sign, antilinear, limits_of(c));
}

uint64_t pair_seed(const RunConfig& c, size_t k) { return c.seed * 0x9E3779B97F4A7C15ULL + k; }

std::vector<std::pair<StateVector, StateVector>> random_pairs(const RunConfig& c, size_t dim,
                                                              const SectorEmbedding* e = nullptr) {
  std::vector<std::pair<StateVector, StateVector>> out;
  for (size_t k = 0; k < c.pairs; ++k) {
    StateVector a = random_state(dim, pair_seed(c, 2 * k));
    StateVector b = random_state(dim, pair_seed(c, 2 * k + 1));
    if (e) {
      a = e->embed(a);
      b = e->embed(b);
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

void commutator_record(Report& r, const RunConfig& c, std::string name, const DenseMatrix& a,
                       const DenseMatrix& b) {
  const double norm = commutator(a, b).frobenius_norm();
  r.less(std::move(name), norm, kCommutatorRelativeTolerance * a.frobenius_norm() * b.frobenius_norm() * c.tol_scale);
}

size_t residual_terms(const PauliSum& s) { return s.chopped().size(); }

// ---- symbolic pieces, any L ----

void add_automorphism(Report& r, const RunConfig& c, const std::string& circuit) {
  CliffordCircuit u = circuit == "u1" ? build_u1(c.L) : circuit == "u2" ? build_u2(c.L) : build_u_gauged(c.L);
  DualityMap m = circuit == "u1" ? phi1_table(c.L) : circuit == "u2" ? phi2_table(c.L) : phi_gauged_table(c.L);
  const AutomorphismReport rep = verify_automorphism(u, m);
  json failures = json::array();
  for (const auto& e : rep.entries) {
    if (!e.pass) {
      failures.push_back({{"generator", e.generator.body()}, {"expected", e.expected.body()},
                          {"actual", e.actual.body()}});
    }
  }
  r.data["automorphism"][circuit] = {{"map", rep.map_name}, {"entries", rep.entries.size()}, {"failures", failures}};
  r.equal("automorphism_" + circuit, static_cast<double>(rep.num_failures()), 0.0, 0.0);
}

void add_symbolic_conservation(Report& r, const RunConfig& c) {
  const PauliSum h1 = build_hamiltonian({ModelFamily::kOpenH1, c.L});
  const PauliSum h2 = build_hamiltonian({ModelFamily::kSelfDualClosedH2, c.L});
  const PauliSum hg = build_hamiltonian({ModelFamily::kMinimalGaugedHG, c.L});
  const PauliSum eta(eta_string(h1.layout()));
  r.equal("symbolic_eta_commutes_h1", residual_terms(sum_commutator(h1, eta)), 0.0, 0.0);
  r.equal("symbolic_eta_commutes_h2", residual_terms(sum_commutator(h2, eta)), 0.0, 0.0);
  for (int s : {1, -1}) {
    r.equal("symbolic_eta_commutes_h_" + sign_tag(s), residual_terms(sum_commutator(h_pm(c, s), eta)), 0.0, 0.0);
  }
  r.equal("symbolic_u1_fixes_h1", residual_terms(conjugate_circuit(build_u1(c.L), h1) - h1), 0.0, 0.0);
  r.equal("symbolic_u2_fixes_h2", residual_terms(conjugate_circuit(build_u2(c.L), h2) - h2), 0.0, 0.0);
  r.equal("symbolic_u_gauged_fixes_h_gauged", residual_terms(conjugate_circuit(build_u_gauged(c.L), hg) - hg), 0.0,
          0.0);
  const ProjectedCommutationReport pc = projected_commutation_check(c.L, c.sign, h_pm_sign(c, c.sign), 0);
  r.equal("symbolic_h_" + sign_tag(c.sign) + "_commutes_d_" + sign_tag(c.sign),
          static_cast<double>(pc.symbolic_residual_terms), 0.0, 0.0);
  for (int s : {1, -1}) {
    const PauliSum h = h_pm(c, s);
    r.greater("symbolic_u2_moves_h_" + sign_tag(s), residual_terms(conjugate_circuit(build_u2(c.L), h) - h), 0.0);
  }
}

// ---- dense pieces ----

void add_dense_commutators(Report& r, const RunConfig& c) {
  const size_t need = c.L + 1;
  if (!fits(c, need)) {
    for (const char* n : {"commutator_h1_u1", "commutator_h2_u2", "commutator_h_d", "commutator_h_gauged_u_gauged",
                          "commutator_h_gauged_d_hat", "noncommutation_h_u2"}) {
      r.skip(n, cap_note(c, need));
    }
    return;
  }
  const MaterializeLimits lim = limits_of(c);
  const auto dense = [&](const PauliSum& s) { return materialize(s, lim).matrix; };
  const auto circuit = [&](const CliffordCircuit& u) { return materialize(u, lim).matrix; };
  const DenseMatrix u2 = circuit(build_u2(c.L));
  commutator_record(r, c, "commutator_h1_u1", dense(build_hamiltonian({ModelFamily::kOpenH1, c.L})),
                    circuit(build_u1(c.L)));
  commutator_record(r, c, "commutator_h2_u2", dense(build_hamiltonian({ModelFamily::kSelfDualClosedH2, c.L})), u2);
  for (int s : {1, -1}) {
    commutator_record(r, c, "commutator_h_" + sign_tag(s) + "_d_" + sign_tag(s), dense(h_pm(c, s)),
                      build_d_noninvertible(c.L, s, lim).matrix);
  }
  const DenseMatrix hg = dense(build_hamiltonian({ModelFamily::kMinimalGaugedHG, c.L}));
  commutator_record(r, c, "commutator_h_gauged_u_gauged", hg, circuit(build_u_gauged(c.L)));
  for (int s : {1, -1}) {
    commutator_record(r, c, "commutator_h_gauged_d_hat_" + sign_tag(s), hg, d_hat(c, s, false).matrix);
  }
  for (int s : {1, -1}) {
    r.greater("noncommutation_h_" + sign_tag(s) + "_u2", commutator(dense(h_pm(c, s)), u2).frobenius_norm(), 0.1);
  }
}

void add_transition(Report& r, const RunConfig& c) {
  const size_t need = c.L + 1;
  if (!fits(c, need)) {
    for (const char* n : {"counterexample_basis_probability", "counterexample_random_pairs",
                          "preservation_d_hat_linear", "preservation_d_hat_antilinear"}) {
      r.skip(n, cap_note(c, need));
    }
    return;
  }
  const size_t dim = size_t{1} << c.L;
  const DenseOperator d = build_d_noninvertible(c.L, c.sign, limits_of(c));
  const StateVector zero = StateVector::basis(dim, 0);
  const std::pair<StateVector, StateVector> basis_pair{zero, zero};
  const TransitionReport basis = transition_experiment(d, std::span(&basis_pair, 1));
  r.equal("counterexample_basis_probability", basis.records[0].transformed, 0.25, 1e-12 * c.tol_scale,
          "reference probability " + fmt(basis.records[0].reference));
  const auto pairs = random_pairs(c, dim);
  r.greater("counterexample_random_pairs", transition_experiment(d, pairs).max_abs_deviation, 0.05);

  const SectorEmbedding e = SectorEmbedding::ancilla(c.L, c.sign);
  const auto embedded = random_pairs(c, dim, &e);
  r.less("preservation_d_hat_linear", transition_experiment(d_hat(c, c.sign, false), embedded).max_abs_deviation,
         1e-11 * c.tol_scale);
  r.less("preservation_d_hat_antilinear",
         transition_experiment(d_hat(c, c.sign, true), embedded).max_abs_deviation, 1e-11 * c.tol_scale);
}

void add_polar(Report& r, const RunConfig& c) {
  const size_t need = c.L + 1;
  if (!fits(c, need)) {
    for (const char* n : {"polar_d_hat", "theorem_structure", "corollary", "polar_d_noninvertible"}) {
      r.skip(n, cap_note(c, need));
    }
    return;
  }
  const double tol = 1e-9 * c.tol_scale;
  const DenseOperator dh = d_hat(c, c.sign, false);
  const SectorEmbedding e = SectorEmbedding::ancilla(c.L, c.sign);
  const TheoremStructureReport ts = verify_theorem_structure(dh, e, c.tol_scale);
  const PolarFactors& f = ts.factors;
  r.less("polar_d_hat_reconstruction", f.reconstruction_error, tol);
  r.equal("polar_d_hat_rank", static_cast<double>(f.rank), static_cast<double>(size_t{1} << c.L), 0.0);
  r.equal("polar_d_hat_invertible", f.invertible ? 1.0 : 0.0, 0.0, 0.0);
  r.less("theorem_block_identity", ts.block_identity_error, tol);
  r.less("theorem_offdiag_vanishes", ts.offdiag_error, tol);
  r.less("theorem_projector_absorbs", ts.projector_absorption_error, tol);
  r.data["polar"] = {{"reconstruction_error", f.reconstruction_error},
                     {"sigma", f.sigma},
                     {"rank", f.rank},
                     {"invertible", f.invertible},
                     {"block_identity_error", ts.block_identity_error},
                     {"offdiag_error", ts.offdiag_error}};

  const DenseMatrix hg =
      materialize(build_hamiltonian({ModelFamily::kMinimalGaugedHG, c.L}), limits_of(c)).matrix;
  for (bool anti : {false, true}) {
    const std::string name = anti ? "corollary_antilinear" : "corollary_linear";
    const CorollaryReport cr = corollary_check(hg, anti ? d_hat(c, c.sign, true) : dh, e, c.tol_scale);
    if (cr.skipped) {
      r.records.push_back({name, CheckStatus::kFail, cr.precondition_norm, std::nullopt, "",
                           "precondition [H_G, P_H] = 0 failed"});
    } else {
      r.less(name, cr.projected_commutator_norm, 1e-9 * c.tol_scale);
    }
  }

  const DenseOperator d = build_d_noninvertible(c.L, c.sign, limits_of(c));
  const TheoremStructureReport bad = verify_theorem_structure(d, SectorEmbedding::full_space(
                                                                     HilbertLayout::matter_only(c.L)));
  r.greater("polar_d_noninvertible_block_identity_violated", bad.block_identity_error, tol);
  const DenseMatrix proj =
      materialize(symmetry_projector(c.sign, HilbertLayout::matter_only(c.L)), limits_of(c)).matrix;
  r.less("polar_d_noninvertible_psd_is_projector", frobenius_distance(bad.factors.psd_part.matrix, proj), tol);

  if (!c.dump_path.empty()) {
    std::ofstream out(c.dump_path, std::ios::binary);
    if (!out) throw UsageError("cannot open dump path " + c.dump_path);
    if (c.dump_format == "csv") {
      write_csv(out, dh.matrix);
    } else {
      write_binary(out, dh);
    }
  }
}

void add_gauge(Report& r, const RunConfig& c) {
  // Symbolic: dual substitution turns the fully gauged model into H_G.
  const LayoutPtr links = HilbertLayout::with_links(c.L);
  const PauliSum full = build_hamiltonian({ModelFamily::kFullyGaugedHG, c.L});
  const PauliSum hg = build_hamiltonian({ModelFamily::kMinimalGaugedHG, c.L});
  const PauliSum collapsed = collapse_links_to_ancilla(substitute(dual_variable_map(links), full), hg.layout());
  r.equal("symbolic_dual_variables_recover_h_gauged", residual_terms(collapsed - hg), 0.0, 0.0);
  size_t gauss_residual = 0;
  for (const PauliSum& g : gauss_law_operators(links)) gauss_residual += residual_terms(sum_commutator(full, g));
  r.equal("symbolic_gauss_law_conserved", static_cast<double>(gauss_residual), 0.0, 0.0);

  if (fits(c, c.L + 1)) {
    const DenseMatrix hgd = materialize(hg, limits_of(c)).matrix;
    const SectorEmbedding ep = SectorEmbedding::ancilla(c.L, 1);
    const SectorEmbedding em = SectorEmbedding::ancilla(c.L, -1);
    for (int s : {1, -1}) {
      const SectorEmbedding& e = s > 0 ? ep : em;
      const DenseMatrix block = e.isometry().adjoint() * (hgd * e.isometry());
      r.less("sector_block_" + sign_tag(s), max_abs_difference(block, materialize(h_pm(c, s), limits_of(c)).matrix),
             1e-12 * c.tol_scale);
    }
    r.less("sector_offdiagonal_block", (ep.isometry().adjoint() * (hgd * em.isometry())).frobenius_norm(),
           1e-12 * c.tol_scale);
  } else {
    r.skip("sector_blocks", cap_note(c, c.L + 1));
  }

  const size_t need = 2 * c.L;
  if (!fits(c, need) || c.L > kGaussCap) {
    r.skip("gauss_projector", cap_note(c, need));
    r.skip("spectral_equivalence", cap_note(c, need));
    return;
  }
  const DenseMatrix pg = gauss_sector_projector(c.L, kGaussCap).matrix;
  double trace = 0.0;
  for (size_t i = 0; i < pg.rows(); ++i) trace += pg(i, i).real();
  r.equal("gauss_projector_trace", trace, static_cast<double>(size_t{1} << c.L), 1e-9);
  r.less("gauss_projector_idempotent", frobenius_distance(pg * pg, pg), 1e-12 * c.tol_scale);
  commutator_record(r, c, "gauss_projector_commutes_h_full", materialize(full, limits_of(c)).matrix, pg);

  const SpectralEquivalenceReport se = spectral_equivalence_check(c.L, kGaussCap);
  json mism = json::array();
  for (const auto& m : se.comparison.mismatches) mism.push_back({m.value, m.count_a, m.count_b});
  json subs = json::array();
  for (const auto& row : se.gauss_subsectors) {
    subs.push_back({{"wilson_sign", row.wilson_sign}, {"dim", row.dim}, {"matches", row.matches}});
  }
  r.data["spectral_equivalence"] = {
      {"model_a", se.model_a},
      {"model_b", se.model_b},
      {"L", se.L},
      {"uniform_factor", se.comparison.uniform_factor ? json(*se.comparison.uniform_factor) : json(nullptr)},
      {"mismatches", mism},
      {"gauss_subsectors", subs}};
  if (se.comparison.uniform_factor) {
    r.equal("spectral_equivalence_uniform_factor", static_cast<double>(*se.comparison.uniform_factor),
            static_cast<double>(size_t{1} << (c.L - 1)), 0.0);
  } else {
    r.records.push_back({"spectral_equivalence_uniform_factor", CheckStatus::kFail,
                         static_cast<double>(se.comparison.mismatches.size()), std::nullopt, "",
                         "no uniform multiplicity factor; see data.spectral_equivalence.mismatches"});
  }
}

Report make_report(const RunConfig& c) {
  Report r;
  r.command = c.command;
  r.config = c;
  return r;
}

std::string iso_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

// ---- config ----

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "text";
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "text") return OutputFormat::kText;
  throw UsageError("unknown format '" + s + "' (json|csv|text)");
}

std::string to_string(Fault f) {
  for (const auto& [name, v] : kFaultNames) {
    if (v == f) return name;
  }
  return "none";
}

Fault parse_fault(const std::string& s) {
  auto it = kFaultNames.find(s);
  if (it == kFaultNames.end()) throw UsageError("unknown fault '" + s + "'");
  return it->second;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "skipped";
}

std::vector<std::string> command_names() { return kCommands; }

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw UsageError("unknown command '" + command + "'");
  }
  if (L < 2) throw UsageError("--L must be at least 2");
  if (sign != 1 && sign != -1) throw UsageError("--sign must be + or -");
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) throw UsageError("--tol-scale must be positive");
  if (dense_cap == 0) throw UsageError("dense cap must be positive");
  if (pairs == 0) throw UsageError("--pairs must be positive");
  if (command == "verify-automorphism" && circuit != "u1" && circuit != "u2" && circuit != "u-gauged") {
    throw UsageError("unknown circuit '" + circuit + "' (u1|u2|u-gauged)");
  }
  if (command == "spectrum") {
    if (model.empty()) throw UsageError("spectrum requires --model");
    if (!parse_model_name(model)) throw UsageError("unknown model '" + model + "'");
  }
  if (fault != Fault::kNone && command != "full-suite") throw UsageError("--inject-fault is only valid for full-suite");
  if (dump_format != "binary" && dump_format != "csv") throw UsageError("--dump-format must be binary or csv");
}

json RunConfig::to_json() const {
  return {{"command", command},   {"model", model},         {"circuit", circuit},
          {"L", L},               {"sign", sign},           {"seed", seed},
          {"tol_scale", tol_scale}, {"format", to_string(format)}, {"out", out_path},
          {"inject_fault", to_string(fault)}, {"dense_cap", dense_cap}, {"pairs", pairs},
          {"dump", dump_path},    {"dump_format", dump_format}};
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  c.command = j.value("command", c.command);
  c.model = j.value("model", c.model);
  c.circuit = j.value("circuit", c.circuit);
  c.L = j.value("L", c.L);
  c.sign = j.value("sign", c.sign);
  c.seed = j.value("seed", c.seed);
  c.tol_scale = j.value("tol_scale", c.tol_scale);
  c.format = parse_output_format(j.value("format", to_string(c.format)));
  c.out_path = j.value("out", c.out_path);
  c.fault = parse_fault(j.value("inject_fault", to_string(c.fault)));
  c.dense_cap = j.value("dense_cap", c.dense_cap);
  c.pairs = j.value("pairs", c.pairs);
  c.dump_path = j.value("dump", c.dump_path);
  c.dump_format = j.value("dump_format", c.dump_format);
  return c;
}

// ---- report ----

bool Report::all_pass() const {
  for (const auto& rec : records) {
    if (rec.status == CheckStatus::kFail) return false;
  }
  return true;
}

void Report::less(std::string name, double measured, double threshold, std::string note) {
  records.push_back({std::move(name), measured < threshold ? CheckStatus::kPass : CheckStatus::kFail, measured,
                     threshold, "<", std::move(note)});
}

void Report::greater(std::string name, double measured, double threshold, std::string note) {
  records.push_back({std::move(name), measured > threshold ? CheckStatus::kPass : CheckStatus::kFail, measured,
                     threshold, ">", std::move(note)});
}

void Report::equal(std::string name, double measured, double expected, double tol, std::string note) {
  if (tol > 0.0) note = note.empty() ? "tol " + fmt(tol, "%g") : note + "; tol " + fmt(tol, "%g");
  records.push_back({std::move(name), std::abs(measured - expected) <= tol ? CheckStatus::kPass : CheckStatus::kFail,
                     measured, expected, "==", std::move(note)});
}

void Report::skip(std::string name, std::string note) {
  records.push_back({std::move(name), CheckStatus::kSkipped, std::nullopt, std::nullopt, "", std::move(note)});
}

json Report::to_json() const {
  json recs = json::array();
  for (const auto& rec : records) {
    recs.push_back({{"name", rec.name},
                    {"status", to_string(rec.status)},
                    {"measured", rec.measured ? json(*rec.measured) : json(nullptr)},
                    {"threshold", rec.threshold ? json(*rec.threshold) : json(nullptr)},
                    {"comparator", rec.comparator},
                    {"note", rec.note}});
  }
  json j = {{"artifact_version", WIGNERLAB_VERSION},
            {"command", command},
            {"config", config.to_json()},
            {"seed", config.seed},
            {"records", recs},
            {"all_pass", all_pass()},
            {"data", data},
            {"timing", {{"timestamp", timestamp}, {"wall_seconds", wall_seconds}}}};
  if (eigenvalues) j["eigenvalues"] = *eigenvalues;
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  if (eigenvalues) {
    os << "index,eigenvalue\n";
    for (size_t i = 0; i < eigenvalues->size(); ++i) os << i << ',' << fmt((*eigenvalues)[i]) << '\n';
    return os.str();
  }
  os << "name,status,measured,threshold,comparator\n";
  for (const auto& rec : records) {
    os << rec.name << ',' << to_string(rec.status) << ',' << (rec.measured ? fmt(*rec.measured) : "") << ','
       << (rec.threshold ? fmt(*rec.threshold) : "") << ',' << rec.comparator << '\n';
  }
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "wignerlab " << WIGNERLAB_VERSION << "  " << command << "  L=" << config.L
     << " sign=" << (config.sign > 0 ? '+' : '-') << " seed=" << config.seed;
  if (config.fault != Fault::kNone) os << " fault=" << to_string(config.fault);
  os << '\n';
  size_t n_pass = 0, n_fail = 0, n_skip = 0;
  for (const auto& rec : records) {
    const char* tag = rec.status == CheckStatus::kPass ? "PASS" : rec.status == CheckStatus::kFail ? "FAIL" : "SKIP";
    os << '[' << tag << "] " << rec.name;
    if (rec.measured) os << "  " << fmt(*rec.measured, "%.6g");
    if (rec.threshold) os << ' ' << rec.comparator << ' ' << fmt(*rec.threshold, "%.6g");
    if (!rec.note.empty()) os << "  (" << rec.note << ')';
    os << '\n';
    (rec.status == CheckStatus::kPass ? n_pass : rec.status == CheckStatus::kFail ? n_fail : n_skip)++;
  }
  if (eigenvalues) {
    os << "eigenvalues:";
    for (double v : *eigenvalues) os << ' ' << fmt(v, "%.12g");
    os << '\n';
  }
  os << n_pass << " passed, " << n_fail << " failed, " << n_skip << " skipped  (" << fmt(wall_seconds, "%.3f")
     << " s)\n";
  return os.str();
}

std::string Report::render(OutputFormat f) const {
  switch (f) {
    case OutputFormat::kJson: return to_json().dump(2) + "\n";
    case OutputFormat::kCsv: return to_csv();
    case OutputFormat::kText: return to_text();
  }
  return to_text();
}

// ---- commands ----

Report cmd_verify_automorphism(const RunConfig& c) {
  Report r = make_report(c);
  add_automorphism(r, c, c.circuit);
  return r;
}

Report cmd_commutators(const RunConfig& c) {
  Report r = make_report(c);
  add_symbolic_conservation(r, c);
  add_dense_commutators(r, c);
  return r;
}

Report cmd_transition_check(const RunConfig& c) {
  Report r = make_report(c);
  add_transition(r, c);
  return r;
}

Report cmd_polar(const RunConfig& c) {
  Report r = make_report(c);
  add_polar(r, c);
  return r;
}

Report cmd_spectrum(const RunConfig& c) {
  Report r = make_report(c);
  const ModelSpec spec{*parse_model_name(c.model), c.L};
  const size_t sites = layout_for(spec).get()->total_sites();
  if (!fits(c, sites)) {
    throw DimensionCapExceeded("spectrum: " + cap_note(c, sites), sites, c.dense_cap);
  }
  const DenseMatrix h = materialize(build_hamiltonian(spec), limits_of(c)).matrix;
  const SpectrumResult s = hermitian_eigensolve(h);
  r.less("eigensolver_residual", s.residual, kEigenResidualPerDim * static_cast<double>(h.rows()) * c.tol_scale);
  r.data["model"] = c.model;
  r.data["dimension"] = h.rows();
  r.data["iterations"] = s.iterations;
  r.eigenvalues = s.eigenvalues;
  return r;
}

Report cmd_gauge_equivalence(const RunConfig& c) {
  Report r = make_report(c);
  add_gauge(r, c);
  return r;
}

Report cmd_full_suite(const RunConfig& c) {
  Report r = make_report(c);
  for (const char* circuit : {"u1", "u2", "u-gauged"}) add_automorphism(r, c, circuit);
  add_symbolic_conservation(r, c);
  add_dense_commutators(r, c);
  add_transition(r, c);
  add_polar(r, c);
  add_gauge(r, c);
  return r;
}

Report run_command(const RunConfig& c) {
  c.validate();
  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (c.command == "verify-automorphism") r = cmd_verify_automorphism(c);
  else if (c.command == "commutators") r = cmd_commutators(c);
  else if (c.command == "transition-check") r = cmd_transition_check(c);
  else if (c.command == "polar") r = cmd_polar(c);
  else if (c.command == "spectrum") r = cmd_spectrum(c);
  else if (c.command == "gauge-equivalence") r = cmd_gauge_equivalence(c);
  else r = cmd_full_suite(c);
  r.timestamp = iso_timestamp();
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace wignerlab
