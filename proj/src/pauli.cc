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

#include "wignerlab/pauli.h"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// "(+1i^0)" style prefix -> phase exponent.
std::optional<unsigned> parse_phase_token(std::string_view tok) {
  if (tok.size() < 6 || tok.front() != '(' || tok.back() != ')') return std::nullopt;
  std::string_view inner = tok.substr(1, tok.size() - 2);
  if (inner.size() != 5 || (inner[0] != '+' && inner[0] != '-') || inner.substr(1, 3) != "1i^" ||
      !std::isdigit(static_cast<unsigned char>(inner[4]))) {
    return std::nullopt;
  }
  unsigned k = static_cast<unsigned>(inner[4] - '0');
  return ((inner[0] == '-' ? 2u : 0u) + k) & 3u;
}

std::string phase_token(unsigned k) {
  k &= 3u;
  return std::string("(") + (k >= 2 ? "-" : "+") + "1i^" + std::to_string(k & 1u) + ")";
}

// Letters in site order; returns the number of Y letters emitted.
size_t append_letters(const PauliString& p, std::string& out) {
  size_t num_y = 0;
  bool any = false;
  for (size_t s = 0; s < p.num_sites(); ++s) {
    const char op = p.op_at(s);
    if (op == 'I') continue;
    if (op == 'Y') ++num_y;
    if (any) out += ' ';
    out += op;
    out += p.layout()->label_of(s);
    any = true;
  }
  if (!any) out += 'I';
  return num_y;
}

size_t count_y(const PauliString& p) { return BitMask::popcount_and(p.x_mask(), p.z_mask()); }

std::string format_coefficient(Complex c) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.17g%+.17gi)", c.real(), c.imag());
  return buf;
}

Complex parse_coefficient(std::string_view tok) {
  if (tok.size() < 4 || tok.front() != '(' || tok.back() != ')' || tok[tok.size() - 2] != 'i') {
    throw ParseError("PauliSum: bad coefficient '" + std::string(tok) + "'");
  }
  const std::string inner(tok.substr(1, tok.size() - 3));
  size_t split = std::string::npos;
  for (size_t k = inner.size(); k-- > 1;) {
    if ((inner[k] == '+' || inner[k] == '-') && inner[k - 1] != 'e' && inner[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) throw ParseError("PauliSum: bad coefficient '" + std::string(tok) + "'");
  char* end = nullptr;
  const std::string re_s = inner.substr(0, split), im_s = inner.substr(split);
  const double re = std::strtod(re_s.c_str(), &end);
  if (end != re_s.c_str() + re_s.size()) throw ParseError("PauliSum: bad real part '" + re_s + "'");
  const double im = std::strtod(im_s.c_str(), &end);
  if (end != im_s.c_str() + im_s.size()) throw ParseError("PauliSum: bad imaginary part '" + im_s + "'");
  return {re, im};
}

PauliString letter_token(const LayoutPtr& layout, std::string_view tok) {
  if (tok == "I") return PauliString(layout);
  if (tok.size() < 2) throw ParseError("Pauli: bad token '" + std::string(tok) + "'");
  const char op = tok[0];
  if (op != 'X' && op != 'Y' && op != 'Z' && op != 'I') {
    throw ParseError("Pauli: bad operator letter in '" + std::string(tok) + "'");
  }
  size_t idx = 0;
  try {
    idx = layout->index_of(tok.substr(1));
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
  return PauliString::single(layout, idx, op);
}

std::pair<std::string_view, LayoutPtr> split_layout(std::string_view text) {
  const size_t bar = text.rfind('|');
  if (bar == std::string_view::npos) throw ParseError("missing '| L=..., gauge=[...]' suffix");
  return {text.substr(0, bar), HilbertLayout::parse(text.substr(bar + 1))};
}

}  // namespace

Complex i_pow(unsigned k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(LayoutPtr layout)
    : layout_(std::move(layout)), x_(layout_->total_sites()), z_(layout_->total_sites()) {}

PauliString::PauliString(LayoutPtr layout, BitMask x, BitMask z, unsigned phase_exp)
    : layout_(std::move(layout)), x_(std::move(x)), z_(std::move(z)), phase_(phase_exp & 3u) {
  if (x_.size() != layout_->total_sites() || z_.size() != layout_->total_sites()) {
    throw std::invalid_argument("PauliString: mask width does not match layout");
  }
}

PauliString PauliString::single(LayoutPtr layout, size_t index, char op) {
  if (index >= layout->total_sites()) throw std::out_of_range("PauliString::single: site index out of range");
  PauliString p(std::move(layout));
  switch (op) {
    case 'I': break;
    case 'X': p.x_.set(index); break;
    case 'Z': p.z_.set(index); break;
    case 'Y':
      p.x_.set(index);
      p.z_.set(index);
      p.phase_ = 1;
      break;
    default: throw std::invalid_argument(std::string("PauliString::single: bad operator '") + op + "'");
  }
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  auto [body, layout] = split_layout(text);
  return parse(body, std::move(layout));
}

PauliString PauliString::parse(std::string_view text, LayoutPtr layout) {
  const auto tokens = split_ws(text);
  PauliString out(layout);
  size_t start = 0;
  if (!tokens.empty() && tokens[0].front() == '(') {
    auto k = parse_phase_token(tokens[0]);
    if (!k) throw ParseError("PauliString: bad phase prefix '" + tokens[0] + "'");
    out.phase_ = *k;
    start = 1;
  }
  for (size_t t = start; t < tokens.size(); ++t) out *= letter_token(layout, tokens[t]);
  return out;
}

bool PauliString::is_hermitian() const {
  // (X^x Z^z)^dagger = (-1)^{|x&z|} X^x Z^z, so i^k X^x Z^z is Hermitian iff k = |x&z| mod 2.
  return ((phase_ + count_y(*this)) & 1u) == 0;
}

size_t PauliString::weight() const {
  size_t n = 0;
  for (size_t s = 0; s < num_sites(); ++s) n += (x_.test(s) || z_.test(s)) ? 1 : 0;
  return n;
}

std::vector<size_t> PauliString::support() const {
  std::vector<size_t> out;
  for (size_t s = 0; s < num_sites(); ++s) {
    if (x_.test(s) || z_.test(s)) out.push_back(s);
  }
  return out;
}

char PauliString::op_at(size_t index) const {
  const bool x = x_.test(index), z = z_.test(index);
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

PauliString PauliString::canonical() const { return with_phase(0); }

PauliString PauliString::with_phase(unsigned phase_exp) const {
  PauliString p = *this;
  p.phase_ = phase_exp & 3u;
  return p;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  require_same_layout(layout_, rhs.layout_, "PauliString multiply");
  const size_t swaps = BitMask::popcount_and(z_, rhs.x_);
  phase_ = static_cast<unsigned>((phase_ + rhs.phase_ + 2 * (swaps & 1u)) & 3u);
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  return *this;
}

std::string PauliString::body() const {
  std::string letters;
  const size_t num_y = append_letters(*this, letters);
  // i^k X^x Z^z = i^{k - nY} * (printed letters), since XZ = -iY.
  const unsigned printed = static_cast<unsigned>((phase_ + 4 * num_y - num_y) & 3u);
  return phase_token(printed) + " " + letters;
}

std::string PauliString::to_string() const { return body() + " | " + layout_->describe(); }

bool operator==(const PauliString& a, const PauliString& b) {
  return a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_ && same_layout(a.layout_, b.layout_);
}

bool mask_less(const PauliString& a, const PauliString& b) {
  if (auto c = a.x_ <=> b.x_; c != 0) return c < 0;
  return (a.z_ <=> b.z_) < 0;
}

PauliString mul(const PauliString& p, const PauliString& q) { return p * q; }

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_layout(p.layout(), q.layout(), "commutes");
  const size_t form = BitMask::popcount_and(p.x_mask(), q.z_mask()) + BitMask::popcount_and(p.z_mask(), q.x_mask());
  return (form & 1u) == 0;
}

PauliString sigma_x(const LayoutPtr& layout, size_t site) {
  return PauliString::single(layout, layout->matter_index(site), 'X');
}
PauliString sigma_y(const LayoutPtr& layout, size_t site) {
  return PauliString::single(layout, layout->matter_index(site), 'Y');
}
PauliString sigma_z(const LayoutPtr& layout, size_t site) {
  return PauliString::single(layout, layout->matter_index(site), 'Z');
}
PauliString pauli_at(const LayoutPtr& layout, std::string_view label, char op) {
  return PauliString::single(layout, layout->index_of(label), op);
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(LayoutPtr layout) : layout_(std::move(layout)) {}

PauliSum::PauliSum(const PauliString& p, Complex coefficient) : layout_(p.layout()) { add_term(p, coefficient); }

PauliSum PauliSum::identity(LayoutPtr layout, Complex coefficient) {
  PauliSum s(layout);
  s.add_term(PauliString(layout), coefficient);
  return s;
}

void PauliSum::add_term(const PauliString& p, Complex coefficient) {
  require_same_layout(layout_, p.layout(), "PauliSum::add_term");
  const Complex c = coefficient * i_pow(p.phase_exp());
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(p.canonical(), c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex PauliSum::coefficient_of(const PauliString& p) const {
  auto it = terms_.find(p.canonical());
  if (it == terms_.end()) return {};
  // c * key = c * i^{-k} * p
  return it->second * i_pow(4u - p.phase_exp());
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  require_same_layout(layout_, rhs.layout_, "PauliSum +");
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
  require_same_layout(layout_, rhs.layout_, "PauliSum -");
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_layout(a.layout_, b.layout_, "PauliSum *");
  PauliSum out(a.layout_);
  for (const auto& [p, cp] : a.terms_) {
    for (const auto& [q, cq] : b.terms_) out.add_term(p * q, cp * cq);
  }
  return out;
}

PauliSum& PauliSum::operator*=(const PauliSum& rhs) { return *this = *this * rhs; }

PauliSum PauliSum::adjoint() const {
  PauliSum out(layout_);
  for (const auto& [p, c] : terms_) {
    // Keys are phase-free X^x Z^z; their adjoint is (-1)^{|x&z|} times themselves.
    const double sign = (count_y(p) & 1u) ? -1.0 : 1.0;
    out.add_term(p, std::conj(c) * sign);
  }
  return out;
}

PauliSum PauliSum::chopped(double tol) const {
  PauliSum out(layout_);
  for (const auto& [p, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(p, c);
  }
  return out;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string PauliSum::to_string() const {
  std::string out;
  if (terms_.empty()) out = "0";
  bool first = true;
  for (const auto& [p, c] : terms_) {
    std::string letters;
    const size_t num_y = append_letters(p, letters);
    // X^x Z^z = (-i)^{nY} * letters = i^{3 nY} * letters.
    const Complex printed = c * i_pow(static_cast<unsigned>((3 * num_y) & 3u));
    if (!first) out += " + ";
    out += format_coefficient(printed) + " " + letters;
    first = false;
  }
  return out + " | " + layout_->describe();
}

PauliSum PauliSum::parse(std::string_view text) {
  auto [body, layout] = split_layout(text);
  const auto tokens = split_ws(body);
  PauliSum out(layout);
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  size_t t = 0;
  while (t < tokens.size()) {
    const Complex c = parse_coefficient(tokens[t++]);
    PauliString p(layout);
    size_t letters = 0;
    while (t < tokens.size() && tokens[t] != "+") {
      p *= letter_token(layout, tokens[t++]);
      ++letters;
    }
    if (letters == 0) throw ParseError("PauliSum: coefficient without operator");
    out.add_term(p, c);
    if (t < tokens.size()) {
      ++t;  // '+'
      if (t == tokens.size()) throw ParseError("PauliSum: dangling '+'");
    }
  }
  return out;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (!same_layout(a.layout_, b.layout_) || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [p, c] : a.terms_) {
    if (mask_less(p, it->first) || mask_less(it->first, p) || c != it->second) return false;
    ++it;
  }
  return true;
}

PauliSum sum_commutator(const PauliSum& a, const PauliSum& b) { return a * b - b * a; }

PauliString eta_string(const LayoutPtr& layout) {
  PauliString eta(layout);
  for (size_t j = 0; j < layout->n_matter(); ++j) eta.set_x(j, true);
  return eta;
}

PauliSum symmetry_projector(int sign, const LayoutPtr& layout, ProjectorKind kind) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("symmetry_projector: sign must be +1 or -1");
  PauliString generator(layout);
  if (kind == ProjectorKind::kEta) {
    generator = eta_string(layout);
  } else {
    const auto anc = layout->ancilla_index();
    if (!anc) throw std::invalid_argument("symmetry_projector: layout " + layout->describe() + " has no ancilla slot");
    generator = PauliString::single(layout, *anc, 'Z');
  }
  PauliSum out = PauliSum::identity(layout, 0.5);
  out.add_term(generator, 0.5 * sign);
  return out;
}

}  // namespace wignerlab
