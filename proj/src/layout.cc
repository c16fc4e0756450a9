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

#include "wignerlab/layout.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "wignerlab/errors.h"

namespace wignerlab {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<size_t> parse_index(std::string_view s) {
  size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string link_label(size_t j) { return std::to_string(2 * j + 1) + "/2"; }

}  // namespace

HilbertLayout::HilbertLayout(size_t n_matter, std::vector<std::string> gauge_slots)
    : n_matter_(n_matter), gauge_slots_(std::move(gauge_slots)) {
  std::set<std::string> seen;
  for (const auto& label : gauge_slots_) {
    if (label.empty()) throw std::invalid_argument("HilbertLayout: empty gauge label");
    if (auto v = parse_index(label); v && *v >= 1 && *v <= n_matter_) {
      throw std::invalid_argument("HilbertLayout: gauge label '" + label + "' collides with a matter site");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("HilbertLayout: duplicate gauge label '" + label + "'");
    }
  }
}

LayoutPtr HilbertLayout::make(size_t n_matter, std::vector<std::string> gauge_slots) {
  return std::make_shared<const HilbertLayout>(n_matter, std::move(gauge_slots));
}

LayoutPtr HilbertLayout::matter_only(size_t n_matter) { return make(n_matter, {}); }

LayoutPtr HilbertLayout::with_ancilla(size_t n_matter) {
  return make(n_matter, {std::to_string(n_matter + 1)});
}

LayoutPtr HilbertLayout::with_links(size_t n_matter) {
  std::vector<std::string> labels;
  labels.reserve(n_matter);
  for (size_t j = 1; j <= n_matter; ++j) labels.push_back(link_label(j));
  return make(n_matter, std::move(labels));
}

size_t HilbertLayout::index_of(std::string_view label) const {
  if (auto v = parse_index(label); v && *v >= 1 && *v <= n_matter_) return *v - 1;
  for (size_t k = 0; k < gauge_slots_.size(); ++k) {
    if (gauge_slots_[k] == label) return n_matter_ + k;
  }
  if (label == "1/2" && has_links()) return link_index(0);
  throw std::out_of_range("HilbertLayout: unknown site label '" + std::string(label) + "' in " + describe());
}

std::string HilbertLayout::label_of(size_t index) const {
  if (index < n_matter_) return std::to_string(index + 1);
  if (index < total_sites()) return gauge_slots_[index - n_matter_];
  throw std::out_of_range("HilbertLayout: site index out of range");
}

size_t HilbertLayout::matter_index(size_t site) const {
  if (site < 1 || site > n_matter_) throw std::out_of_range("HilbertLayout: matter site out of range");
  return site - 1;
}

std::optional<size_t> HilbertLayout::ancilla_index() const {
  if (gauge_slots_.size() == 1 && gauge_slots_[0] == std::to_string(n_matter_ + 1)) return n_matter_;
  return std::nullopt;
}

bool HilbertLayout::has_links() const {
  if (n_matter_ == 0 || gauge_slots_.size() != n_matter_) return false;
  for (size_t j = 1; j <= n_matter_; ++j) {
    if (gauge_slots_[j - 1] != link_label(j)) return false;
  }
  return true;
}

size_t HilbertLayout::link_index(size_t j) const {
  if (!has_links()) throw std::logic_error("HilbertLayout: layout has no link slots");
  if (j == 0) j = n_matter_;
  if (j > n_matter_) throw std::out_of_range("HilbertLayout: link index out of range");
  return n_matter_ + j - 1;
}

size_t HilbertLayout::dimension() const {
  if (total_sites() > 62) throw std::overflow_error("HilbertLayout: dimension exceeds 2^62");
  return size_t{1} << total_sites();
}

std::string HilbertLayout::describe() const {
  std::string out = "L=" + std::to_string(n_matter_) + ", gauge=[";
  for (size_t k = 0; k < gauge_slots_.size(); ++k) {
    if (k) out += ',';
    out += gauge_slots_[k];
  }
  out += ']';
  return out;
}

LayoutPtr HilbertLayout::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s.rfind("L=", 0) != 0) throw ParseError("layout: expected 'L=' in '" + s + "'");
  const size_t comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("layout: missing gauge list in '" + s + "'");
  auto n = parse_index(trim(std::string_view(s).substr(2, comma - 2)));
  if (!n) throw ParseError("layout: bad site count in '" + s + "'");
  std::string rest = trim(std::string_view(s).substr(comma + 1));
  if (rest.rfind("gauge=[", 0) != 0 || rest.back() != ']') throw ParseError("layout: bad gauge list in '" + s + "'");
  std::string inner = rest.substr(7, rest.size() - 8);
  std::vector<std::string> labels;
  size_t start = 0;
  while (start <= inner.size() && !trim(inner).empty()) {
    size_t end = inner.find(',', start);
    if (end == std::string::npos) end = inner.size();
    labels.push_back(trim(std::string_view(inner).substr(start, end - start)));
    start = end + 1;
    if (end == inner.size()) break;
  }
  return make(*n, std::move(labels));
}

bool same_layout(const LayoutPtr& a, const LayoutPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_layout(const LayoutPtr& a, const LayoutPtr& b, std::string_view context) {
  if (!same_layout(a, b)) {
    throw LayoutMismatch(std::string(context) + ": layout mismatch (" + (a ? a->describe() : "null") +
                         " vs " + (b ? b->describe() : "null") + ")");
  }
}

}  // namespace wignerlab
