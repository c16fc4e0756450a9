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

#ifndef WIGNERLAB_LAYOUT_H
#define WIGNERLAB_LAYOUT_H

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wignerlab {

class HilbertLayout;
using LayoutPtr = std::shared_ptr<const HilbertLayout>;

/// Site ordering for a chain of `n_matter` spins plus optional gauge slots.
///
/// Matter site j (1-based) occupies index j-1; gauge slots follow in the order
/// they were declared. In dense materializations, index k is bit k of the
/// computational-basis index, so matter site 1 is the least significant bit.
///
/// Three gauge arrangements are used by the models:
///  - none (matter only),
///  - a single ancilla labelled "L+1" sitting on the (L,1) link,
///  - one link per bond, labelled "j+1/2" for j = 1..L; the label "1/2" is
///    accepted as an alias of the periodic link "L+1/2".
class HilbertLayout {
 public:
  HilbertLayout(size_t n_matter, std::vector<std::string> gauge_slots);

  static LayoutPtr matter_only(size_t n_matter);
  static LayoutPtr with_ancilla(size_t n_matter);
  static LayoutPtr with_links(size_t n_matter);
  static LayoutPtr make(size_t n_matter, std::vector<std::string> gauge_slots);

  size_t n_matter() const { return n_matter_; }
  const std::vector<std::string>& gauge_slots() const { return gauge_slots_; }
  size_t total_sites() const { return n_matter_ + gauge_slots_.size(); }

  /// Index of a site label: "1".."L" for matter, otherwise a gauge label.
  size_t index_of(std::string_view label) const;
  std::string label_of(size_t index) const;
  size_t matter_index(size_t site) const;

  /// Index of the "L+1" ancilla when this is the single-ancilla layout.
  std::optional<size_t> ancilla_index() const;
  bool has_links() const;
  /// Index of link j+1/2 (j = 1..L); j = 0 is the periodic alias of j = L.
  size_t link_index(size_t j) const;

  /// Hilbert space dimension 2^total_sites; throws past 62 sites.
  size_t dimension() const;

  /// "L=4, gauge=[]" / "L=3, gauge=[4]" / "L=2, gauge=[3/2,5/2]".
  std::string describe() const;
  static LayoutPtr parse(std::string_view text);

  bool operator==(const HilbertLayout&) const = default;

 private:
  size_t n_matter_;
  std::vector<std::string> gauge_slots_;
};

/// Same object or structurally equal.
bool same_layout(const LayoutPtr& a, const LayoutPtr& b);
void require_same_layout(const LayoutPtr& a, const LayoutPtr& b, std::string_view context);

}  // namespace wignerlab

#endif  // WIGNERLAB_LAYOUT_H
