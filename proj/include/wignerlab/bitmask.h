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

#ifndef WIGNERLAB_BITMASK_H
#define WIGNERLAB_BITMASK_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wignerlab {

/// Fixed-width bit set over sites, packed into 64-bit words.
///
/// Bits beyond `size()` in the last word are always zero, so word-wise
/// comparison and popcount never see stale data.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(size_t num_bits);

  size_t size() const { return num_bits_; }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(size_t i, bool value = true);
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitMask& operator^=(const BitMask& other);
  BitMask& operator&=(const BitMask& other);
  friend BitMask operator^(BitMask a, const BitMask& b) { return a ^= b; }
  friend BitMask operator&(BitMask a, const BitMask& b) { return a &= b; }

  size_t popcount() const;
  bool none() const;
  bool all() const;
  /// Indices of set bits in increasing order.
  std::vector<size_t> set_bits() const;

  /// |a AND b|, without materializing the intersection.
  static size_t popcount_and(const BitMask& a, const BitMask& b);

  std::span<const uint64_t> words() const { return words_; }
  /// The mask as a single integer; only valid when size() <= 64.
  uint64_t to_u64() const;

  size_t hash() const;

  friend bool operator==(const BitMask&, const BitMask&) = default;
  friend std::strong_ordering operator<=>(const BitMask& a, const BitMask& b);

 private:
  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace wignerlab

#endif  // WIGNERLAB_BITMASK_H
