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

#include "wignerlab/bitmask.h"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace wignerlab {

BitMask::BitMask(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

void BitMask::set(size_t i, bool value) {
  const uint64_t bit = uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

BitMask& BitMask::operator^=(const BitMask& other) {
  assert(num_bits_ == other.num_bits_);
  for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitMask& BitMask::operator&=(const BitMask& other) {
  assert(num_bits_ == other.num_bits_);
  for (size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

size_t BitMask::popcount() const {
  size_t n = 0;
  for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
  return n;
}

bool BitMask::none() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitMask::all() const { return popcount() == num_bits_; }

std::vector<size_t> BitMask::set_bits() const {
  std::vector<size_t> out;
  for (size_t k = 0; k < words_.size(); ++k) {
    uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(k * 64 + static_cast<size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

size_t BitMask::popcount_and(const BitMask& a, const BitMask& b) {
  assert(a.num_bits_ == b.num_bits_);
  size_t n = 0;
  for (size_t k = 0; k < a.words_.size(); ++k) {
    n += static_cast<size_t>(std::popcount(a.words_[k] & b.words_[k]));
  }
  return n;
}

uint64_t BitMask::to_u64() const {
  if (num_bits_ > 64) throw std::out_of_range("BitMask::to_u64: more than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

size_t BitMask::hash() const {
  // FNV-1a over the words.
  uint64_t h = 1469598103934665603ull;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h ^ num_bits_);
}

std::strong_ordering operator<=>(const BitMask& a, const BitMask& b) {
  if (auto c = a.num_bits_ <=> b.num_bits_; c != 0) return c;
  // Highest word first so the order matches the integer order of the mask.
  for (size_t k = a.words_.size(); k-- > 0;) {
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace wignerlab
