// Copyright 2026 The mixedphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mixedphase/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace mixedphase {

BitVec::BitVec(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

BitVec BitVec::from_indices(std::size_t num_bits, std::span<const std::size_t> indices) {
  BitVec v(num_bits);
  for (auto i : indices) {
    if (i >= num_bits) {
      throw std::out_of_range("bit index out of range");
    }
    v.set(i);
  }
  return v;
}

static int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BitVec BitVec::from_hex(std::size_t num_bits, const std::string &hex) {
  BitVec v(num_bits);
  for (std::size_t k = 0; k < hex.size(); k++) {
    int h = hex_value(hex[k]);
    if (h < 0) {
      throw std::invalid_argument("bad hex digit in bit vector: " + hex);
    }
    for (int b = 0; b < 4; b++) {
      if ((h >> b) & 1) {
        std::size_t i = 4 * k + b;
        if (i >= num_bits) {
          throw std::invalid_argument("hex bit vector longer than declared size");
        }
        v.set(i);
      }
    }
  }
  return v;
}

void BitVec::clear() {
  for (auto &w : words_) w = 0;
}

void BitVec::check_same_size(const BitVec &other) const {
  if (num_bits_ != other.num_bits_) {
    throw std::invalid_argument("bit vector size mismatch");
  }
}

BitVec &BitVec::operator^=(const BitVec &other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); k++) words_[k] ^= other.words_[k];
  return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); k++) words_[k] &= other.words_[k];
  return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); k++) words_[k] |= other.words_[k];
  return *this;
}

BitVec &BitVec::and_not(const BitVec &other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); k++) words_[k] &= ~other.words_[k];
  return *this;
}

BitVec BitVec::operator~() const {
  BitVec r(num_bits_);
  for (std::size_t k = 0; k < words_.size(); k++) r.words_[k] = ~words_[k];
  if (num_bits_ & 63) {
    r.words_.back() &= (std::uint64_t{1} << (num_bits_ & 63)) - 1;
  }
  return r;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool BitVec::dot(const BitVec &other) const {
  check_same_size(other);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); k++) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

bool BitVec::intersects(const BitVec &other) const {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); k++) {
    if (words_[k] & other.words_[k]) return true;
  }
  return false;
}

std::optional<std::size_t> BitVec::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); k++) {
    if (words_[k]) {
      return k * 64 + std::countr_zero(words_[k]);
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); k++) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(k * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVec::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out((num_bits_ + 3) / 4, '0');
  for (std::size_t k = 0; k < out.size(); k++) {
    int h = 0;
    for (int b = 0; b < 4; b++) {
      std::size_t i = 4 * k + b;
      if (i < num_bits_ && get(i)) h |= 1 << b;
    }
    out[k] = digits[h];
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string out(num_bits_, '0');
  for (std::size_t i = 0; i < num_bits_; i++) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
  if (auto c = num_bits_ <=> other.num_bits_; c != 0) return c;
  // Compare as integers with bit 0 least significant.
  for (std::size_t k = words_.size(); k-- > 0;) {
    if (auto c = words_[k] <=> other.words_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BitVec concat(const BitVec &a, const BitVec &b) {
  BitVec r(a.size() + b.size());
  auto aw = a.words();
  auto rw = r.words();
  for (std::size_t k = 0; k < aw.size(); k++) rw[k] = aw[k];
  if ((a.size() & 63) == 0) {
    auto bw = b.words();
    for (std::size_t k = 0; k < bw.size(); k++) rw[aw.size() + k] = bw[k];
  } else {
    for (auto i : b.indices()) r.set(a.size() + i);
  }
  return r;
}

}  // namespace mixedphase
