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

#ifndef MIXEDPHASE_BITVEC_HPP
#define MIXEDPHASE_BITVEC_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mixedphase {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero so word-level comparisons and popcounts stay exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t num_bits);

  static BitVec from_indices(std::size_t num_bits, std::span<const std::size_t> indices);
  /// Parses a little-endian hex string as produced by to_hex().
  static BitVec from_hex(std::size_t num_bits, const std::string &hex);

  std::size_t size() const { return num_bits_; }
  std::size_t num_words() const { return words_.size(); }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool value = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear();

  BitVec &operator^=(const BitVec &other);
  BitVec &operator&=(const BitVec &other);
  BitVec &operator|=(const BitVec &other);
  /// this &= ~other
  BitVec &and_not(const BitVec &other);
  BitVec operator~() const;

  friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t popcount() const;
  /// Parity of the bitwise AND (GF(2) inner product).
  bool dot(const BitVec &other) const;
  /// True when (this & other) has any bit set.
  bool intersects(const BitVec &other) const;
  std::optional<std::size_t> lowest_set() const;
  std::vector<std::size_t> indices() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Little-endian hex: character k encodes bits 4k..4k+3.
  std::string to_hex() const;
  /// '0'/'1' characters, bit 0 first.
  std::string to_string() const;

  bool operator==(const BitVec &other) const = default;
  std::strong_ordering operator<=>(const BitVec &other) const;

 private:
  void check_same_size(const BitVec &other) const;

  std::size_t num_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Concatenation [a | b].
BitVec concat(const BitVec &a, const BitVec &b);

}  // namespace mixedphase

#endif
