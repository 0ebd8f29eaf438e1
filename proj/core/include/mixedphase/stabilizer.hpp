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

#ifndef MIXEDPHASE_STABILIZER_HPP
#define MIXEDPHASE_STABILIZER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedphase/gf2.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/pauli.hpp"

namespace mixedphase {

/// Entropy in units of log 2.
struct EntropyBits {
  std::int64_t value = 0;
  double nats() const;
  bool operator==(const EntropyBits &) const = default;
  auto operator<=>(const EntropyBits &) const = default;
};

/// Maximally mixed state on the joint +1 eigenspace of m commuting,
/// independent, Hermitian Pauli generators: rho = 2^{-n} prod_i (I + g_i).
class MixedStabilizerState {
 public:
  MixedStabilizerState() = default;
  /// Validates commutation, independence and Hermiticity.
  MixedStabilizerState(std::size_t num_qubits, std::vector<SignedPauli> gens);

  static MixedStabilizerState maximally_mixed(std::size_t num_qubits);
  /// |0...0><0...0|.
  static MixedStabilizerState zero_state(std::size_t num_qubits);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_generators() const { return gens_.size(); }
  const std::vector<SignedPauli> &generators() const { return gens_; }

  /// Reduced row-echelon form over columns x_0..x_{n-1}, z_0..z_{n-1}.
  MixedStabilizerState canonical() const;
  bool is_canonical() const;

  std::string to_json() const;
  static MixedStabilizerState from_json(const std::string &text);

  /// Generators are trusted; used by update rules that preserve validity.
  static MixedStabilizerState unchecked(std::size_t num_qubits, std::vector<SignedPauli> gens);

 private:
  std::size_t n_ = 0;
  std::vector<SignedPauli> gens_;
};

/// Canonical-form equality.
bool same_state(const MixedStabilizerState &a, const MixedStabilizerState &b);

EntropyBits total_entropy(const MixedStabilizerState &s);
EntropyBits region_entropy(const MixedStabilizerState &s, const Region &a);
/// S(AB) + S(BC) - S(ABC) - S(B).
EntropyBits cmi(const MixedStabilizerState &s, const Region &a, const Region &b, const Region &c);

/// Basis of the signed subgroup of elements supported inside `a`.
std::vector<SignedPauli> subgroup_supported_in(const MixedStabilizerState &s, const Region &a);
/// State on all n qubits whose group is the subgroup supported in `a`
/// (the reduced state on `a` tensored with the maximally mixed rest).
MixedStabilizerState restrict_to(const MixedStabilizerState &s, const Region &a);

/// Number of generators in `gens` touching both a and c; `gens` must
/// generate the same signed group as s.
std::size_t generator_span_count(const MixedStabilizerState &s, const Region &a, const Region &c,
                                 const std::vector<SignedPauli> &gens);

bool reduced_equal(const MixedStabilizerState &s1, const MixedStabilizerState &s2, const Region &a);

/// tr(rho1 rho2): zero, or 2^{-exponent}.
struct Overlap {
  bool zero = true;
  std::int64_t exponent = 0;
  double value() const;
  bool operator==(const Overlap &) const = default;
};
Overlap overlap(const MixedStabilizerState &s1, const MixedStabilizerState &s2);

/// +1 / -1 if +O / -O is in the group, nullopt otherwise.
std::optional<int> eigen_check(const MixedStabilizerState &s, const SignedPauli &o);

}  // namespace mixedphase

#endif
