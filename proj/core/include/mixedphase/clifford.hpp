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

#ifndef MIXEDPHASE_CLIFFORD_HPP
#define MIXEDPHASE_CLIFFORD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mixedphase/pauli.hpp"

namespace mixedphase {

/// Elementary Clifford gates on local qubit indices.
struct ElementaryOp {
  enum class Kind : std::uint8_t { H, S, SDAG, X, Y, Z, CX };
  Kind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // target, CX only
  ElementaryOp inverse() const;
};

/// Clifford unitary U on k qubits stored as the images U P U^dagger of the
/// single-qubit X_j and Z_j generators.
class CliffordTableau {
 public:
  static constexpr std::size_t kMaxQubits = 4;

  CliffordTableau() = default;
  static CliffordTableau identity(std::size_t k);
  /// Checks Hermiticity and the canonical commutation relations.
  static CliffordTableau from_images(std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images);
  static CliffordTableau from_ops(std::size_t k, const std::vector<ElementaryOp> &ops);
  /// Product of a seeded random elementary-gate word and a random Pauli.
  static std::vector<ElementaryOp> random_ops(std::size_t k, std::mt19937_64 &rng, std::size_t length = 16);

  std::size_t num_qubits() const { return x_images_.size(); }
  const std::vector<SignedPauli> &x_images() const { return x_images_; }
  const std::vector<SignedPauli> &z_images() const { return z_images_; }

  /// U P U^dagger for a k-qubit Pauli P.
  SignedPauli conjugate(const SignedPauli &p) const;
  /// Tableau of (op) * U.
  void append(const ElementaryOp &op);
  CliffordTableau inverse() const;
  /// Tableau of other * this (this applied first).
  CliffordTableau then(const CliffordTableau &other) const;
  bool is_valid() const;

  bool operator==(const CliffordTableau &) const = default;

 private:
  std::vector<SignedPauli> x_images_;
  std::vector<SignedPauli> z_images_;
};

/// Conjugates p in place by an elementary gate.
void conjugate_in_place(SignedPauli &p, const ElementaryOp &op);

}  // namespace mixedphase

#endif
