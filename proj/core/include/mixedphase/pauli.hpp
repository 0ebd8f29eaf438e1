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

#ifndef MIXEDPHASE_PAULI_HPP
#define MIXEDPHASE_PAULI_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "mixedphase/bitvec.hpp"

namespace mixedphase {

/// Raised when a documented precondition is violated.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}, where qubit j
/// carries I, X, Z or Y according to (x_j, z_j) = (0,0), (1,0), (0,1), (1,1).
/// With this Y-counting convention the operator is Hermitian iff phase is even.
class SignedPauli {
 public:
  SignedPauli() = default;
  explicit SignedPauli(std::size_t num_qubits);
  SignedPauli(BitVec x, BitVec z, std::uint8_t phase = 0);

  static SignedPauli identity(std::size_t num_qubits) { return SignedPauli(num_qubits); }
  /// Parses text such as "+XZ_Y", "-ZZI" or "iX" (underscore and I both mean identity).
  static SignedPauli from_string(const std::string &text);
  static SignedPauli x_on(std::size_t num_qubits, std::span<const std::size_t> qubits);
  static SignedPauli z_on(std::size_t num_qubits, std::span<const std::size_t> qubits);
  static SignedPauli y_on(std::size_t num_qubits, std::span<const std::size_t> qubits);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec &x() const { return x_; }
  const BitVec &z() const { return z_; }
  BitVec &x() { return x_; }
  BitVec &z() { return z_; }
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t phase) { phase_ = phase & 3; }

  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// +1 or -1; throws ContractViolation for non-Hermitian operators.
  int sign() const;
  bool is_identity_word() const { return x_.none() && z_.none(); }
  bool same_word(const SignedPauli &other) const { return x_ == other.x_ && z_ == other.z_; }
  /// Qubits where the operator acts non-trivially.
  BitVec support() const { return x_ | z_; }
  std::size_t weight() const { return support().popcount(); }
  /// 'I', 'X', 'Y' or 'Z' for qubit q.
  char at(std::size_t q) const;

  SignedPauli negated() const;
  /// this = this * rhs (right multiplication) with exact phase.
  SignedPauli &operator*=(const SignedPauli &rhs);
  friend SignedPauli operator*(SignedPauli a, const SignedPauli &b) { return a *= b; }

  /// Text such as "+XIZY" or "-iZZ".
  std::string str() const;

  bool operator==(const SignedPauli &other) const = default;

 private:
  BitVec x_;
  BitVec z_;
  std::uint8_t phase_ = 0;
};

/// 0 if p and q commute, 1 if they anticommute.
int symplectic_product(const SignedPauli &p, const SignedPauli &q);
bool commutes(const SignedPauli &p, const SignedPauli &q);
SignedPauli multiply(const SignedPauli &p, const SignedPauli &q);

/// Concatenated symplectic row [x | z] of length 2n.
BitVec symplectic_row(const SignedPauli &p);

}  // namespace mixedphase

#endif
