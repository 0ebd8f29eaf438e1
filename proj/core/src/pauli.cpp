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

#include "mixedphase/pauli.hpp"

#include <bit>

namespace mixedphase {

SignedPauli::SignedPauli(std::size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}

SignedPauli::SignedPauli(BitVec x, BitVec z, std::uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
  if (x_.size() != z_.size()) {
    throw ContractViolation("x and z bit vectors differ in length");
  }
}

SignedPauli SignedPauli::from_string(const std::string &text) {
  std::size_t k = 0;
  std::uint8_t phase = 0;
  if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
    if (text[k] == '-') phase = 2;
    k++;
  }
  if (k < text.size() && text[k] == 'i') {
    phase += 1;
    k++;
  }
  std::size_t n = text.size() - k;
  SignedPauli p(n);
  for (std::size_t q = 0; q < n; q++) {
    switch (text[k + q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.x_.set(q);
        break;
      case 'Z':
        p.z_.set(q);
        break;
      case 'Y':
        p.x_.set(q);
        p.z_.set(q);
        break;
      default:
        throw std::invalid_argument("bad Pauli character in '" + text + "'");
    }
  }
  p.phase_ = phase & 3;
  return p;
}

SignedPauli SignedPauli::x_on(std::size_t n, std::span<const std::size_t> qubits) {
  SignedPauli p(n);
  for (auto q : qubits) p.x_.flip(q);
  return p;
}

SignedPauli SignedPauli::z_on(std::size_t n, std::span<const std::size_t> qubits) {
  SignedPauli p(n);
  for (auto q : qubits) p.z_.flip(q);
  return p;
}

SignedPauli SignedPauli::y_on(std::size_t n, std::span<const std::size_t> qubits) {
  SignedPauli p(n);
  for (auto q : qubits) {
    p.x_.flip(q);
    p.z_.flip(q);
  }
  return p;
}

int SignedPauli::sign() const {
  if (!is_hermitian()) {
    throw ContractViolation("Pauli operator is not Hermitian: " + str());
  }
  return phase_ == 0 ? 1 : -1;
}

char SignedPauli::at(std::size_t q) const {
  static const char table[] = "IXZY";
  return table[int(x_.get(q)) | (int(z_.get(q)) << 1)];
}

SignedPauli SignedPauli::negated() const {
  SignedPauli r = *this;
  r.phase_ = (phase_ + 2) & 3;
  return r;
}

SignedPauli &SignedPauli::operator*=(const SignedPauli &rhs) {
  if (num_qubits() != rhs.num_qubits()) {
    throw ContractViolation("Pauli size mismatch in multiply");
  }
  // Per-lane mod-4 counters of the i factors picked up at each qubit.
  std::uint64_t cnt1 = 0;
  std::uint64_t cnt2 = 0;
  auto x1 = x_.words();
  auto z1 = z_.words();
  auto x2 = rhs.x_.words();
  auto z2 = rhs.z_.words();
  for (std::size_t k = 0; k < x1.size(); k++) {
    std::uint64_t old_x1 = x1[k];
    std::uint64_t old_z1 = z1[k];
    x1[k] ^= x2[k];
    z1[k] ^= z2[k];
    std::uint64_t x1z2 = old_x1 & z2[k];
    std::uint64_t anti = (x2[k] & old_z1) ^ x1z2;
    cnt2 ^= (cnt1 ^ x1[k] ^ z1[k] ^ x1z2) & anti;
    cnt1 ^= anti;
  }
  unsigned log_i = unsigned(std::popcount(cnt1)) + 2u * unsigned(std::popcount(cnt2));
  phase_ = std::uint8_t((phase_ + rhs.phase_ + log_i) & 3);
  return *this;
}

std::string SignedPauli::str() const {
  std::string out;
  out += (phase_ & 2) ? '-' : '+';
  if (phase_ & 1) out += 'i';
  for (std::size_t q = 0; q < num_qubits(); q++) out += at(q);
  return out;
}

int symplectic_product(const SignedPauli &p, const SignedPauli &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw ContractViolation("Pauli size mismatch in symplectic product");
  }
  return int(p.x().dot(q.z()) ^ p.z().dot(q.x()));
}

bool commutes(const SignedPauli &p, const SignedPauli &q) { return symplectic_product(p, q) == 0; }

SignedPauli multiply(const SignedPauli &p, const SignedPauli &q) { return p * q; }

BitVec symplectic_row(const SignedPauli &p) { return concat(p.x(), p.z()); }

}  // namespace mixedphase
