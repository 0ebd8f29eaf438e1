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

#include "mixedphase/clifford.hpp"

#include "mixedphase/gf2.hpp"

namespace mixedphase {

ElementaryOp ElementaryOp::inverse() const {
  ElementaryOp r = *this;
  if (kind == Kind::S) r.kind = Kind::SDAG;
  if (kind == Kind::SDAG) r.kind = Kind::S;
  return r;
}

void conjugate_in_place(SignedPauli &p, const ElementaryOp &op) {
  auto &x = p.x();
  auto &z = p.z();
  std::size_t a = op.q0;
  bool xa = x.get(a);
  bool za = z.get(a);
  std::uint8_t ph = p.phase();
  switch (op.kind) {
    case ElementaryOp::Kind::H:
      // X <-> Z, Y -> -Y.
      if (xa && za) ph += 2;
      x.set(a, za);
      z.set(a, xa);
      break;
    case ElementaryOp::Kind::S:
      // X -> Y, Y -> -X.
      if (xa && za) ph += 2;
      z.set(a, za ^ xa);
      break;
    case ElementaryOp::Kind::SDAG:
      // X -> -Y, Y -> X.
      if (xa && !za) ph += 2;
      z.set(a, za ^ xa);
      break;
    case ElementaryOp::Kind::X:
      if (za) ph += 2;
      break;
    case ElementaryOp::Kind::Z:
      if (xa) ph += 2;
      break;
    case ElementaryOp::Kind::Y:
      if (xa != za) ph += 2;
      break;
    case ElementaryOp::Kind::CX: {
      std::size_t t = op.q1;
      bool xt = x.get(t);
      bool zt = z.get(t);
      if (xa && zt && (xt == za)) ph += 2;
      x.set(t, xt ^ xa);
      z.set(a, za ^ zt);
      break;
    }
  }
  p.set_phase(ph);
}

CliffordTableau CliffordTableau::identity(std::size_t k) {
  if (k == 0 || k > kMaxQubits) throw ContractViolation("Clifford tableau supports 1..4 qubits");
  CliffordTableau t;
  for (std::size_t j = 0; j < k; j++) {
    std::size_t idx[] = {j};
    t.x_images_.push_back(SignedPauli::x_on(k, idx));
    t.z_images_.push_back(SignedPauli::z_on(k, idx));
  }
  return t;
}

CliffordTableau CliffordTableau::from_images(std::vector<SignedPauli> x_images, std::vector<SignedPauli> z_images) {
  CliffordTableau t;
  t.x_images_ = std::move(x_images);
  t.z_images_ = std::move(z_images);
  if (!t.is_valid()) throw ContractViolation("tableau is not a valid Clifford (non-symplectic or non-Hermitian)");
  return t;
}

CliffordTableau CliffordTableau::from_ops(std::size_t k, const std::vector<ElementaryOp> &ops) {
  CliffordTableau t = identity(k);
  for (const auto &op : ops) t.append(op);
  return t;
}

std::vector<ElementaryOp> CliffordTableau::random_ops(std::size_t k, std::mt19937_64 &rng, std::size_t length) {
  using K = ElementaryOp::Kind;
  std::vector<ElementaryOp> ops;
  std::uniform_int_distribution<std::size_t> qubit(0, k - 1);
  std::uniform_int_distribution<int> choice(0, k > 1 ? 2 : 1);
  for (std::size_t n = 0; n < length; n++) {
    int c = choice(rng);
    if (c == 0) {
      ops.push_back({K::H, qubit(rng), 0});
    } else if (c == 1) {
      ops.push_back({K::S, qubit(rng), 0});
    } else {
      std::size_t a = qubit(rng);
      std::size_t b = qubit(rng);
      while (b == a) b = qubit(rng);
      ops.push_back({K::CX, a, b});
    }
  }
  std::uniform_int_distribution<int> pauli(0, 3);
  for (std::size_t q = 0; q < k; q++) {
    int p = pauli(rng);
    if (p == 1) ops.push_back({K::X, q, 0});
    if (p == 2) ops.push_back({K::Y, q, 0});
    if (p == 3) ops.push_back({K::Z, q, 0});
  }
  return ops;
}

SignedPauli CliffordTableau::conjugate(const SignedPauli &p) const {
  std::size_t k = num_qubits();
  if (p.num_qubits() != k) throw ContractViolation("Pauli size differs from tableau size");
  SignedPauli out(k);
  std::uint8_t ph = p.phase();
  for (std::size_t j = 0; j < k; j++) {
    bool xj = p.x().get(j);
    bool zj = p.z().get(j);
    // Y = i X Z.
    if (xj && zj) ph += 1;
    if (xj) out *= x_images_[j];
    if (zj) out *= z_images_[j];
  }
  out.set_phase(out.phase() + ph);
  return out;
}

void CliffordTableau::append(const ElementaryOp &op) {
  if (op.q0 >= num_qubits() || (op.kind == ElementaryOp::Kind::CX && (op.q1 >= num_qubits() || op.q1 == op.q0))) {
    throw ContractViolation("elementary gate qubit out of range");
  }
  for (auto &p : x_images_) conjugate_in_place(p, op);
  for (auto &p : z_images_) conjugate_in_place(p, op);
}

CliffordTableau CliffordTableau::then(const CliffordTableau &other) const {
  if (other.num_qubits() != num_qubits()) throw ContractViolation("tableau size mismatch");
  CliffordTableau t;
  for (const auto &p : x_images_) t.x_images_.push_back(other.conjugate(p));
  for (const auto &p : z_images_) t.z_images_.push_back(other.conjugate(p));
  return t;
}

CliffordTableau CliffordTableau::inverse() const {
  std::size_t k = num_qubits();
  // Rows of M are the images of X_0..X_{k-1}, Z_0..Z_{k-1} as [x|z] vectors.
  // A preimage of basis vector e_i solves u M = e_i.
  std::vector<BitVec> rows;
  for (const auto &p : x_images_) rows.push_back(symplectic_row(p));
  for (const auto &p : z_images_) rows.push_back(symplectic_row(p));
  EchelonBasis basis(2 * k, 2 * k);
  for (std::size_t r = 0; r < 2 * k; r++) {
    BitVec combo(2 * k);
    combo.set(r);
    basis.insert(rows[r], std::move(combo));
  }
  CliffordTableau inv;
  for (std::size_t target = 0; target < 2 * k; target++) {
    BitVec e(2 * k);
    e.set(target);
    auto red = basis.reduce(e, BitVec(2 * k));
    // red.combo selects rows of M summing to e (residual is zero for a
    // full-rank M): the Pauli u = prod of the selected basis generators.
    if (red.residual.any()) throw ContractViolation("tableau is singular");
    BitVec ux(k), uz(k);
    for (auto r : red.combo.indices()) {
      if (r < k) {
        ux.flip(r);
      } else {
        uz.flip(r - k);
      }
    }
    SignedPauli u(ux, uz, 0);
    SignedPauli image = conjugate(u);
    SignedPauli want(k);
    if (target < k) {
      want.x().set(target);
    } else {
      want.z().set(target - k);
    }
    if (!image.same_word(want) || !image.is_hermitian()) throw ContractViolation("tableau inversion failed");
    if (image.phase() != 0) u = u.negated();
    if (target < k) {
      inv.x_images_.push_back(u);
    } else {
      inv.z_images_.push_back(u);
    }
  }
  return inv;
}

bool CliffordTableau::is_valid() const {
  std::size_t k = x_images_.size();
  if (k == 0 || k > kMaxQubits || z_images_.size() != k) return false;
  for (std::size_t a = 0; a < k; a++) {
    const auto &xa = x_images_[a];
    const auto &za = z_images_[a];
    if (xa.num_qubits() != k || za.num_qubits() != k) return false;
    if (!xa.is_hermitian() || !za.is_hermitian()) return false;
    for (std::size_t b = 0; b < k; b++) {
      if (symplectic_product(xa, x_images_[b]) != 0) return false;
      if (symplectic_product(za, z_images_[b]) != 0) return false;
      if (symplectic_product(xa, z_images_[b]) != int(a == b)) return false;
    }
  }
  return true;
}

}  // namespace mixedphase
