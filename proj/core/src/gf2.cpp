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

#include "mixedphase/gf2.hpp"

namespace mixedphase {

BitMatrix::BitMatrix(std::size_t nrows, std::size_t nc) : rows(nrows, BitVec(nc)), ncols(nc) {}

BitMatrix BitMatrix::from_rows(std::size_t nc, std::vector<BitVec> r) {
  for (const auto &row : r) {
    if (row.size() != nc) throw ContractViolation("row length differs from ncols");
  }
  BitMatrix m;
  m.rows = std::move(r);
  m.ncols = nc;
  return m;
}

BitMatrix BitMatrix::identity(std::size_t k) {
  BitMatrix m(k, k);
  for (std::size_t i = 0; i < k; i++) m.rows[i].set(i);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(ncols, rows.size());
  for (std::size_t i = 0; i < rows.size(); i++) {
    for (auto j : rows[i].indices()) t.rows[j].set(i);
  }
  return t;
}

BitVec BitMatrix::apply(const BitVec &v) const {
  if (v.size() != ncols) throw ContractViolation("vector length differs from ncols");
  BitVec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); i++) {
    if (rows[i].dot(v)) out.set(i);
  }
  return out;
}

std::size_t gf2_rank(const BitMatrix &m) {
  EchelonBasis basis(m.ncols);
  for (const auto &row : m.rows) basis.insert(row);
  return basis.rank();
}

std::vector<BitVec> kernel_basis(const BitMatrix &m) {
  // Right kernel of m is the left kernel of m^T: dependencies among the
  // columns of m, found by tracking combinations while inserting them.
  BitMatrix t = m.transpose();
  EchelonBasis basis(m.rows.size(), m.ncols);
  std::vector<BitVec> out;
  for (std::size_t j = 0; j < m.ncols; j++) {
    BitVec combo(m.ncols);
    combo.set(j);
    if (auto dep = basis.insert(t.rows[j], std::move(combo))) {
      out.push_back(std::move(*dep));
    }
  }
  return out;
}

EchelonBasis::EchelonBasis(std::size_t ncols, std::size_t num_tracked)
    : ncols_(ncols), num_tracked_(num_tracked), pivot_row_(ncols, -1) {}

EchelonBasis::Reduced EchelonBasis::reduce(BitVec v, BitVec combo) const {
  while (true) {
    auto p = v.lowest_set();
    if (!p) break;
    std::int64_t r = pivot_row_[*p];
    if (r < 0) break;
    v ^= rows_[r];
    if (num_tracked_) combo ^= combos_[r];
  }
  return {std::move(v), std::move(combo)};
}

std::optional<BitVec> EchelonBasis::insert(BitVec v, BitVec combo) {
  if (v.size() != ncols_) throw ContractViolation("row length differs from basis width");
  auto red = reduce(std::move(v), std::move(combo));
  auto p = red.residual.lowest_set();
  if (!p) {
    return std::move(red.combo);
  }
  pivot_row_[*p] = std::int64_t(rows_.size());
  rows_.push_back(std::move(red.residual));
  if (num_tracked_) combos_.push_back(std::move(red.combo));
  return std::nullopt;
}

bool EchelonBasis::insert(BitVec v) {
  BitVec combo = num_tracked_ ? BitVec(num_tracked_) : BitVec();
  return !insert(std::move(v), std::move(combo)).has_value();
}

SignedPauli product_of(const std::vector<SignedPauli> &gens, const BitVec &combo, std::size_t n) {
  SignedPauli acc(n);
  for (auto i : combo.indices()) acc *= gens[i];
  return acc;
}

GroupIndex::GroupIndex(const std::vector<SignedPauli> &gens, std::size_t n)
    : gens_(gens), n_(n), basis_(2 * n, gens.size()) {
  for (std::size_t i = 0; i < gens.size(); i++) {
    BitVec combo(gens.size());
    combo.set(i);
    if (basis_.insert(symplectic_row(gens[i]), std::move(combo))) {
      throw ContractViolation("group generators are not independent");
    }
  }
}

std::optional<BitVec> GroupIndex::decompose(const SignedPauli &p) const {
  if (p.num_qubits() != n_) throw ContractViolation("Pauli size differs from group size");
  auto red = basis_.reduce(symplectic_row(p), BitVec(gens_.size()));
  if (red.residual.any()) return std::nullopt;
  return std::move(red.combo);
}

Membership GroupIndex::membership(const SignedPauli &p) const {
  auto combo = decompose(p);
  if (!combo) return Membership::not_member;
  SignedPauli g = product_of(gens_, *combo, n_);
  return g.phase() == p.phase() ? Membership::member_plus : Membership::member_minus;
}

Membership membership_with_sign(const std::vector<SignedPauli> &group, const SignedPauli &p) {
  if (!p.is_hermitian()) throw ContractViolation("membership query needs a Hermitian Pauli");
  std::size_t n = p.num_qubits();
  for (const auto &g : group) {
    if (g.num_qubits() != n) throw ContractViolation("Pauli size mismatch");
  }
  GroupIndex index(group, n);
  return index.membership(p);
}

}  // namespace mixedphase
