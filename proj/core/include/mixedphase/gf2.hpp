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

#ifndef MIXEDPHASE_GF2_HPP
#define MIXEDPHASE_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mixedphase/bitvec.hpp"
#include "mixedphase/pauli.hpp"

namespace mixedphase {

struct BitMatrix {
  std::vector<BitVec> rows;
  std::size_t ncols = 0;

  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols);
  static BitMatrix from_rows(std::size_t ncols, std::vector<BitVec> rows);
  static BitMatrix identity(std::size_t k);

  std::size_t nrows() const { return rows.size(); }
  BitMatrix transpose() const;
  /// m * v over GF(2) (v has ncols entries).
  BitVec apply(const BitVec &v) const;
};

std::size_t gf2_rank(const BitMatrix &m);
/// Basis of {v : m v = 0}, lowest-index pivots first.
std::vector<BitVec> kernel_basis(const BitMatrix &m);

/// Incremental row-echelon basis. Each stored row's pivot is its lowest set
/// bit, so reduction proceeds from low to high columns. Optionally tracks,
/// for every stored row, which inserted input rows were combined to form it.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t ncols, std::size_t num_tracked = 0);

  struct Reduced {
    BitVec residual;
    BitVec combo;
  };

  /// Reduces v; returns the residual and the tracked combination used.
  Reduced reduce(BitVec v, BitVec combo) const;
  /// Inserts v. When v is dependent, returns the combination of earlier
  /// inputs (and v's own combo) that sums to zero.
  std::optional<BitVec> insert(BitVec v, BitVec combo);
  /// Untracked insertion; returns true if v was independent.
  bool insert(BitVec v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t num_tracked() const { return num_tracked_; }

 private:
  std::size_t ncols_;
  std::size_t num_tracked_;
  std::vector<BitVec> rows_;
  std::vector<BitVec> combos_;
  std::vector<std::int64_t> pivot_row_;
};

enum class Membership { not_member, member_plus, member_minus };

/// Decides whether p (up to sign) lies in the group generated by commuting,
/// independent Hermitian generators, and if so whether +p or -p does.
Membership membership_with_sign(const std::vector<SignedPauli> &group, const SignedPauli &p);

/// Ordered product of the generators selected by combo.
SignedPauli product_of(const std::vector<SignedPauli> &gens, const BitVec &combo, std::size_t num_qubits);

/// Membership queries against a fixed group without redoing elimination.
class GroupIndex {
 public:
  explicit GroupIndex(const std::vector<SignedPauli> &gens, std::size_t num_qubits);
  Membership membership(const SignedPauli &p) const;
  /// Combination of generators producing p's word, if any.
  std::optional<BitVec> decompose(const SignedPauli &p) const;
  std::size_t rank() const { return basis_.rank(); }

 private:
  std::vector<SignedPauli> gens_;
  std::size_t n_;
  EchelonBasis basis_;
};

}  // namespace mixedphase

#endif
