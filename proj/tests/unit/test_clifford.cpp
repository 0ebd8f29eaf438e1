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


#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "mixedphase/clifford.hpp"
#include "mixedphase/dense.hpp"
#include "test_support.hpp"

using namespace mixedphase;
using Kind = ElementaryOp::Kind;

namespace {

// Distance between two unitaries up to a global phase.
double phase_distance(const Matrix &a, const Matrix &b) {
  Complex ip = (a.adjoint() * b).trace();
  if (std::abs(ip) < 1e-12) return 1.0;
  Complex ph = ip / std::abs(ip);
  return (a * ph - b).norm();
}

}  // namespace

TEST_CASE("elementary gate conjugation") {
  auto p = SignedPauli::from_string("X");
  conjugate_in_place(p, {Kind::H, 0});
  CHECK(p == SignedPauli::from_string("Z"));
  p = SignedPauli::from_string("X");
  conjugate_in_place(p, {Kind::S, 0});
  CHECK(p == SignedPauli::from_string("Y"));
  p = SignedPauli::from_string("Y");
  conjugate_in_place(p, {Kind::S, 0});
  CHECK(p == SignedPauli::from_string("-X"));
  p = SignedPauli::from_string("Z");
  conjugate_in_place(p, {Kind::X, 0});
  CHECK(p == SignedPauli::from_string("-Z"));
  // CX with control 0 and target 1 spreads X forward and Z backward.
  p = SignedPauli::from_string("XI");
  conjugate_in_place(p, {Kind::CX, 0, 1});
  CHECK(p == SignedPauli::from_string("XX"));
  p = SignedPauli::from_string("IZ");
  conjugate_in_place(p, {Kind::CX, 0, 1});
  CHECK(p == SignedPauli::from_string("ZZ"));
}

TEST_CASE("from_images rejects invalid tableaux") {
  auto X = SignedPauli::from_string("X"), Z = SignedPauli::from_string("Z");
  CHECK_THROWS_AS(CliffordTableau::from_images({Z}, {Z}), ContractViolation);
  CHECK_THROWS_AS(CliffordTableau::from_images({SignedPauli::from_string("iX")}, {Z}), ContractViolation);
  CHECK(CliffordTableau::from_images({Z}, {X}).is_valid());
  CHECK_THROWS_AS(CliffordTableau::identity(5), ContractViolation);
}

TEST_CASE("random tableaux are valid and invert exactly") {
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= CliffordTableau::kMaxQubits; k++) {
    for (int t = 0; t < 25; t++) {
      auto tab = CliffordTableau::from_ops(k, CliffordTableau::random_ops(k, rng));
      CHECK(tab.is_valid());
      auto id = CliffordTableau::identity(k);
      CHECK(tab.then(tab.inverse()) == id);
      CHECK(tab.inverse().then(tab) == id);
      auto p = testing::random_hermitian_pauli(k, rng, true);
      CHECK(tab.inverse().conjugate(tab.conjugate(p)) == p);
    }
  }
}

TEST_CASE("conjugation is a homomorphism and preserves commutation") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; t++) {
    auto tab = CliffordTableau::from_ops(3, CliffordTableau::random_ops(3, rng));
    auto p = testing::random_hermitian_pauli(3, rng, true), q = testing::random_hermitian_pauli(3, rng, true);
    CHECK(tab.conjugate(p * q) == tab.conjugate(p) * tab.conjugate(q));
    CHECK(commutes(tab.conjugate(p), tab.conjugate(q)) == commutes(p, q));
  }
}

TEST_CASE("tableau matches its dense unitary") {
  std::mt19937_64 rng(13);
  for (std::size_t k = 1; k <= 3; k++) {
    for (int t = 0; t < 10; t++) {
      auto ops = CliffordTableau::random_ops(k, rng);
      auto tab = CliffordTableau::from_ops(k, ops);
      Matrix u = unitary_from_ops(k, ops);
      CHECK(phase_distance(u, unitary_from_tableau(tab)) < 1e-9);
      for (int r = 0; r < 5; r++) {
        auto p = testing::random_hermitian_pauli(k, rng, true);
        Matrix lhs = u * pauli_matrix(p) * u.adjoint();
        CHECK((lhs - pauli_matrix(tab.conjugate(p))).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("append composes on the left") {
  std::mt19937_64 rng(14);
  auto ops = CliffordTableau::random_ops(2, rng);
  auto tab = CliffordTableau::from_ops(2, ops);
  ElementaryOp h{Kind::H, 1};
  auto appended = tab;
  appended.append(h);
  CHECK(appended == tab.then(CliffordTableau::from_ops(2, {h})));
  CHECK(h.inverse().kind == Kind::H);
  CHECK(ElementaryOp{Kind::S, 0}.inverse().kind == Kind::SDAG);
}
