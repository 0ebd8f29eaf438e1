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


#ifndef MIXEDPHASE_TESTS_SUPPORT_HPP
#define MIXEDPHASE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mixedphase/channels.hpp"
#include "mixedphase/clifford.hpp"
#include "mixedphase/pauli.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase::testing {

inline SignedPauli random_hermitian_pauli(std::size_t n, std::mt19937_64 &rng, bool allow_identity = false) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::bernoulli_distribution sign(0.5);
  for (;;) {
    SignedPauli p(n);
    for (std::size_t q = 0; q < n; q++) {
      int l = letter(rng);
      p.x().set(q, l == 1 || l == 2);
      p.z().set(q, l == 2 || l == 3);
    }
    if (sign(rng)) p = p.negated();
    if (allow_identity || !p.is_identity_word()) return p;
  }
}

/// Scrambles |0...0> with random two-qubit Cliffords, then dephases `mixes` times.
inline MixedStabilizerState random_stabilizer_state(std::size_t n, std::size_t mixes, std::mt19937_64 &rng) {
  auto s = MixedStabilizerState::zero_state(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < 3 * n; k++) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) b = (a + 1) % n;
    auto tab = CliffordTableau::from_ops(2, CliffordTableau::random_ops(2, rng));
    s = apply_gate(s, Gate::clifford({a, b}, tab));
  }
  for (std::size_t k = 0; k < mixes; k++) s = apply_pauli_mix(s, random_hermitian_pauli(n, rng));
  return s;
}

inline std::vector<std::size_t> random_subset(std::size_t n, double density, std::mt19937_64 &rng) {
  std::bernoulli_distribution keep(density);
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; q++) {
    if (keep(rng)) out.push_back(q);
  }
  return out;
}

}  // namespace mixedphase::testing

#endif  // MIXEDPHASE_TESTS_SUPPORT_HPP
