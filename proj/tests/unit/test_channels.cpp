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


#include <random>
#include <vector>

#include "doctest.h"
#include "mixedphase/channels.hpp"
#include "mixedphase/dense.hpp"
#include "mixedphase/ensemble.hpp"
#include "mixedphase/experiments.hpp"
#include "test_support.hpp"

using namespace mixedphase;

namespace {

SignedPauli word(const char *text) { return SignedPauli::from_string(text); }

MixedStabilizerState single(const char *g) { return MixedStabilizerState(1, {word(g)}); }

bool same_distribution(const ClassicalEnsemble &a, const ClassicalEnsemble &b) {
  double aa = inner_product(a, a), bb = inner_product(b, b), ab = inner_product(a, b);
  return std::abs(aa - ab) < 1e-12 && std::abs(bb - ab) < 1e-12;
}

Gate random_gate(std::size_t n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> q(0, n - 1);
  switch (kind(rng)) {
    case 0: {
      std::size_t a = q(rng), b = q(rng);
      if (a == b) b = (a + 1) % n;
      return Gate::clifford({a, b}, CliffordTableau::from_ops(2, CliffordTableau::random_ops(2, rng)));
    }
    case 1:
      return Gate::pauli_mix(testing::random_hermitian_pauli(n, rng));
    default:
      return Gate::reset(n, q(rng), std::bernoulli_distribution(0.3)(rng));
  }
}

}  // namespace

TEST_CASE("pauli mix examples") {
  CHECK(same_state(apply_pauli_mix(single("Z"), word("X")), MixedStabilizerState::maximally_mixed(1)));
  TorusLattice lat(3, 3);
  auto dephased = apply_circuit(build_loop_state(lat), dephasing_circuit(lat));
  CHECK(dephased.num_generators() == 0);
  CHECK(total_entropy(dephased).value == 18);
  auto mixed = apply_pauli_mix(MixedStabilizerState::zero_state(4), word("XXXX"));
  CHECK(same_state(mixed, MixedStabilizerState(4, {word("ZZII"), word("ZIZI"), word("ZIIZ")})));
  auto ens = ensemble_from_stabilizer(mixed);
  CHECK(ens.support_size() == 2);
  CHECK(ens.probability(0b0000) == doctest::Approx(0.5));
  CHECK(ens.probability(0b1111) == doctest::Approx(0.5));
  CHECK(same_distribution(ens, ClassicalEnsemble::point(4, 0).flip_mix(0b1111, 0.5)));
}

TEST_CASE("reset examples") {
  CHECK(same_state(apply_reset(single("-Z"), 0), single("Z")));
  CHECK(same_state(apply_reset(MixedStabilizerState::maximally_mixed(1), 0), single("Z")));
  CHECK(same_state(apply_reset(single("Z"), 0, true), single("-Z")));
  TorusLattice lat(3, 3);
  auto s = build_loop_state(lat);
  auto ens = build_loop_ensemble(lat);
  for (std::size_t e = 0; e < lat.num_edges(); e++) {
    CHECK(same_distribution(ensemble_from_stabilizer(apply_reset(s, e)), ens.reset(e)));
  }
  // Resetting half of a Bell pair leaves the partner maximally mixed.
  auto bell = MixedStabilizerState(2, {word("XX"), word("ZZ")});
  auto out = apply_reset(bell, 0);
  CHECK(same_state(out, MixedStabilizerState(2, {word("ZI")})));
  CHECK(total_entropy(out).value == 1);
}

TEST_CASE("circuit examples") {
  TorusLattice lat(4, 4);
  auto rho = build_loop_state(lat);
  ChannelCircuit id(lat.num_edges());
  std::vector<Gate> layer;
  for (std::size_t e = 0; e < lat.num_edges(); e += 3) layer.push_back(Gate::clifford({e}, CliffordTableau::identity(1)));
  id.add_layer(layer);
  CHECK(same_state(apply_circuit(rho, id), rho));

  auto r2r1 = reset_circuit(lat);
  r2r1.append(plaquette_mixing_circuit(lat));
  CHECK(same_state(apply_circuit(MixedStabilizerState::maximally_mixed(lat.num_edges()), r2r1), rho));

  for (std::uint64_t seed = 1; seed <= 5; seed++) {
    auto c = random_clifford_circuit(lat, 2, seed);
    CHECK(c.is_clifford());
    CHECK(total_entropy(apply_circuit(rho, c)) == total_entropy(rho));
    CHECK(same_state(apply_circuit(apply_circuit(rho, c), c.inverse()), rho));
  }
}

TEST_CASE("layers reject overlapping supports") {
  ChannelCircuit c(4);
  auto h = CliffordTableau::from_ops(1, {{ElementaryOp::Kind::H, 0}});
  CHECK_THROWS_AS(c.add_layer({Gate::clifford({1}, h), Gate::pauli_mix(word("XXII"))}), ContractViolation);
  CHECK_THROWS_AS(Gate::clifford({1, 1}, CliffordTableau::identity(2)), ContractViolation);
  CHECK_THROWS_AS(Gate::pauli_mix(word("iXI")), ContractViolation);
  CHECK_THROWS_AS(Gate::partial_pauli_mix(word("XI"), 0.7), ContractViolation);
  auto partial = ChannelCircuit(2);
  partial.add_layer({Gate::partial_pauli_mix(word("XI"), 0.2)});
  CHECK_THROWS_AS(apply_circuit(MixedStabilizerState::zero_state(2), partial), ContractViolation);
}

TEST_CASE("traced identity circuit keeps the input width") {
  TorusLattice lat(6, 6);
  auto rho = build_loop_state(lat);
  ChannelCircuit id(lat.num_edges());
  for (int t = 0; t < 2; t++) {
    std::vector<Gate> layer;
    for (std::size_t e = std::size_t(t); e < lat.num_edges(); e += 5) layer.push_back(Gate::clifford({e}, CliffordTableau::identity(1)));
    id.add_layer(layer);
  }
  MarkovProbeConfig cfg{{{2, 2}, {0, 3}}, 1, {0, 1, 2}, 2, 7};
  auto traced = apply_circuit_traced(rho, lat, id, cfg);
  CHECK(same_state(traced.state, rho));
  REQUIRE(traced.input_width.has_value());
  CHECK_FALSE(traced.probes.empty());
  for (const auto &p : traced.probes) CHECK(p.markov_width == traced.input_width);
}

TEST_CASE("partition circuit examples") {
  TorusLattice lat(6, 6);
  std::size_t n = lat.num_edges();
  auto rho = build_loop_state(lat);
  auto all = lat.all_edges();
  auto c = random_clifford_circuit(lat, 2, 3);
  auto [ca_all, cb_all] = partition_circuit(lat, c, all);
  CHECK(cb_all.num_gates() == 0);
  CHECK(ca_all.num_gates() == c.num_gates());

  std::vector<std::size_t> half;
  for (std::size_t e = 0; e < n / 2; e++) half.push_back(e);
  auto one = random_clifford_circuit(lat, 1, 4);
  auto [ca, cb] = partition_circuit(lat, one, Region(half));
  CHECK(ca.num_gates() + cb.num_gates() == one.num_gates());

  for (std::uint64_t seed = 1; seed <= 4; seed++) {
    auto w = random_clifford_circuit(lat, 2, seed);
    auto [wa, wb] = partition_circuit(lat, w, lat.rectangle({{1, 1}, 2, 2}));
    auto after_b = apply_circuit(rho, wb);
    CHECK(same_state(apply_circuit(apply_circuit(after_b, wa), wa.inverse()), after_b));
    CHECK(same_state(apply_circuit(after_b, wa), apply_circuit(rho, w)));
  }
}

TEST_CASE("dressed operation examples") {
  TorusLattice lat(6, 6);
  std::size_t n = lat.num_edges();
  auto rho = build_loop_state(lat);
  ChannelCircuit d(n);
  d.add_layer({Gate::pauli_mix(pauli_on(n, Region({7}), 'X'))});
  CHECK(dress_operation(ChannelCircuit(n), d).support() == d.support());

  auto c1 = random_clifford_circuit(lat, 1, 9);
  CHECK(dress_operation(c1, d).support().is_subset_of(lat.neighborhood(Region({7}), 1)));

  for (std::uint64_t seed = 1; seed <= 4; seed++) {
    auto c = random_clifford_circuit(lat, 2, seed);
    auto string = pauli_string_circuit(n, lat.string_between({1, 1}, {1, 4}), 'X');
    for (const auto &op : {d, string}) {
      auto direct = apply_circuit(apply_circuit(apply_circuit(rho, c), op), c.inverse());
      CHECK(same_state(apply_circuit(rho, dress_operation(c, op)), direct));
    }
  }
  ChannelCircuit mix(n);
  mix.add_layer({Gate::pauli_mix(pauli_on(n, Region({0}), 'X'))});
  CHECK_THROWS_AS(dress_operation(mix, d), ContractViolation);
}

TEST_CASE("dual apply examples") {
  std::size_t n = 3;
  auto xmix = Gate::pauli_mix(word("IXI"));
  CHECK(dual_apply(xmix, word("IZI")).coefficient == 0.0);
  CHECK(dual_apply(xmix, word("ZIZ")).coefficient == 1.0);
  CHECK(dual_apply(Gate::reset(n, 1), word("XZI")).word == word("XII"));
  CHECK(dual_apply(Gate::reset(n, 1, true), word("IZI")).coefficient == -1.0);
  CHECK(dual_apply(Gate::reset(n, 1), word("IYI")).coefficient == 0.0);

  TorusLattice lat(5, 5);
  auto r2r1 = reset_circuit(lat);
  r2r1.append(plaquette_mixing_circuit(lat));
  auto lost = dual_apply(r2r1, winding_detector(lat, Axis::x));
  CHECK(lost.coefficient == 1.0);
  CHECK(lost.word.is_identity_word());

  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; t++) {
    auto tab = CliffordTableau::from_ops(2, CliffordTableau::random_ops(2, rng));
    auto g = Gate::clifford({0, 2}, tab);
    auto o = testing::random_hermitian_pauli(n, rng, true);
    auto once = dual_apply(g, o);
    CHECK(once.coefficient == 1.0);
    auto back = dual_apply(g.inverse(), once.word);
    CHECK(back.word == o);
  }
}

TEST_CASE("dual map is the adjoint on the dense oracle") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; t++) {
    std::size_t n = 2 + std::size_t(t % 4);
    auto g = random_gate(n, rng);
    auto rho = DenseState::random(n, rng);
    auto o = testing::random_hermitian_pauli(n, rng, true);
    auto out = apply(KrausChannel::from_gate(g), rho);
    auto dual = dual_apply(g, o);
    Complex lhs = (pauli_matrix(o) * out.matrix()).trace();
    Complex rhs = dual.coefficient * (pauli_matrix(dual.word) * rho.matrix()).trace();
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("engine rules agree with explicit Kraus sets") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; t++) {
    std::size_t n = 2 + std::size_t(t % 5);
    auto s = testing::random_stabilizer_state(n, std::size_t(t % 3), rng);
    auto g = random_gate(n, rng);
    auto engine = DenseState::from_stabilizer(apply_gate(s, g));
    auto oracle = apply(KrausChannel::from_gate(g), DenseState::from_stabilizer(s));
    CHECK(trace_distance(engine.matrix(), oracle.matrix()) < 1e-9);
  }
}

TEST_CASE("entropy changes under mixing and reset") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; t++) {
    std::size_t n = 8;
    auto s = testing::random_stabilizer_state(n, std::size_t(t % 4), rng);
    auto p = testing::random_hermitian_pauli(n, rng);
    bool anticommutes = false;
    for (const auto &g : s.generators()) anticommutes = anticommutes || !commutes(g, p);
    auto d = total_entropy(apply_pauli_mix(s, p)).value - total_entropy(s).value;
    CHECK(d == (anticommutes ? 1 : 0));

    std::size_t e = std::size_t(t) % n;
    auto r = apply_reset(s, e);
    auto dr = total_entropy(r).value - total_entropy(s).value;
    CHECK(dr >= -1);
    CHECK(dr <= 1);
    CHECK(eigen_check(r, SignedPauli::z_on(n, std::vector<std::size_t>{e})) == 1);
  }
  // On Z-diagonal states reset never adds entropy.
  TorusLattice lat(3, 3);
  for (auto sec : SectorLabel::all()) {
    auto s = build_loop_state(lat, sec);
    for (std::size_t e = 0; e < lat.num_edges(); e++) {
      auto r = apply_reset(s, e);
      CHECK(total_entropy(r) <= total_entropy(s));
      s = r;
    }
  }
}

TEST_CASE("gates supported in C do not increase the CMI") {
  std::mt19937_64 rng(25);
  TorusLattice lat(5, 5);
  auto rho = build_loop_state(lat);
  for (int t = 0; t < 40; t++) {
    auto sigma = apply_circuit(rho, random_clifford_circuit(lat, 2, std::uint64_t(t + 1)));
    auto p = lat.markov_partition(lat.vertex_at(std::size_t(t) % lat.num_vertices()), 1, 1);
    auto before = cmi(sigma, p.A, p.B, p.C);
    const auto &ce = p.C.edges();
    std::size_t a = ce[rng() % ce.size()], b = ce[rng() % ce.size()];
    Gate g = a == b ? Gate::reset(lat.num_edges(), a)
                    : Gate::clifford({a, b}, CliffordTableau::from_ops(2, CliffordTableau::random_ops(2, rng)));
    CHECK(cmi(apply_gate(sigma, g), p.A, p.B, p.C) <= before);
    auto mixed = apply_pauli_mix(sigma, pauli_on(lat.num_edges(), Region({a, b}), 'X'));
    CHECK(cmi(mixed, p.A, p.B, p.C) <= before);
  }
}

TEST_CASE("circuit json round trip") {
  TorusLattice lat(3, 3);
  std::size_t n = lat.num_edges();
  auto c = random_clifford_circuit(lat, 2, 5);
  c.add_layer({Gate::pauli_mix(pauli_on(n, Region({1, 2}), 'Y')), Gate::reset(n, 4, true),
               Gate::partial_pauli_mix(pauli_on(n, Region({6}), 'X'), 0.25)});
  auto text = c.to_json(std::uint64_t(5));
  auto back = ChannelCircuit::from_json(text);
  CHECK(back.to_json(std::uint64_t(5)) == text);
  CHECK(back.depth() == 3);
  CHECK(back.num_gates() == c.num_gates());
  CHECK_THROWS(ChannelCircuit::from_json(R"({"n": 2, "layers": [[{"kind": "teleport", "qubits": [0]}]]})"));
}
