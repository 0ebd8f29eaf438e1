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


#include <cmath>
#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "mixedphase/ensemble.hpp"
#include "mixedphase/experiments.hpp"

using namespace mixedphase;

namespace {

std::int64_t int_result(const ExperimentReport &r, const std::string &key) {
  return std::get<std::int64_t>(r.result_value(key));
}

bool bool_result(const ExperimentReport &r, const std::string &key) { return std::get<bool>(r.result_value(key)); }

}  // namespace

TEST_CASE("loop state examples") {
  TorusLattice lat(3, 3);
  auto s = build_loop_state(lat);
  CHECK(s.num_generators() == 10);
  CHECK(total_entropy(s).value == 8);
  CHECK(s.is_canonical());
  for (auto sec : SectorLabel::all()) {
    auto st = build_loop_state(lat, sec);
    CHECK(eigen_check(st, winding_detector(lat, Axis::x)) == (sec.sx ? -1 : 1));
    CHECK(eigen_check(st, winding_detector(lat, Axis::y)) == (sec.sy ? -1 : 1));
    for (auto other : SectorLabel::all()) {
      if (other == sec) continue;
      CHECK(overlap(st, build_loop_state(lat, other)).zero);
      CHECK(inner_product(build_loop_ensemble(lat, sec), build_loop_ensemble(lat, other)) == 0.0);
    }
  }
  CHECK(SectorLabel::parse("10").sx == 1);
  CHECK(SectorLabel::parse("01").str() == "01");
  CHECK_THROWS_AS(SectorLabel::parse("2"), std::invalid_argument);
}

TEST_CASE("sector permutation by primal loops") {
  for (int L : {3, 4, 5}) {
    TorusLattice lat(L, L);
    std::size_t n = lat.num_edges();
    for (auto sec : SectorLabel::all()) {
      auto s = build_loop_state(lat, sec);
      auto fx = conjugate_by(s, pauli_on(n, winding_flip_loop(lat, Axis::x), 'X'));
      auto fy = conjugate_by(s, pauli_on(n, winding_flip_loop(lat, Axis::y), 'X'));
      CHECK(same_state(fx, build_loop_state(lat, {1 - sec.sx, sec.sy})));
      CHECK(same_state(fy, build_loop_state(lat, {sec.sx, 1 - sec.sy})));
    }
  }
}

TEST_CASE("td report on T(5,5)") {
  auto rep = td_report(TorusLattice(5, 5));
  CHECK(rep.passed());
  for (const auto &c : rep.checks()) CHECK_MESSAGE(c.passed, c.name);
  CHECK(int_result(rep, "markov_max_cmi_bits") == 0);
  CHECK(int_result(rep, "control_cmi_min_bits") == 1);
  CHECK(int_result(rep, "control_cmi_max_bits") == 1);
  CHECK(rep.find_check("product_state_distinguishable").passed);
  auto bad = td_report(TorusLattice(5, 5), {1, true});
  CHECK_FALSE(bad.passed());
}

TEST_CASE("memory round trip and failures") {
  TorusLattice lat(5, 5);
  for (int a = 0; a < 2; a++) {
    for (int b = 0; b < 2; b++) {
      LogicalBits bits{a, b};
      auto s = memory_encode(lat, bits);
      CHECK(memory_decode(lat, s) == bits);
      CHECK_FALSE(memory_decode(lat, apply_circuit(s, dephasing_circuit(lat))).has_value());
      for (std::uint64_t seed = 1; seed <= 3; seed++) {
        auto w = random_clifford_circuit(lat, 2, seed);
        CHECK(memory_decode_dressed(lat, apply_circuit(s, w), w.inverse()) == bits);
      }
    }
  }
}

TEST_CASE("braiding examples") {
  TorusLattice lat(5, 5);
  std::size_t n = lat.num_edges();
  CHECK(braiding_check(lat, {0, 0}, {0, 2}, {0, 0}) == -1);
  CHECK(braiding_check(lat, {0, 0}, {0, 2}, {0, 2}) == -1);
  CHECK(braiding_check(lat, {0, 0}, {2, 2}, {0, 0}, Routing::column_first) == -1);
  // A detector far from both endpoints sees no charge.
  CHECK(braiding_check(lat, {0, 0}, {0, 2}, {3, 1}) == 1);

  auto rho = build_loop_state(lat);
  auto closed = conjugate_by(rho, pauli_on(n, lat.rectangle_boundary({{1, 1}, 2, 2}), 'X'));
  CHECK(same_state(closed, rho));
  CHECK(eigen_check(closed, pauli_on(n, lat.encircling_dual_loop({1, 1}, 0), 'Z')) == 1);
  auto row = conjugate_by(rho, pauli_on(n, lat.string_between({0, 0}, {2, 2}, Routing::row_first), 'X'));
  auto col = conjugate_by(rho, pauli_on(n, lat.string_between({0, 0}, {2, 2}, Routing::column_first), 'X'));
  CHECK(same_state(row, col));
}

TEST_CASE("dressed braiding examples") {
  TorusLattice lat(8, 8);
  std::size_t n = lat.num_edges();
  auto loop = lat.encircling_dual_loop({2, 2}, 1);
  auto bare = dressed_braiding_check(lat, ChannelCircuit(n), {2, 2}, {2, 6}, loop);
  CHECK(bare.value == -1);
  CHECK(bare.sides_agree);
  for (std::uint64_t seed = 1; seed <= 3; seed++) {
    auto w = random_clifford_circuit(lat, 2, seed);
    auto r = dressed_braiding_check(lat, w, {2, 2}, {2, 6}, loop);
    CHECK(r.value == -1);
    CHECK(r.sides_agree);
    // This loop encloses neither endpoint.
    auto far = dressed_braiding_check(lat, w, {2, 2}, {2, 6}, lat.encircling_dual_loop({6, 2}, 1));
    CHECK(far.value == 1);
  }
}

TEST_CASE("annulus examples") {
  TorusLattice lat(8, 8);
  AnnulusOptions opt{{4, 4}, 1, 3, std::nullopt};
  auto plain = annulus_degeneracy(lat, opt);
  CHECK(plain.passed());
  CHECK(bool_result(plain, "nontrivial_set"));
  opt.deformation = random_clifford_circuit(lat, 2, 2);
  auto deformed = annulus_degeneracy(lat, opt);
  CHECK(deformed.passed());
  auto product = annulus_degeneracy(lat, {{4, 4}, 1, 3, std::nullopt},
                                    MixedStabilizerState::maximally_mixed(lat.num_edges()));
  CHECK_FALSE(bool_result(product, "nontrivial_set"));
  CHECK_FALSE(bool_result(product, "overlap_zero"));
  CHECK_THROWS_AS(annulus_degeneracy(lat, {{4, 4}, 1, 4, std::nullopt}), ContractViolation);
}

TEST_CASE("topological entropy examples") {
  TorusLattice lat(8, 8);
  auto rho = build_loop_state(lat);
  CHECK(topo_entropy(rho, lat, {4, 4}, 1, 3).value == 1);
  CHECK(topo_entropy(MixedStabilizerState::zero_state(lat.num_edges()), lat, {4, 4}, 1, 3).value == 0);
  for (std::uint64_t seed = 1; seed <= 3; seed++) {
    auto sigma = apply_circuit(rho, random_clifford_circuit(lat, 2, seed));
    CHECK(topo_entropy(sigma, lat, {4, 4}, 1, 3).value >= 1);
  }
}

TEST_CASE("two way path demo") {
  auto rep = two_way_path_demo(TorusLattice(5, 5));
  CHECK(rep.passed());
  CHECK(int_result(rep, "forward_entropy_bits") == 50);
  CHECK(bool_result(rep, "decode_fails_after_forward"));
}

TEST_CASE("Clifford circuits preserve sector overlaps") {
  TorusLattice lat(4, 4);
  for (std::uint64_t seed = 1; seed <= 3; seed++) {
    auto w = random_clifford_circuit(lat, 2, seed);
    for (auto a : SectorLabel::all()) {
      for (auto b : SectorLabel::all()) {
        auto sa = build_loop_state(lat, a), sb = build_loop_state(lat, b);
        CHECK(overlap(apply_circuit(sa, w), apply_circuit(sb, w)) == overlap(sa, sb));
      }
    }
  }
}

TEST_CASE("equal mixture of orthogonal restrictions adds one bit") {
  TorusLattice lat(3, 3);
  std::size_t n = lat.num_edges();
  auto e00 = build_loop_ensemble(lat, {0, 0});
  std::uint64_t mask = 0;
  Region string = lat.string_between({0, 0}, {0, 1});
  for (auto e : string.edges()) mask |= std::uint64_t(1) << e;
  auto moved = e00.flip(mask);
  ClassicalEnsemble mix(n);
  for (auto *e : {&e00, &moved}) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); bits++) {
      double p = e->probability(bits);
      if (p > 0) mix.add(bits, 0.5 * p);
    }
  }
  auto all = lat.all_edges();
  CHECK(inner_product(e00, moved) == 0.0);
  double expect = 0.5 * e00.marginal_entropy(all) + 0.5 * moved.marginal_entropy(all) + std::log(2.0);
  CHECK(std::abs(mix.marginal_entropy(all) - expect) < 1e-9);
}
