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
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "mixedphase/channels.hpp"
#include "mixedphase/ensemble.hpp"
#include "mixedphase/experiments.hpp"
#include "test_support.hpp"

using namespace mixedphase;

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::uint64_t mask_of(const Region &r) {
  std::uint64_t m = 0;
  for (auto e : r.edges()) m |= std::uint64_t(1) << e;
  return m;
}

double max_abs_diff(const ClassicalEnsemble &a, const ClassicalEnsemble &b) {
  double d = 0;
  for (const auto &[s, w] : a.probabilities()) d = std::max(d, std::abs(w - b.probability(s)));
  for (const auto &[s, w] : b.probabilities()) d = std::max(d, std::abs(w - a.probability(s)));
  return d;
}

}  // namespace

TEST_CASE("loop ensemble examples") {
  TorusLattice lat(3, 3);
  auto e00 = build_loop_ensemble(lat);
  CHECK(e00.support_size() == 256);
  for (const auto &[s, w] : e00.probabilities()) CHECK(w == doctest::Approx(1.0 / 256));
  std::size_t total = 0;
  for (auto sec : SectorLabel::all()) {
    auto e = build_loop_ensemble(lat, sec);
    CHECK((e.probability(0) > 0) == (sec == SectorLabel{0, 0}));
    total += e.support_size();
    for (auto other : SectorLabel::all()) {
      if (!(other == sec)) CHECK(inner_product(e, build_loop_ensemble(lat, other)) == 0.0);
    }
  }
  // Closed configurations: the cycle space has dimension 18 - 9 + 1.
  CHECK(total == 1024);
  // The span construction on larger lattices agrees with the stabilizer state.
  TorusLattice l4(4, 4);
  auto e4 = build_loop_ensemble(l4, {1, 0});
  auto s4 = build_loop_state(l4, {1, 0});
  CHECK(max_abs_diff(e4, ensemble_from_stabilizer(s4)) < 1e-15);
}

TEST_CASE("tr-to-cl examples") {
  TorusLattice lat(3, 3);
  auto zero = build_tr_to_cl(lat, 0.0);
  CHECK(zero.support_size() == 1);
  CHECK(zero.probability(0) == doctest::Approx(1.0));
  auto crit = build_tr_to_cl(lat, 0.5);
  CHECK(crit.support_size() == 256);
  CHECK(crit.marginal_entropy(lat.all_edges()) == doctest::Approx(8 * kLn2).epsilon(1e-12));
  CHECK(max_abs_diff(crit, build_loop_ensemble(lat)) < 1e-12);
  for (double q : {0.1, 0.3, 0.45}) {
    auto e = build_tr_to_cl(lat, q);
    auto pair = lat.plaquette({1, 1});
    Region two({pair.edges()[0], pair.edges()[1]});
    CHECK(e.expectation_z(two) == doctest::Approx((1 - 2 * q) * (1 - 2 * q)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_tr_to_cl(TorusLattice(5, 5), 0.3), CapacityExceeded);
}

TEST_CASE("channel examples") {
  TorusLattice lat(3, 3);
  std::size_t n = lat.num_edges();
  auto e = build_loop_ensemble(lat);
  auto once = e.x_mix(4, 0.5);
  CHECK(max_abs_diff(once, once.x_mix(4, 0.5)) < 1e-15);
  auto full = e;
  for (std::size_t k = 0; k < n; k++) full = full.x_mix(k, 0.5);
  CHECK(full.support_size() == (std::size_t(1) << n));
  CHECK(std::abs(full.marginal_entropy(lat.all_edges()) - n * kLn2) < 1e-9);
  auto bit = ClassicalEnsemble::uniform(1, {0, 1});
  auto reset = bit.reset(0);
  CHECK(reset.support_size() == 1);
  CHECK(reset.probability(0) == 1.0);
  CHECK(bit.reset(0, true).probability(1) == 1.0);
}

TEST_CASE("marginal, CMI and expectation examples") {
  TorusLattice lat(4, 4);
  auto e = build_loop_ensemble(lat);
  auto s = build_loop_state(lat);
  for (std::size_t k = 0; k < lat.num_vertices(); k++) {
    auto p = lat.markov_partition(lat.vertex_at(k), 1, 1);
    CHECK(e.cmi(p.A, p.B, p.C) < 1e-10);
    CHECK(cmi(s, p.A, p.B, p.C).value == 0);
  }
  auto loop = lat.encircling_dual_loop({1, 1}, 0);
  CHECK(e.expectation_z(loop) == doctest::Approx(1.0));
  CHECK(e.flip(mask_of(lat.string_between({1, 1}, {1, 3}))).expectation_z(loop) == doctest::Approx(-1.0));
  CHECK(e.expectation_z(lat.dual_loop(Axis::x, 2)) == doctest::Approx(1.0));
  CHECK(inner_product(e, build_loop_ensemble(lat, {1, 0})) == 0.0);
  CHECK_THROWS_AS(e.cmi(Region({1, 2}), Region({2}), Region({5})), ContractViolation);
}

TEST_CASE("markov sweep examples") {
  // Only width 0 fits on T(3,3); there B is empty and p = 0 keeps I(A:C) = 3 bits.
  TorusLattice lat(3, 3);
  auto rows = markov_sweep_partial_dephasing(lat, {0.0, 0.1, 0.25, 0.5}, {0, 1, 2});
  REQUIRE(rows.size() == 4);
  for (const auto &r : rows) {
    CHECK(r.width == 0);
    CHECK(r.cmi >= -1e-10);
  }
  CHECK(rows[0].cmi == doctest::Approx(3 * kLn2).epsilon(1e-9));
  CHECK(rows[1].cmi < rows[0].cmi);
  CHECK(rows[2].cmi < rows[1].cmi);
  CHECK(std::abs(rows[3].cmi) < 1e-9);
}

TEST_CASE("stabilizer agreement along full-strength channel paths") {
  TorusLattice lat(3, 3);
  std::size_t n = lat.num_edges();
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<std::size_t> edge(0, n - 1), face(0, lat.num_faces() - 1);
  for (auto sec : SectorLabel::all()) {
    auto s = build_loop_state(lat, sec);
    auto e = build_loop_ensemble(lat, sec);
    for (int step = 0; step < 12; step++) {
      switch (op(rng)) {
        case 0: {
          std::size_t k = edge(rng);
          s = apply_pauli_mix(s, pauli_on(n, Region({k}), 'X'));
          e = e.x_mix(k, 0.5);
          break;
        }
        case 1: {
          std::size_t k = edge(rng);
          s = apply_reset(s, k);
          e = e.reset(k);
          break;
        }
        default: {
          auto f = lat.vertex_at(face(rng));
          s = apply_pauli_mix(s, pauli_on(n, lat.plaquette(f), 'X'));
          e = e.plaquette_mix(lat, f, 0.5);
        }
      }
      CHECK(std::abs(e.total_probability() - 1.0) < 1e-12);
      for (int t = 0; t < 4; t++) {
        Region a(testing::random_subset(n, 0.5, rng));
        CHECK(std::abs(e.marginal_entropy(a) - region_entropy(s, a).nats()) < 1e-10);
      }
    }
  }
}

TEST_CASE("oracle channels on C do not increase the CMI") {
  TorusLattice lat(4, 4);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> prob(0.0, 0.5);
  auto e = build_loop_ensemble(lat);
  for (int t = 0; t < 20; t++) {
    auto sigma = e.x_mix(rng() % lat.num_edges(), prob(rng)).x_mix(rng() % lat.num_edges(), prob(rng));
    auto p = lat.markov_partition(lat.vertex_at(std::size_t(t) % lat.num_vertices()), 1, 1);
    double before = sigma.cmi(p.A, p.B, p.C);
    CHECK(before >= -1e-10);
    const auto &ce = p.C.edges();
    auto after = sigma.x_mix(ce[rng() % ce.size()], prob(rng)).reset(ce[rng() % ce.size()]);
    CHECK(after.cmi(p.A, p.B, p.C) <= before + 1e-10);
  }
}

TEST_CASE("capacity and validation") {
  ClassicalEnsemble small(4, 2);
  small.add(1, 0.5);
  small.add(2, 0.25);
  CHECK_THROWS_AS(small.add(3, 0.25), CapacityExceeded);
  CHECK_THROWS_AS(ClassicalEnsemble(65), CapacityExceeded);
  CHECK_THROWS_AS(small.add(16, 0.1), ContractViolation);
  CHECK_THROWS_AS(small.flip_mix(1, 1.5), ContractViolation);
  CHECK_THROWS_AS(build_loop_ensemble(TorusLattice(6, 6), {}, 1 << 10), CapacityExceeded);
  CHECK_THROWS_AS(ensemble_from_stabilizer(MixedStabilizerState(1, {SignedPauli::from_string("X")})),
                  ContractViolation);
}

TEST_CASE("binary cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mixedphase_ensemble_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  TorusLattice lat(3, 3);
  auto e = build_tr_to_cl(lat, 0.3);
  e.save_binary((dir / "direct.bin").string());
  auto back = ClassicalEnsemble::load_binary((dir / "direct.bin").string());
  CHECK(back.num_bits() == e.num_bits());
  CHECK(max_abs_diff(back, e) == 0.0);
  CHECK_THROWS(ClassicalEnsemble::load_binary((dir / "missing.bin").string()));

  setenv("MIXEDPHASE_CACHE_DIR", dir.string().c_str(), 1);
  int builds = 0;
  auto build = [&] {
    builds++;
    return e;
  };
  auto first = cached_ensemble("tr_to_cl_3_0.3", build);
  auto second = cached_ensemble("tr_to_cl_3_0.3", build);
  unsetenv("MIXEDPHASE_CACHE_DIR");
  CHECK(builds == 1);
  CHECK(max_abs_diff(first, second) == 0.0);
  fs::remove_all(dir);
}
