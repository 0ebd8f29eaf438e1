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


#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "mixedphase/gf2.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/pauli.hpp"

using namespace mixedphase;

namespace {

std::size_t overlap_size(const Region &a, const Region &b) { return (a & b).size(); }

std::vector<int> degree(const TorusLattice &lat, const Region &r) {
  std::vector<int> d(lat.num_vertices(), 0);
  for (auto e : r.edges()) {
    for (auto v : lat.endpoints(e)) d[lat.vertex_index(v)]++;
  }
  return d;
}

}  // namespace

TEST_CASE("stars and plaquettes have four edges and double-cover the lattice") {
  for (int L : {2, 3, 5}) {
    TorusLattice lat(L, L);
    std::vector<int> in_stars(lat.num_edges(), 0), in_plaq(lat.num_edges(), 0);
    for (std::size_t k = 0; k < lat.num_vertices(); k++) {
      auto v = lat.vertex_at(k);
      auto star = lat.vertex_star(v), plaq = lat.plaquette(v);
      if (L > 2) {
        CHECK(star.size() == 4);
        CHECK(plaq.size() == 4);
      }
      for (auto e : star.edges()) in_stars[e]++;
      for (auto e : plaq.edges()) in_plaq[e]++;
    }
    if (L > 2) {
      CHECK(std::all_of(in_stars.begin(), in_stars.end(), [](int c) { return c == 2; }));
      CHECK(std::all_of(in_plaq.begin(), in_plaq.end(), [](int c) { return c == 2; }));
    }
  }
}

TEST_CASE("star of the origin on T(3,3)") {
  TorusLattice lat(3, 3);
  auto star = lat.vertex_star({0, 0});
  std::vector<std::size_t> expected = {lat.edge_index({0, 0}, Dir::horizontal), lat.edge_index({0, 0}, Dir::vertical),
                                       lat.edge_index({0, 2}, Dir::horizontal), lat.edge_index({2, 0}, Dir::vertical)};
  std::sort(expected.begin(), expected.end());
  CHECK(star.edges() == expected);
  CHECK_THROWS_AS(lat.vertex_star({3, 0}), ContractViolation);
}

TEST_CASE("stars meet plaquettes in zero or two edges") {
  TorusLattice lat(4, 4);
  for (std::size_t a = 0; a < lat.num_vertices(); a++) {
    for (std::size_t b = 0; b < lat.num_faces(); b++) {
      auto k = overlap_size(lat.vertex_star(lat.vertex_at(a)), lat.plaquette(lat.vertex_at(b)));
      CHECK((k == 0 || k == 2));
    }
  }
}

TEST_CASE("dual loops") {
  TorusLattice lat(3, 3);
  std::size_t n = lat.num_edges();
  auto loop = lat.dual_loop(Axis::x, 0);
  CHECK(loop.size() == 3);
  for (auto e : loop.edges()) {
    CHECK(lat.edge_at(e).second == Dir::vertical);
    CHECK(lat.edge_at(e).first.i == 0);
  }
  for (Axis axis : {Axis::x, Axis::y}) {
    auto z = SignedPauli::z_on(n, lat.dual_loop(axis, 1).edges());
    for (std::size_t k = 0; k < lat.num_vertices(); k++) {
      auto v = lat.vertex_at(k);
      CHECK(commutes(z, SignedPauli::z_on(n, lat.vertex_star(v).edges())));
      CHECK(commutes(z, SignedPauli::x_on(n, lat.plaquette(v).edges())));
    }
  }
  // Parallel loops differ by the stars between them.
  EchelonBasis stars(n);
  for (std::size_t k = 0; k < lat.num_vertices(); k++) stars.insert(lat.vertex_star(lat.vertex_at(k)).mask(n));
  auto diff = lat.dual_loop(Axis::x, 0).mask(n) ^ lat.dual_loop(Axis::x, 2).mask(n);
  CHECK(stars.reduce(diff, BitVec()).residual.none());
  CHECK_FALSE(stars.reduce(lat.dual_loop(Axis::x, 0).mask(n), BitVec()).residual.none());
}

TEST_CASE("strings and primal loops") {
  TorusLattice lat(5, 5);
  std::size_t n = lat.num_edges();
  auto s = lat.string_between({0, 0}, {0, 2});
  CHECK(s.size() == 2);
  for (auto e : s.edges()) CHECK(lat.edge_at(e).second == Dir::horizontal);

  auto x = SignedPauli::x_on(n, lat.string_between({1, 1}, {3, 4}).edges());
  for (std::size_t k = 0; k < lat.num_vertices(); k++) {
    auto v = lat.vertex_at(k);
    bool endpoint = (v == Vertex{1, 1}) || (v == Vertex{3, 4});
    CHECK(symplectic_product(x, SignedPauli::z_on(n, lat.vertex_star(v).edges())) == (endpoint ? 1 : 0));
  }
  for (int k = 0; k < 5; k++) {
    CHECK(overlap_size(lat.primal_loop(Axis::x, 0), lat.dual_loop(Axis::y, k)) == 1);
  }
  auto d = degree(lat, lat.primal_loop(Axis::y, 2));
  CHECK(std::all_of(d.begin(), d.end(), [](int c) { return c == 0 || c == 2; }));
}

TEST_CASE("homotopic strings differ by closed cycles") {
  TorusLattice lat(7, 7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(0, 6);
  for (int t = 0; t < 50; t++) {
    Vertex a{c(rng), c(rng)}, b{c(rng), c(rng)};
    if (a == b) continue;
    auto diff = lat.string_between(a, b, Routing::row_first) ^ lat.string_between(a, b, Routing::column_first);
    auto d = degree(lat, diff);
    CHECK(std::all_of(d.begin(), d.end(), [](int k) { return k % 2 == 0; }));
  }
}

TEST_CASE("face boundaries meet every star evenly") {
  TorusLattice lat(5, 4);
  std::mt19937_64 rng(4);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 50; t++) {
    std::vector<Face> faces;
    for (std::size_t k = 0; k < lat.num_faces(); k++) {
      if (coin(rng)) faces.push_back(lat.vertex_at(k));
    }
    auto bd = lat.boundary(faces);
    for (std::size_t k = 0; k < lat.num_vertices(); k++) {
      CHECK(overlap_size(bd, lat.vertex_star(lat.vertex_at(k))) % 2 == 0);
    }
  }
}

TEST_CASE("markov partitions are disjoint covers at the stated separation") {
  TorusLattice t12(12, 12);
  auto p = t12.markov_partition({5, 5}, 2, 3);
  CHECK(p.A.size() + p.B.size() + p.C.size() == 288);
  CHECK(p.A.is_disjoint_from(p.B));
  CHECK(p.A.is_disjoint_from(p.C));
  CHECK(p.B.is_disjoint_from(p.C));
  CHECK((p.A | p.B | p.C) == t12.all_edges());
  for (int a = 1; a <= 3; a++) {
    for (int b = 1; a + 2 * b < 12; b++) {
      auto q = t12.markov_partition({0, 0}, a, b);
      CHECK(t12.region_distance(q.A, q.C) == b);
    }
  }
  CHECK_THROWS_AS(t12.markov_partition({0, 0}, 4, 4), ContractViolation);
}

TEST_CASE("levin-wen pieces tile the annulus") {
  TorusLattice lat(8, 8);
  auto p = lat.levin_wen_partition({4, 4}, 1, 3);
  auto ring = lat.annulus_region({4, 4}, 1, 3);
  CHECK((p.A | p.B | p.C).is_subset_of(ring));
  CHECK(p.A.is_disjoint_from(p.B));
  CHECK(p.A.is_disjoint_from(p.C));
  CHECK(p.B.is_disjoint_from(p.C));
  CHECK(lat.encircling_dual_loop({4, 4}, 1).is_subset_of(ring));
  CHECK(lat.shrink(p.A, {4, 4}, 0) == p.A);
  CHECK(lat.shrink(p.A, {4, 4}, 1).is_subset_of(p.A));
}

TEST_CASE("regions serialize as sorted edge arrays") {
  Region r({5, 1, 3}, "R");
  CHECK(r.edges() == std::vector<std::size_t>{1, 3, 5});
  CHECK(Region::from_json(r.to_json()) == r);
}
