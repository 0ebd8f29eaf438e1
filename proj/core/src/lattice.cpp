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

#include "mixedphase/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "json.hpp"
#include "mixedphase/pauli.hpp"

namespace mixedphase {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int cyclic_offset(int d, int L) {
  d %= L;
  if (d < 0) d += L;
  // Map to (-L/2, L/2].
  if (2 * d > L) d -= L;
  return d;
}

}  // namespace

Region::Region(std::vector<std::size_t> edges, std::string label)
    : edges_(sorted_unique(std::move(edges))), label_(std::move(label)) {}

bool Region::contains(std::size_t e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Region::is_subset_of(const Region &other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

bool Region::is_disjoint_from(const Region &other) const { return (*this & other).empty(); }

BitVec Region::mask(std::size_t num_edges) const {
  return BitVec::from_indices(num_edges, edges_);
}

Region operator|(const Region &a, const Region &b) {
  std::vector<std::size_t> out;
  std::set_union(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(out));
  return Region(std::move(out));
}

Region operator&(const Region &a, const Region &b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                        std::back_inserter(out));
  return Region(std::move(out));
}

Region operator-(const Region &a, const Region &b) {
  std::vector<std::size_t> out;
  std::set_difference(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(out));
  return Region(std::move(out));
}

Region operator^(const Region &a, const Region &b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                                std::back_inserter(out));
  return Region(std::move(out));
}

std::string Region::to_json() const { return nlohmann::json(edges_).dump(); }

Region Region::from_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("region JSON must be an array of edge indices");
  return Region(j.get<std::vector<std::size_t>>());
}

TorusLattice::TorusLattice(int Lx, int Ly) : Lx_(Lx), Ly_(Ly) {
  if (Lx < 2 || Ly < 2) {
    throw ContractViolation("torus sides must be at least 2");
  }
}

void TorusLattice::check_vertex(Vertex v) const {
  if (v.i < 0 || v.i >= Ly_ || v.j < 0 || v.j >= Lx_) {
    throw ContractViolation("vertex out of range");
  }
}

Vertex TorusLattice::wrap(int i, int j) const {
  i %= Ly_;
  j %= Lx_;
  if (i < 0) i += Ly_;
  if (j < 0) j += Lx_;
  return {i, j};
}

std::size_t TorusLattice::vertex_index(Vertex v) const {
  check_vertex(v);
  return std::size_t(v.i) * std::size_t(Lx_) + std::size_t(v.j);
}

Vertex TorusLattice::vertex_at(std::size_t index) const {
  if (index >= num_vertices()) throw ContractViolation("vertex index out of range");
  return {int(index / std::size_t(Lx_)), int(index % std::size_t(Lx_))};
}

std::size_t TorusLattice::edge_index(Vertex v, Dir d) const {
  return 2 * vertex_index(wrap(v.i, v.j)) + std::size_t(d);
}

std::pair<Vertex, Dir> TorusLattice::edge_at(std::size_t e) const {
  if (e >= num_edges()) throw ContractViolation("edge index out of range");
  return {vertex_at(e / 2), Dir(e % 2)};
}

std::array<Vertex, 2> TorusLattice::endpoints(std::size_t e) const {
  auto [v, d] = edge_at(e);
  if (d == Dir::horizontal) return {v, wrap(v.i, v.j + 1)};
  return {v, wrap(v.i + 1, v.j)};
}

std::array<Face, 2> TorusLattice::faces_of(std::size_t e) const {
  auto [v, d] = edge_at(e);
  if (d == Dir::horizontal) return {wrap(v.i - 1, v.j), v};
  return {wrap(v.i, v.j - 1), v};
}

std::pair<int, int> TorusLattice::offset(Vertex a, Vertex b) const {
  return {cyclic_offset(b.i - a.i, Ly_), cyclic_offset(b.j - a.j, Lx_)};
}

int TorusLattice::chebyshev(Vertex a, Vertex b) const {
  auto [di, dj] = offset(a, b);
  return std::max(std::abs(di), std::abs(dj));
}

int TorusLattice::region_distance(const Region &a, const Region &b) const {
  if (a.empty() || b.empty()) throw ContractViolation("distance to an empty region");
  std::set<std::size_t> va, vb;
  for (auto e : a.edges()) {
    for (auto v : endpoints(e)) va.insert(vertex_index(v));
  }
  for (auto e : b.edges()) {
    for (auto v : endpoints(e)) vb.insert(vertex_index(v));
  }
  int best = Lx_ + Ly_;
  for (auto x : va) {
    for (auto y : vb) best = std::min(best, chebyshev(vertex_at(x), vertex_at(y)));
  }
  return best;
}

Region TorusLattice::vertex_star(Vertex v) const {
  check_vertex(v);
  return Region({edge_index(v, Dir::horizontal), edge_index(wrap(v.i, v.j - 1), Dir::horizontal),
                 edge_index(v, Dir::vertical), edge_index(wrap(v.i - 1, v.j), Dir::vertical)},
                "star");
}

Region TorusLattice::plaquette(Face f) const {
  check_vertex(f);
  return Region({edge_index(f, Dir::horizontal), edge_index(wrap(f.i + 1, f.j), Dir::horizontal),
                 edge_index(f, Dir::vertical), edge_index(wrap(f.i, f.j + 1), Dir::vertical)},
                "plaquette");
}

Region TorusLattice::dual_loop(Axis axis, int off) const {
  std::vector<std::size_t> out;
  if (axis == Axis::x) {
    if (off < 0 || off >= Ly_) throw ContractViolation("dual loop offset out of range");
    for (int j = 0; j < Lx_; j++) out.push_back(edge_index({off, j}, Dir::vertical));
  } else {
    if (off < 0 || off >= Lx_) throw ContractViolation("dual loop offset out of range");
    for (int i = 0; i < Ly_; i++) out.push_back(edge_index({i, off}, Dir::horizontal));
  }
  return Region(std::move(out), axis == Axis::x ? "dual_loop_x" : "dual_loop_y");
}

Region TorusLattice::primal_loop(Axis axis, int off) const {
  std::vector<std::size_t> out;
  if (axis == Axis::x) {
    if (off < 0 || off >= Ly_) throw ContractViolation("primal loop offset out of range");
    for (int j = 0; j < Lx_; j++) out.push_back(edge_index({off, j}, Dir::horizontal));
  } else {
    if (off < 0 || off >= Lx_) throw ContractViolation("primal loop offset out of range");
    for (int i = 0; i < Ly_; i++) out.push_back(edge_index({i, off}, Dir::vertical));
  }
  return Region(std::move(out), axis == Axis::x ? "primal_loop_x" : "primal_loop_y");
}

Region TorusLattice::string_between(Vertex a, Vertex b, Routing routing) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw ContractViolation("string endpoints coincide");
  auto [di, dj] = offset(a, b);
  std::vector<std::size_t> out;
  auto walk_row = [&](int row, int j0, int steps) {
    int s = steps >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(steps); k++) {
      int j = j0 + k * s;
      out.push_back(edge_index(wrap(row, s > 0 ? j : j - 1), Dir::horizontal));
    }
  };
  auto walk_col = [&](int col, int i0, int steps) {
    int s = steps >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(steps); k++) {
      int i = i0 + k * s;
      out.push_back(edge_index(wrap(s > 0 ? i : i - 1, col), Dir::vertical));
    }
  };
  if (routing == Routing::row_first) {
    walk_row(a.i, a.j, dj);
    walk_col(b.j, a.i, di);
  } else {
    walk_col(a.j, a.i, di);
    walk_row(b.i, a.j, dj);
  }
  return Region(std::move(out), "string");
}

Region TorusLattice::rectangle(const Rect &r) const {
  if (r.h < 0 || r.w < 0 || r.h >= Ly_ || r.w >= Lx_) throw ContractViolation("rectangle does not fit");
  std::vector<std::size_t> out;
  for (int di = 0; di <= r.h; di++) {
    for (int dj = 0; dj <= r.w; dj++) {
      Vertex v = wrap(r.corner.i + di, r.corner.j + dj);
      if (dj < r.w) out.push_back(edge_index(v, Dir::horizontal));
      if (di < r.h) out.push_back(edge_index(v, Dir::vertical));
    }
  }
  return Region(std::move(out), "rectangle");
}

Region TorusLattice::rectangle_boundary(const Rect &r) const {
  if (r.h < 1 || r.w < 1 || r.h >= Ly_ || r.w >= Lx_) throw ContractViolation("rectangle does not fit");
  std::vector<Face> faces;
  for (int di = 0; di < r.h; di++) {
    for (int dj = 0; dj < r.w; dj++) faces.push_back(wrap(r.corner.i + di, r.corner.j + dj));
  }
  return boundary(faces).set_label("rectangle_boundary");
}

Region TorusLattice::coboundary(const std::vector<Vertex> &vertices) const {
  std::vector<char> in(num_vertices(), 0);
  for (auto v : vertices) in[vertex_index(v)] = 1;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < num_edges(); e++) {
    auto ends = endpoints(e);
    if (in[vertex_index(ends[0])] != in[vertex_index(ends[1])]) out.push_back(e);
  }
  return Region(std::move(out), "coboundary");
}

Region TorusLattice::encircling_dual_loop(Vertex v, int r) const {
  check_vertex(v);
  if (r < 0 || 2 * r + 1 >= std::min(Lx_, Ly_)) throw ContractViolation("encircling loop does not fit");
  std::vector<Vertex> ball;
  for (int di = -r; di <= r; di++) {
    for (int dj = -r; dj <= r; dj++) ball.push_back(wrap(v.i + di, v.j + dj));
  }
  return coboundary(ball).set_label("encircling_dual_loop");
}

Region TorusLattice::boundary(const std::vector<Face> &faces) const {
  Region acc;
  for (auto f : faces) acc = acc ^ plaquette(f);
  return acc.set_label("boundary");
}

Region TorusLattice::neighborhood(const Region &region, int r) const {
  if (r <= 0) return region;
  std::vector<Vertex> verts;
  for (auto e : region.edges()) {
    for (auto v : endpoints(e)) verts.push_back(v);
  }
  std::vector<std::size_t> out(region.edges());
  for (std::size_t e = 0; e < num_edges(); e++) {
    bool near = false;
    for (auto w : endpoints(e)) {
      for (auto v : verts) {
        if (chebyshev(v, w) < r) {
          near = true;
          break;
        }
      }
      if (near) break;
    }
    if (near) out.push_back(e);
  }
  return Region(std::move(out), region.label());
}

Region TorusLattice::all_edges() const {
  std::vector<std::size_t> out(num_edges());
  for (std::size_t e = 0; e < out.size(); e++) out[e] = e;
  return Region(std::move(out), "all");
}

Partition TorusLattice::markov_partition(Vertex center, int a_side, int b_width) const {
  check_vertex(center);
  if (a_side < 0 || b_width < 0 || a_side + 2 * b_width >= std::min(Lx_, Ly_)) {
    throw ContractViolation("markov partition does not fit on the lattice");
  }
  Vertex corner = wrap(center.i - a_side / 2, center.j - a_side / 2);
  Region A = rectangle({corner, a_side, a_side});
  Region AB = rectangle({wrap(corner.i - b_width, corner.j - b_width), a_side + 2 * b_width, a_side + 2 * b_width});
  Partition p;
  p.A = A.set_label("A");
  p.B = (AB - A).set_label("B");
  p.C = (all_edges() - AB).set_label("C");
  return p;
}

Region TorusLattice::annulus_region(Vertex center, int r_in, int r_out) const {
  check_vertex(center);
  if (r_in < 0 || r_out < r_in || 2 * r_out >= std::min(Lx_, Ly_)) {
    throw ContractViolation("annulus does not fit on the lattice");
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < num_edges(); e++) {
    bool inside = true;
    for (auto v : endpoints(e)) {
      int d = chebyshev(center, v);
      if (d < r_in || d > r_out) inside = false;
    }
    if (inside) out.push_back(e);
  }
  return Region(std::move(out), "annulus");
}

Partition TorusLattice::levin_wen_partition(Vertex center, int r_in, int r_out) const {
  if (r_in < 1) throw ContractViolation("Levin-Wen partition needs a hole (r_in >= 1)");
  Region ring = annulus_region(center, r_in, r_out);
  std::vector<std::size_t> a, b, c;
  for (auto e : ring.edges()) {
    auto ends = endpoints(e);
    auto [i0, j0] = offset(center, ends[0]);
    auto [i1, j1] = offset(center, ends[1]);
    // Midpoint in half-lattice units.
    int my = i0 + i1;
    int mx = j0 + j1;
    if (mx < -std::abs(my)) {
      a.push_back(e);
    } else if (mx > std::abs(my)) {
      c.push_back(e);
    } else {
      b.push_back(e);
    }
  }
  return {Region(std::move(a), "A"), Region(std::move(b), "B"), Region(std::move(c), "C")};
}

Region TorusLattice::shrink(const Region &a, Vertex center, int t) const {
  if (t < 0) throw ContractViolation("negative shrink width");
  if (a.empty() || t == 0) return a;
  int lo = Lx_ + Ly_;
  int hi = -1;
  for (auto e : a.edges()) {
    for (auto v : endpoints(e)) {
      int d = chebyshev(center, v);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  std::vector<std::size_t> out;
  for (auto e : a.edges()) {
    bool keep = true;
    for (auto v : endpoints(e)) {
      int d = chebyshev(center, v);
      if (d < lo + t || d > hi - t) keep = false;
    }
    if (keep) out.push_back(e);
  }
  return Region(std::move(out), a.label());
}

std::vector<Rect> TorusLattice::rectangle_family(std::uint64_t seed, std::size_t sample) const {
  int max_side = std::min(Lx_, Ly_) - 2;
  std::vector<Rect> out;
  if (max_side < 1) return out;
  if (std::max(Lx_, Ly_) <= 6) {
    for (int i = 0; i < Ly_; i++) {
      for (int j = 0; j < Lx_; j++) {
        for (int h = 1; h <= max_side; h++) {
          for (int w = 1; w <= max_side; w++) out.push_back({{i, j}, h, w});
        }
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ri(0, Ly_ - 1), rj(0, Lx_ - 1), side(1, max_side);
  for (std::size_t k = 0; k < sample; k++) {
    Rect r;
    r.corner = {ri(rng), rj(rng)};
    r.h = side(rng);
    r.w = side(rng);
    out.push_back(r);
  }
  return out;
}

}  // namespace mixedphase
