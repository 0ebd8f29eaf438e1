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

#ifndef MIXEDPHASE_LATTICE_HPP
#define MIXEDPHASE_LATTICE_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mixedphase/bitvec.hpp"

namespace mixedphase {

/// Lattice site (row i, column j). Faces use the same coordinates: face (i,j)
/// has vertex (i,j) as its top-left corner.
struct Vertex {
  int i = 0;
  int j = 0;
  bool operator==(const Vertex &) const = default;
};
using Face = Vertex;

enum class Dir : std::uint8_t { horizontal = 0, vertical = 1 };
enum class Axis : std::uint8_t { x, y };
/// Row-first strings walk along the starting row before turning.
enum class Routing : std::uint8_t { row_first, column_first };

/// Sorted set of edge indices with a free-text label.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<std::size_t> edges, std::string label = "");

  const std::vector<std::size_t> &edges() const { return edges_; }
  const std::string &label() const { return label_; }
  Region &set_label(std::string label) {
    label_ = std::move(label);
    return *this;
  }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(std::size_t e) const;
  bool is_subset_of(const Region &other) const;
  bool is_disjoint_from(const Region &other) const;
  BitVec mask(std::size_t num_edges) const;

  friend Region operator|(const Region &a, const Region &b);
  friend Region operator&(const Region &a, const Region &b);
  friend Region operator-(const Region &a, const Region &b);
  /// Symmetric difference.
  friend Region operator^(const Region &a, const Region &b);
  bool operator==(const Region &other) const { return edges_ == other.edges_; }

  /// JSON array of edge indices.
  std::string to_json() const;
  static Region from_json(const std::string &text);

 private:
  std::vector<std::size_t> edges_;
  std::string label_;
};

struct Partition {
  Region A;
  Region B;
  Region C;
};

/// Axis-aligned vertex box: rows [i0, i0+h], columns [j0, j0+w] (wrapping).
struct Rect {
  Vertex corner;
  int h = 0;
  int w = 0;
};

/// Lx x Ly square lattice on the torus with one qubit per edge.
/// Edge index = 2*(i*Lx + j) + dir, where the horizontal edge of (i,j) runs to
/// (i, j+1) and the vertical edge runs to (i+1, j).
class TorusLattice {
 public:
  TorusLattice(int Lx, int Ly);

  int Lx() const { return Lx_; }
  int Ly() const { return Ly_; }
  std::size_t num_edges() const { return 2 * std::size_t(Lx_) * std::size_t(Ly_); }
  std::size_t num_vertices() const { return std::size_t(Lx_) * std::size_t(Ly_); }
  std::size_t num_faces() const { return num_vertices(); }

  Vertex wrap(int i, int j) const;
  std::size_t vertex_index(Vertex v) const;
  Vertex vertex_at(std::size_t index) const;
  std::size_t edge_index(Vertex v, Dir d) const;
  std::pair<Vertex, Dir> edge_at(std::size_t e) const;
  std::array<Vertex, 2> endpoints(std::size_t e) const;
  /// The two faces whose boundary contains e.
  std::array<Face, 2> faces_of(std::size_t e) const;

  /// Signed offset of b relative to a, each component in (-L/2, L/2].
  std::pair<int, int> offset(Vertex a, Vertex b) const;
  int chebyshev(Vertex a, Vertex b) const;
  /// Minimum Chebyshev distance between endpoints of edges in a and b.
  int region_distance(const Region &a, const Region &b) const;

  Region vertex_star(Vertex v) const;
  Region plaquette(Face f) const;
  Region dual_loop(Axis axis, int offset) const;
  Region primal_loop(Axis axis, int offset) const;
  Region string_between(Vertex a, Vertex b, Routing routing = Routing::row_first) const;
  /// Edges with both endpoints inside the vertex box.
  Region rectangle(const Rect &r) const;
  /// Closed primal cycle around the box.
  Region rectangle_boundary(const Rect &r) const;
  /// Edges with exactly one endpoint in the given vertex set (its coboundary).
  Region coboundary(const std::vector<Vertex> &vertices) const;
  /// Dual loop around the Chebyshev ball of radius r at v; r = 0 gives the star.
  Region encircling_dual_loop(Vertex v, int r) const;
  /// Boundary (mod 2) of a face set.
  Region boundary(const std::vector<Face> &faces) const;
  /// region plus every edge within vertex distance < r of it.
  Region neighborhood(const Region &region, int r) const;
  Region all_edges() const;

  /// Square window of a_side x a_side faces whose top-left vertex is
  /// center - a_side/2; B = edges within distance b_width of it.
  Partition markov_partition(Vertex center, int a_side, int b_width) const;
  /// Edges whose endpoints both have ring distance from center in [r_in, r_out].
  Region annulus_region(Vertex center, int r_in, int r_out) const;
  /// Annulus split into a left sector A, a right sector C and the separating
  /// top and bottom sectors B.
  Partition levin_wen_partition(Vertex center, int r_in, int r_out) const;
  /// Removes a t-thick radial rim from both sides of an annular region.
  Region shrink(const Region &a, Vertex center, int t) const;

  /// Rectangles with both sides in [1, min(Lx,Ly)-2]: every one when the
  /// lattice is at most 6 wide, otherwise `sample` seeded draws.
  std::vector<Rect> rectangle_family(std::uint64_t seed, std::size_t sample = 200) const;

 private:
  void check_vertex(Vertex v) const;

  int Lx_;
  int Ly_;
};

}  // namespace mixedphase

#endif
