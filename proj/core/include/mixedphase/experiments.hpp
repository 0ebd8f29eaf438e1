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


#ifndef MIXEDPHASE_EXPERIMENTS_HPP
#define MIXEDPHASE_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedphase/channels.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/report.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase {

/// Winding-parity sector (s_x, s_y) of the loop state.
struct SectorLabel {
  int sx = 0;
  int sy = 0;

  /// Parses "00", "01", "10" or "11" (s_x first).
  static SectorLabel parse(const std::string &text);
  static std::array<SectorLabel, 4> all();
  std::string str() const;
  bool operator==(const SectorLabel &) const = default;
};

/// +P on every edge of `region`, P in {X, Y, Z}.
SignedPauli pauli_on(std::size_t num_qubits, const Region &region, char pauli);
/// P rho P for a Hermitian Pauli P.
MixedStabilizerState conjugate_by(const MixedStabilizerState &s, const SignedPauli &p);

/// Z on the straight dual loop that fixes the winding parity along `axis`.
SignedPauli winding_detector(const TorusLattice &lattice, Axis axis);
/// Primal loop whose X string flips the winding parity along `axis`.
Region winding_flip_loop(const TorusLattice &lattice, Axis axis);

/// Stars on all but the last vertex plus the two signed winding detectors.
MixedStabilizerState build_loop_state(const TorusLattice &lattice, SectorLabel sector = {});

/// X dephasing on every edge.
ChannelCircuit dephasing_circuit(const TorusLattice &lattice);
/// Reset of every edge to |0>.
ChannelCircuit reset_circuit(const TorusLattice &lattice);
/// Full-strength X mixing on every plaquette, greedily layered.
ChannelCircuit plaquette_mixing_circuit(const TorusLattice &lattice);

/// Markov-partition CMI over a grid of windows; returns the largest value.
struct MarkovScan {
  std::int64_t max_cmi = 0;
  std::size_t partitions = 0;
};
MarkovScan markov_scan(const MixedStabilizerState &s, const TorusLattice &lattice, const std::vector<Vertex> &centers,
                       int min_width, int min_side = 1);

struct TdOptions {
  std::uint64_t seed = 1;
  /// Test fixture: negate one star generator of the 00 sector.
  bool inject_sign_flip = false;
};
ExperimentReport td_report(const TorusLattice &lattice, const TdOptions &options = {});

using LogicalBits = std::array<int, 2>;
MixedStabilizerState memory_encode(const TorusLattice &lattice, LogicalBits bits);
std::optional<LogicalBits> memory_decode(const TorusLattice &lattice, const MixedStabilizerState &s);
/// Decodes a state of the form W[encode(b)] with detectors dual_apply(c, Z), c = W^-1.
std::optional<LogicalBits> memory_decode_dressed(const TorusLattice &lattice, const MixedStabilizerState &s,
                                                 const ChannelCircuit &c);

/// Eigenvalue of the dual loop of radius `radius` around v after the X string a->b.
std::optional<int> braiding_check(const TorusLattice &lattice, Vertex a, Vertex b, Vertex v,
                                  Routing routing = Routing::row_first, int radius = 0);

struct DressedBraiding {
  /// Eigenvalue of the dressed detector on the dressed-string state.
  std::optional<int> value;
  /// Dressed string on W[rho] equals W applied to the bare-string state.
  bool sides_agree = false;
};
/// sigma = W[rho_cl]; string dressed by C = W^-1; detector dual_apply(C, Z_loop).
DressedBraiding dressed_braiding_check(const TorusLattice &lattice, const ChannelCircuit &w, Vertex a, Vertex b,
                                       const Region &detector_loop);

struct AnnulusOptions {
  Vertex center;
  int r_in = 1;
  int r_out = 3;
  /// Clifford deformation W; empty means sigma = rho_cl.
  std::optional<ChannelCircuit> deformation;
};
/// Starting from `base` (the loop state unless given), compares restrictions to
/// the annulus before and after a dressed string from the hole to the outside.
ExperimentReport annulus_degeneracy(const TorusLattice &lattice, const AnnulusOptions &options,
                                    const std::optional<MixedStabilizerState> &base = std::nullopt);

EntropyBits topo_entropy(const MixedStabilizerState &s, const TorusLattice &lattice, Vertex center, int r_in,
                         int r_out);

ExperimentReport two_way_path_demo(const TorusLattice &lattice);

}  // namespace mixedphase

#endif
