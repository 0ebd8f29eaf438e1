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

#ifndef MIXEDPHASE_CHANNELS_HPP
#define MIXEDPHASE_CHANNELS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixedphase/clifford.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/pauli.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase {

class Gate {
 public:
  enum class Kind : std::uint8_t { clifford, pauli_mix, reset, partial_pauli_mix };

  /// Clifford unitary whose tableau acts on `qubits` in the given order.
  static Gate clifford(std::vector<std::size_t> qubits, CliffordTableau tableau);
  /// rho -> (rho + P rho P) / 2.
  static Gate pauli_mix(SignedPauli p);
  /// Replace qubit e by |0> (or |1> when target_one).
  static Gate reset(std::size_t num_qubits, std::size_t e, bool target_one = false);
  /// rho -> (1-p) rho + p P rho P; oracle engines only.
  static Gate partial_pauli_mix(SignedPauli p, double probability);

  Kind kind() const { return kind_; }
  std::size_t num_qubits() const { return n_; }
  /// Qubits acted on, sorted.
  const std::vector<std::size_t> &support() const { return support_; }
  /// Clifford only: the tableau's qubit order.
  const std::vector<std::size_t> &qubits() const { return qubits_; }
  const CliffordTableau &tableau() const { return tableau_; }
  const SignedPauli &pauli() const { return pauli_; }
  double probability() const { return probability_; }
  bool target_one() const { return target_one_; }
  std::size_t reset_qubit() const { return support_.at(0); }

  /// Inverse of a Clifford gate.
  Gate inverse() const;
  std::string kind_name() const;

 private:
  Kind kind_ = Kind::pauli_mix;
  std::size_t n_ = 0;
  std::vector<std::size_t> support_;
  std::vector<std::size_t> qubits_;
  CliffordTableau tableau_;
  SignedPauli pauli_;
  double probability_ = 0.5;
  bool target_one_ = false;
};

/// Ordered layers of gates; supports within a layer are pairwise disjoint.
class ChannelCircuit {
 public:
  ChannelCircuit() = default;
  explicit ChannelCircuit(std::size_t num_qubits) : n_(num_qubits) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t depth() const { return layers_.size(); }
  std::size_t num_gates() const;
  const std::vector<std::vector<Gate>> &layers() const { return layers_; }

  /// Appends a layer after checking disjointness.
  void add_layer(std::vector<Gate> layer);
  /// Appends all layers of `next` (applied after this circuit).
  void append(const ChannelCircuit &next);
  bool is_clifford() const;
  /// Reversed layers of inverted Clifford gates.
  ChannelCircuit inverse() const;
  Region support() const;

  /// JSON: {"n": .., "seed": .., "layers": [[{kind, qubits, parameters}]]}.
  std::string to_json(std::optional<std::uint64_t> seed = std::nullopt) const;
  static ChannelCircuit from_json(const std::string &text);

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Gate>> layers_;
};

MixedStabilizerState apply_pauli_mix(const MixedStabilizerState &s, const SignedPauli &p);
MixedStabilizerState apply_reset(const MixedStabilizerState &s, std::size_t e, bool target_one = false);
MixedStabilizerState apply_clifford(const MixedStabilizerState &s, const std::vector<std::size_t> &qubits,
                                    const CliffordTableau &tableau);
MixedStabilizerState apply_gate(const MixedStabilizerState &s, const Gate &g);
MixedStabilizerState apply_circuit(const MixedStabilizerState &s, const ChannelCircuit &c);

/// Windows probed after each gate-subset prefix.
struct MarkovProbeConfig {
  std::vector<Vertex> centers;
  int a_side = 1;
  std::vector<int> widths;
  /// Random gate subsets per layer in addition to single gates and prefixes.
  std::size_t random_subsets = 4;
  std::uint64_t seed = 0;
};

struct MarkovProbe {
  std::size_t layer = 0;
  /// "single:<k>", "prefix:<k>" or "random:<k>".
  std::string subset;
  /// Largest (over windows) smallest width with zero CMI; nullopt if some
  /// window never reaches zero on the configured width grid.
  std::optional<int> markov_width;
};

struct TracedResult {
  MixedStabilizerState state;
  std::optional<int> input_width;
  std::vector<MarkovProbe> probes;
};

/// Smallest width on the grid at which every window has zero CMI.
std::optional<int> markov_width(const MixedStabilizerState &s, const TorusLattice &lattice,
                                const MarkovProbeConfig &cfg);
TracedResult apply_circuit_traced(const MixedStabilizerState &s, const TorusLattice &lattice,
                                  const ChannelCircuit &c, const MarkovProbeConfig &cfg);

/// Gates touched by the forward light cone of `region`'s halo go to the first
/// circuit (C_A), the rest to the second (C_B); C = C_A after C_B.
std::pair<ChannelCircuit, ChannelCircuit> partition_circuit(const TorusLattice &lattice, const ChannelCircuit &c,
                                                            const Region &region);
/// C~_X D C_X where C_X is the backward light cone of D's support in C.
ChannelCircuit dress_operation(const ChannelCircuit &c, const ChannelCircuit &d);

struct ScaledPauli {
  double coefficient = 1.0;
  SignedPauli word;
};

/// Heisenberg-picture action of the dual map.
ScaledPauli dual_apply(const Gate &g, const ScaledPauli &o);
ScaledPauli dual_apply(const Gate &g, const SignedPauli &o);
ScaledPauli dual_apply(const ChannelCircuit &c, const SignedPauli &o);

/// Depth-`depth` brickwork of seeded random two-qubit Cliffords pairing each
/// vertex's horizontal edge with a neighbouring vertical edge.
ChannelCircuit random_clifford_circuit(const TorusLattice &lattice, std::size_t depth, std::uint64_t seed);
/// X (or Z) on every edge of `region`, as one layer of single-qubit Cliffords.
ChannelCircuit pauli_string_circuit(std::size_t num_qubits, const Region &region, char pauli = 'X');

}  // namespace mixedphase

#endif
