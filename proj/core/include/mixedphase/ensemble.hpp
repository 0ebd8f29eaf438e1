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


#ifndef MIXEDPHASE_ENSEMBLE_HPP
#define MIXEDPHASE_ENSEMBLE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mixedphase/experiments.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase {

/// Thrown when a distribution would exceed its support cap.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit mask of a region on at most 64 edges.
std::uint64_t region_mask(const Region &region, std::size_t num_bits);

/// Sparse probability distribution over bitstrings of at most 64 bits.
class ClassicalEnsemble {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 24;

  explicit ClassicalEnsemble(std::size_t num_bits = 0, std::size_t cap = kDefaultCap);
  static ClassicalEnsemble point(std::size_t num_bits, std::uint64_t bits);
  static ClassicalEnsemble uniform(std::size_t num_bits, const std::vector<std::uint64_t> &support,
                                   std::size_t cap = kDefaultCap);

  std::size_t num_bits() const { return n_; }
  std::size_t cap() const { return cap_; }
  std::size_t support_size() const { return p_.size(); }
  const std::unordered_map<std::uint64_t, double> &probabilities() const { return p_; }
  double probability(std::uint64_t bits) const;
  double total_probability() const;
  /// Adds weight to a bitstring (no renormalisation).
  void add(std::uint64_t bits, double weight);

  /// With probability p, XOR every sample with `mask`.
  ClassicalEnsemble flip_mix(std::uint64_t mask, double p) const;
  ClassicalEnsemble x_mix(std::size_t e, double p) const;
  ClassicalEnsemble plaquette_mix(const TorusLattice &lattice, Face f, double q) const;
  /// Marginalise bit e, then pin it to 0 (or 1).
  ClassicalEnsemble reset(std::size_t e, bool target_one = false) const;
  /// Deterministic XOR with `mask` (X conjugation).
  ClassicalEnsemble flip(std::uint64_t mask) const;

  /// Shannon entropy of the marginal on `region`, in nats.
  double marginal_entropy(const Region &region) const;
  double cmi(const Region &a, const Region &b, const Region &c) const;
  /// E[(-1)^{parity of the masked bits}].
  double expectation_z(const Region &region) const;

  void save_binary(const std::string &path) const;
  static ClassicalEnsemble load_binary(const std::string &path);

 private:
  double entropy_of_mask(std::uint64_t mask) const;

  std::size_t n_ = 0;
  std::size_t cap_ = kDefaultCap;
  std::unordered_map<std::uint64_t, double> p_;
};

/// sum_s p1(s) p2(s).
double inner_product(const ClassicalEnsemble &a, const ClassicalEnsemble &b);

/// Uniform distribution over closed-loop configurations with the given winding
/// parities. Brute-force enumeration when the lattice has at most 26 edges,
/// otherwise the span of plaquette boundaries shifted by winding loops.
ClassicalEnsemble build_loop_ensemble(const TorusLattice &lattice, SectorLabel sector = {},
                                      std::size_t cap = ClassicalEnsemble::kDefaultCap);
/// Boundaries of face subsets weighted by q^|s| (1-q)^(N_f - |s|); at most 24 faces.
ClassicalEnsemble build_tr_to_cl(const TorusLattice &lattice, double q,
                                 std::size_t cap = ClassicalEnsemble::kDefaultCap);
/// Distribution of a Z-diagonal stabilizer state (every generator Z-type).
ClassicalEnsemble ensemble_from_stabilizer(const MixedStabilizerState &s,
                                           std::size_t cap = ClassicalEnsemble::kDefaultCap);

struct MarkovSweepRow {
  double p = 0.0;
  int width = 0;
  double cmi = 0.0;
};
/// X dephasing of strength p on every edge of the loop ensemble, then the
/// Markov-partition CMI at each feasible width.
std::vector<MarkovSweepRow> markov_sweep_partial_dephasing(const TorusLattice &lattice,
                                                           const std::vector<double> &p_grid,
                                                           const std::vector<int> &widths, int a_side = 1,
                                                           Vertex center = {0, 0});

/// Loads the ensemble cached under `key` in $MIXEDPHASE_CACHE_DIR, or builds
/// (and stores) it. Without the variable this just calls `build`.
ClassicalEnsemble cached_ensemble(const std::string &key, const std::function<ClassicalEnsemble()> &build);

}  // namespace mixedphase

#endif
