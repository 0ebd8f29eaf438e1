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


#ifndef MIXEDPHASE_DENSE_HPP
#define MIXEDPHASE_DENSE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mixedphase/channels.hpp"
#include "mixedphase/clifford.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/pauli.hpp"
#include "mixedphase/report.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Eigenvalues below this are treated as zero in entropies.
inline constexpr double kEigenClip = 1e-10;
/// Support cutoff deciding when a relative entropy is infinite.
inline constexpr double kSupportCutoff = 1e-9;
inline constexpr std::size_t kMaxDenseQubits = 10;

/// Full 2^n matrix of a Pauli (qubit j is bit j of the basis index).
Matrix pauli_matrix(const SignedPauli &p);
/// Unitary of a sequence of elementary gates on k qubits.
Matrix unitary_from_ops(std::size_t k, const std::vector<ElementaryOp> &ops);
/// A unitary (defined up to global phase) realising the tableau.
Matrix unitary_from_tableau(const CliffordTableau &t);

/// Density matrix on n <= 10 qubits.
class DenseState {
 public:
  DenseState() = default;
  /// Validates Hermiticity, positivity and unit trace.
  DenseState(std::size_t num_qubits, Matrix rho);

  static DenseState pure(std::size_t num_qubits, const Eigen::VectorXcd &psi);
  static DenseState basis_state(std::size_t num_qubits, std::uint64_t bits);
  static DenseState maximally_mixed(std::size_t num_qubits);
  static DenseState from_stabilizer(const MixedStabilizerState &s);
  /// Normalised G G^dagger with a Gaussian d x rank matrix G.
  static DenseState random(std::size_t num_qubits, std::mt19937_64 &rng, std::size_t rank = 0);
  /// Skips validation (for results of validated channels).
  static DenseState unchecked(std::size_t num_qubits, Matrix rho);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t(rho_.rows()); }
  const Matrix &matrix() const { return rho_; }

 private:
  std::size_t n_ = 0;
  Matrix rho_;
};

/// Kraus operators acting on an ordered list of qubits of a larger system.
class KrausChannel {
 public:
  KrausChannel() = default;
  /// Checks sum K^dagger K = I to 1e-10.
  KrausChannel(std::vector<std::size_t> qubits, std::vector<Matrix> ops);

  static KrausChannel identity();
  static KrausChannel unitary(std::vector<std::size_t> qubits, const Matrix &u);
  /// (1-p) rho + p P rho P, acting on the support of P.
  static KrausChannel pauli_mix(const SignedPauli &p, double probability = 0.5);
  static KrausChannel reset(std::size_t e, bool target_one = false);
  static KrausChannel from_gate(const Gate &g);
  /// Random channel with `num_kraus` operators from a Haar-like isometry.
  static KrausChannel random(std::vector<std::size_t> qubits, std::size_t num_kraus, std::mt19937_64 &rng);

  const std::vector<std::size_t> &qubits() const { return qubits_; }
  const std::vector<Matrix> &ops() const { return ops_; }

 private:
  std::vector<std::size_t> qubits_;
  std::vector<Matrix> ops_;
  // Set for Pauli mixing; lets application skip the dense Kraus products.
  std::optional<std::pair<SignedPauli, double>> pauli_;

  friend Matrix apply_channel(const KrausChannel &ch, const Matrix &x);
  friend Matrix apply_dual(const KrausChannel &ch, const Matrix &o);
};

/// Channels applied first to last.
using DenseCircuit = std::vector<KrausChannel>;

DenseCircuit dense_circuit(const ChannelCircuit &c);

/// sum_i K_i X K_i^dagger on an arbitrary operator X of an n-qubit system.
Matrix apply_channel(const KrausChannel &ch, const Matrix &x);
Matrix apply_channel(const DenseCircuit &c, const Matrix &x);
/// Dual map sum_i K_i^dagger O K_i (circuits in reverse order).
Matrix apply_dual(const KrausChannel &ch, const Matrix &o);
Matrix apply_dual(const DenseCircuit &c, const Matrix &o);
DenseState apply(const KrausChannel &ch, const DenseState &s);
DenseState apply(const DenseCircuit &c, const DenseState &s);

Matrix partial_trace(const Matrix &rho, std::size_t num_qubits, const std::vector<std::size_t> &keep);
/// von Neumann entropy in nats.
double entropy(const Matrix &rho);
double entropy(const DenseState &s);
double region_entropy(const DenseState &s, const std::vector<std::size_t> &qubits);
double cmi(const DenseState &s, const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
           const std::vector<std::size_t> &c);
std::vector<std::size_t> qubits_of(const Region &region);
double trace_distance(const Matrix &a, const Matrix &b);

/// tr rho (log rho - log sigma); +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DenseState &rho, const DenseState &sigma);

/// S(Q') - S(RQ') for the square-root purification sum_j |j>_R sqrt(sigma)|j>_Q,
/// with R on the high qubits; n <= 5.
double coherent_information(const DenseState &sigma, const DenseCircuit &channel);

struct Lemma1Result {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  /// tr(O E[rho]); always reported.
  Complex lambda;
};
/// (1) O E[rho] = lambda E[rho], (2) E^dagger[O] rho = lambda rho,
/// (3) tr(E^dagger[O] rho) = lambda, each with |lambda| = 1, to `tol`.
Lemma1Result lemma1_check(const DenseState &rho, const Matrix &o, const DenseCircuit &channel, double tol = 1e-9);

struct Lemma1Instance {
  DenseState rho;
  Matrix o;
  DenseCircuit channel;
};
/// `constructed` instances force E[rho] into an eigenspace of O; the others are generic.
Lemma1Instance random_lemma1_instance(std::mt19937_64 &rng, std::size_t num_qubits, bool constructed);

/// On T(2,2): F = plaquette dephasing after reset. Checks F^dagger(Z_loop) = I and
/// that E after U_string after F is the replacement channel onto I/256, on random
/// states, all diagonal matrix units and seeded off-diagonal ones.
ExperimentReport dressed_channel_symmetry_check(std::uint64_t seed = 1, std::size_t random_states = 20,
                                                std::size_t off_diagonal_samples = 256);

}  // namespace mixedphase

#endif
