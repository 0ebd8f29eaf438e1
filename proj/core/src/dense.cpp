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


#include "mixedphase/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "mixedphase/experiments.hpp"

namespace mixedphase {

namespace {

constexpr double kValidationTol = 1e-10;

Complex i_pow(int k) {
  switch (k & 3) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::size_t dim_of(std::size_t n) { return std::size_t{1} << n; }

/// (K on `qubits`) * x for a 2^n x m operand.
Matrix left_apply(const Matrix &k, const std::vector<std::size_t> &qubits, const Matrix &x) {
  std::size_t d = std::size_t(x.rows());
  std::size_t kd = std::size_t(k.rows());
  std::vector<std::size_t> off(kd, 0);
  std::size_t qmask = 0;
  for (std::size_t j = 0; j < qubits.size(); j++) {
    if ((std::size_t{1} << qubits[j]) >= d) throw ContractViolation("channel qubit outside the system");
    qmask |= std::size_t{1} << qubits[j];
  }
  for (std::size_t a = 0; a < kd; a++) {
    for (std::size_t j = 0; j < qubits.size(); j++) {
      if ((a >> j) & 1) off[a] |= std::size_t{1} << qubits[j];
    }
  }
  Matrix out(x.rows(), x.cols());
  Matrix block(kd, x.cols());
  for (std::size_t r = 0; r < d; r++) {
    if (r & qmask) continue;
    for (std::size_t a = 0; a < kd; a++) block.row(Eigen::Index(a)) = x.row(Eigen::Index(r | off[a]));
    Matrix res = k * block;
    for (std::size_t a = 0; a < kd; a++) out.row(Eigen::Index(r | off[a])) = res.row(Eigen::Index(a));
  }
  return out;
}

/// P * x using the sparse action of a Pauli.
Matrix pauli_left(const SignedPauli &p, const Matrix &x) {
  std::size_t d = std::size_t(x.rows());
  std::uint64_t xm = 0, zm = 0;
  for (auto q : p.x().indices()) xm |= std::uint64_t{1} << q;
  for (auto q : p.z().indices()) zm |= std::uint64_t{1} << q;
  if ((xm | zm) >= d) throw ContractViolation("Pauli acts outside the system");
  Complex base = i_pow(p.phase() + std::popcount(xm & zm));
  Matrix out(x.rows(), x.cols());
  for (std::size_t b = 0; b < d; b++) {
    Complex c = std::popcount(b & zm) & 1 ? -base : base;
    out.row(Eigen::Index(b ^ xm)) = c * x.row(Eigen::Index(b));
  }
  return out;
}

Matrix gaussian(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); i++) {
    for (Eigen::Index j = 0; j < m.cols(); j++) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

Matrix isometry(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
  Matrix g = gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(Eigen::Index(rows), Eigen::Index(cols));
}

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

SignedPauli random_pauli(std::size_t n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> letter(0, 3);
  for (;;) {
    SignedPauli p(n);
    for (std::size_t q = 0; q < n; q++) {
      int l = letter(rng);
      p.x().set(q, l == 1 || l == 2);
      p.z().set(q, l == 2 || l == 3);
    }
    if (!p.is_identity_word()) return p;
  }
}

}  // namespace

Matrix pauli_matrix(const SignedPauli &p) {
  std::size_t n = p.num_qubits();
  if (n > kMaxDenseQubits) throw ContractViolation("dense Pauli limited to 10 qubits");
  return pauli_left(p, Matrix::Identity(Eigen::Index(dim_of(n)), Eigen::Index(dim_of(n))));
}

Matrix unitary_from_ops(std::size_t k, const std::vector<ElementaryOp> &ops) {
  std::size_t d = dim_of(k);
  Matrix u = Matrix::Identity(Eigen::Index(d), Eigen::Index(d));
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto &op : ops) {
    Matrix g(2, 2);
    switch (op.kind) {
      case ElementaryOp::Kind::H:
        g << r, r, r, -r;
        break;
      case ElementaryOp::Kind::S:
        g << 1, 0, 0, Complex(0, 1);
        break;
      case ElementaryOp::Kind::SDAG:
        g << 1, 0, 0, Complex(0, -1);
        break;
      case ElementaryOp::Kind::X:
        g << 0, 1, 1, 0;
        break;
      case ElementaryOp::Kind::Y:
        g << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
      case ElementaryOp::Kind::Z:
        g << 1, 0, 0, -1;
        break;
      case ElementaryOp::Kind::CX: {
        // Local index: bit 0 control, bit 1 target.
        Matrix cx = Matrix::Zero(4, 4);
        cx(0, 0) = cx(2, 2) = 1;
        cx(3, 1) = cx(1, 3) = 1;
        u = left_apply(cx, {op.q0, op.q1}, u);
        continue;
      }
    }
    u = left_apply(g, {op.q0}, u);
  }
  return u;
}

Matrix unitary_from_tableau(const CliffordTableau &t) {
  std::size_t k = t.num_qubits();
  std::size_t d = dim_of(k);
  // Choi matrix (1/d) sum_P P^T (x) image(P) = |U>><<U|.
  Matrix j = Matrix::Zero(Eigen::Index(d * d), Eigen::Index(d * d));
  for (std::uint64_t xm = 0; xm < d; xm++) {
    for (std::uint64_t zm = 0; zm < d; zm++) {
      SignedPauli p(k);
      for (std::size_t q = 0; q < k; q++) {
        p.x().set(q, (xm >> q) & 1);
        p.z().set(q, (zm >> q) & 1);
      }
      Matrix pt = pauli_matrix(p).transpose();
      Matrix img = pauli_matrix(t.conjugate(p));
      for (std::size_t a = 0; a < d; a++) {
        for (std::size_t b = 0; b < d; b++) {
          Complex c = pt(Eigen::Index(a), Eigen::Index(b));
          if (c == Complex(0, 0)) continue;
          j.block(Eigen::Index(a * d), Eigen::Index(b * d), Eigen::Index(d), Eigen::Index(d)) += c * img;
        }
      }
    }
  }
  j /= double(d);
  Eigen::SelfAdjointEigenSolver<Matrix> es(j);
  Eigen::VectorXcd v = es.eigenvectors().col(Eigen::Index(d * d - 1));
  Matrix u(d, d);
  for (std::size_t i = 0; i < d; i++) {
    for (std::size_t r = 0; r < d; r++) u(Eigen::Index(r), Eigen::Index(i)) = std::sqrt(double(d)) * v(Eigen::Index(i * d + r));
  }
  return u;
}

DenseState::DenseState(std::size_t num_qubits, Matrix rho) : n_(num_qubits), rho_(std::move(rho)) {
  if (n_ > kMaxDenseQubits) throw ContractViolation("dense states limited to 10 qubits");
  if (std::size_t(rho_.rows()) != dim_of(n_) || rho_.rows() != rho_.cols()) {
    throw ContractViolation("density matrix has the wrong dimension");
  }
  if (max_abs(rho_ - rho_.adjoint()) > kValidationTol) throw ContractViolation("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex(1, 0)) > kValidationTol) throw ContractViolation("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kValidationTol) throw ContractViolation("density matrix is not positive");
}

DenseState DenseState::unchecked(std::size_t num_qubits, Matrix rho) {
  DenseState s;
  s.n_ = num_qubits;
  s.rho_ = std::move(rho);
  return s;
}

DenseState DenseState::pure(std::size_t num_qubits, const Eigen::VectorXcd &psi) {
  Eigen::VectorXcd v = psi / psi.norm();
  return DenseState(num_qubits, v * v.adjoint());
}

DenseState DenseState::basis_state(std::size_t num_qubits, std::uint64_t bits) {
  std::size_t d = dim_of(num_qubits);
  Matrix m = Matrix::Zero(Eigen::Index(d), Eigen::Index(d));
  m(Eigen::Index(bits), Eigen::Index(bits)) = 1;
  return DenseState(num_qubits, m);
}

DenseState DenseState::maximally_mixed(std::size_t num_qubits) {
  std::size_t d = dim_of(num_qubits);
  return DenseState(num_qubits, Matrix::Identity(Eigen::Index(d), Eigen::Index(d)) / double(d));
}

DenseState DenseState::from_stabilizer(const MixedStabilizerState &s) {
  std::size_t n = s.num_qubits();
  if (n > kMaxDenseQubits) throw ContractViolation("dense states limited to 10 qubits");
  std::size_t d = dim_of(n);
  Matrix m = Matrix::Identity(Eigen::Index(d), Eigen::Index(d)) / double(d);
  for (const auto &g : s.generators()) m += pauli_left(g, m);
  return DenseState(n, m);
}

DenseState DenseState::random(std::size_t num_qubits, std::mt19937_64 &rng, std::size_t rank) {
  std::size_t d = dim_of(num_qubits);
  if (rank == 0) rank = d;
  Matrix g = gaussian(d, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DenseState(num_qubits, m);
}

KrausChannel::KrausChannel(std::vector<std::size_t> qubits, std::vector<Matrix> ops)
    : qubits_(std::move(qubits)), ops_(std::move(ops)) {
  std::size_t kd = dim_of(qubits_.size());
  auto sorted = qubits_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("repeated qubit in channel");
  }
  if (ops_.empty()) throw ContractViolation("channel needs at least one Kraus operator");
  Matrix acc = Matrix::Zero(Eigen::Index(kd), Eigen::Index(kd));
  for (const auto &k : ops_) {
    if (std::size_t(k.rows()) != kd || std::size_t(k.cols()) != kd) {
      throw ContractViolation("Kraus operator has the wrong dimension");
    }
    acc += k.adjoint() * k;
  }
  if (max_abs(acc - Matrix::Identity(Eigen::Index(kd), Eigen::Index(kd))) > kValidationTol) {
    throw ContractViolation("Kraus operators are not trace preserving");
  }
}

KrausChannel KrausChannel::identity() { return KrausChannel({}, {Matrix::Identity(1, 1)}); }

KrausChannel KrausChannel::unitary(std::vector<std::size_t> qubits, const Matrix &u) {
  return KrausChannel(std::move(qubits), {u});
}

KrausChannel KrausChannel::pauli_mix(const SignedPauli &p, double probability) {
  if (!p.is_hermitian()) throw ContractViolation("Pauli mixing needs a Hermitian Pauli");
  if (!(probability >= 0.0 && probability <= 1.0)) throw ContractViolation("probability outside [0, 1]");
  auto support = p.support().indices();
  SignedPauli local(support.size());
  for (std::size_t j = 0; j < support.size(); j++) {
    local.x().set(j, p.x().get(support[j]));
    local.z().set(j, p.z().get(support[j]));
  }
  local.set_phase(p.phase());
  std::size_t kd = dim_of(support.size());
  Matrix id = Matrix::Identity(Eigen::Index(kd), Eigen::Index(kd));
  KrausChannel ch(support, {std::sqrt(1.0 - probability) * id, std::sqrt(probability) * pauli_matrix(local)});
  ch.pauli_ = std::make_pair(p, probability);
  return ch;
}

KrausChannel KrausChannel::reset(std::size_t e, bool target_one) {
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  int t = target_one ? 1 : 0;
  k0(t, 0) = 1;
  k1(t, 1) = 1;
  return KrausChannel({e}, {k0, k1});
}

KrausChannel KrausChannel::from_gate(const Gate &g) {
  switch (g.kind()) {
    case Gate::Kind::clifford:
      return unitary(g.qubits(), unitary_from_tableau(g.tableau()));
    case Gate::Kind::pauli_mix:
      return pauli_mix(g.pauli(), 0.5);
    case Gate::Kind::partial_pauli_mix:
      return pauli_mix(g.pauli(), g.probability());
    case Gate::Kind::reset:
      return reset(g.reset_qubit(), g.target_one());
  }
  throw ContractViolation("unknown gate kind");
}

KrausChannel KrausChannel::random(std::vector<std::size_t> qubits, std::size_t num_kraus, std::mt19937_64 &rng) {
  std::size_t kd = dim_of(qubits.size());
  Matrix v = isometry(num_kraus * kd, kd, rng);
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < num_kraus; i++) {
    ops.push_back(v.block(Eigen::Index(i * kd), 0, Eigen::Index(kd), Eigen::Index(kd)));
  }
  return KrausChannel(std::move(qubits), std::move(ops));
}

DenseCircuit dense_circuit(const ChannelCircuit &c) {
  DenseCircuit out;
  for (const auto &layer : c.layers()) {
    for (const auto &g : layer) out.push_back(KrausChannel::from_gate(g));
  }
  return out;
}

Matrix apply_channel(const KrausChannel &ch, const Matrix &x) {
  if (ch.pauli_) {
    const auto &[p, prob] = *ch.pauli_;
    Matrix px = pauli_left(p, x);
    return (1.0 - prob) * x + prob * pauli_left(p, px.adjoint()).adjoint();
  }
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const auto &k : ch.ops()) {
    Matrix kx = left_apply(k, ch.qubits(), x);
    out += left_apply(k, ch.qubits(), kx.adjoint()).adjoint();
  }
  return out;
}

Matrix apply_channel(const DenseCircuit &c, const Matrix &x) {
  Matrix cur = x;
  for (const auto &ch : c) cur = apply_channel(ch, cur);
  return cur;
}

Matrix apply_dual(const KrausChannel &ch, const Matrix &o) {
  if (ch.pauli_) return apply_channel(ch, o);
  Matrix out = Matrix::Zero(o.rows(), o.cols());
  for (const auto &k : ch.ops()) {
    Matrix kd = k.adjoint();
    Matrix ko = left_apply(kd, ch.qubits(), o);
    out += left_apply(kd, ch.qubits(), ko.adjoint()).adjoint();
  }
  return out;
}

Matrix apply_dual(const DenseCircuit &c, const Matrix &o) {
  Matrix cur = o;
  for (auto it = c.rbegin(); it != c.rend(); ++it) cur = apply_dual(*it, cur);
  return cur;
}

DenseState apply(const KrausChannel &ch, const DenseState &s) {
  return DenseState::unchecked(s.num_qubits(), apply_channel(ch, s.matrix()));
}

DenseState apply(const DenseCircuit &c, const DenseState &s) {
  return DenseState::unchecked(s.num_qubits(), apply_channel(c, s.matrix()));
}

Matrix partial_trace(const Matrix &rho, std::size_t num_qubits, const std::vector<std::size_t> &keep) {
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < num_qubits; q++) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  auto embed = [](std::size_t a, const std::vector<std::size_t> &qs) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < qs.size(); j++) {
      if ((a >> j) & 1) out |= std::size_t{1} << qs[j];
    }
    return out;
  };
  std::size_t dk = dim_of(kept.size()), dt = dim_of(traced.size());
  std::vector<std::size_t> ek(dk), et(dt);
  for (std::size_t a = 0; a < dk; a++) ek[a] = embed(a, kept);
  for (std::size_t t = 0; t < dt; t++) et[t] = embed(t, traced);
  Matrix out = Matrix::Zero(Eigen::Index(dk), Eigen::Index(dk));
  for (std::size_t a = 0; a < dk; a++) {
    for (std::size_t b = 0; b < dk; b++) {
      Complex acc(0, 0);
      for (std::size_t t = 0; t < dt; t++) acc += rho(Eigen::Index(ek[a] | et[t]), Eigen::Index(ek[b] | et[t]));
      out(Eigen::Index(a), Eigen::Index(b)) = acc;
    }
  }
  return out;
}

double entropy(const Matrix &rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  double h = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
    double l = es.eigenvalues()(i);
    if (l > kEigenClip) h -= l * std::log(l);
  }
  return h;
}

double entropy(const DenseState &s) { return entropy(s.matrix()); }

double region_entropy(const DenseState &s, const std::vector<std::size_t> &qubits) {
  if (qubits.empty()) return 0.0;
  return entropy(partial_trace(s.matrix(), s.num_qubits(), qubits));
}

double cmi(const DenseState &s, const std::vector<std::size_t> &a, const std::vector<std::size_t> &b,
           const std::vector<std::size_t> &c) {
  auto join = [](std::vector<std::size_t> x, const std::vector<std::size_t> &y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  auto ab = join(a, b), bc = join(b, c), abc = join(ab, c);
  auto sorted = abc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("CMI regions overlap");
  }
  return region_entropy(s, ab) + region_entropy(s, bc) - region_entropy(s, abc) - region_entropy(s, b);
}

std::vector<std::size_t> qubits_of(const Region &region) { return region.edges(); }

double trace_distance(const Matrix &a, const Matrix &b) {
  Matrix d = a - b;
  d = (d + d.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(d, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum() / 2.0;
}

double relative_entropy(const DenseState &rho, const DenseState &sigma) {
  if (rho.dim() != sigma.dim()) throw ContractViolation("relative entropy needs equal dimensions");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.matrix());
  const auto &mu = es.eigenvalues();
  const auto &v = es.eigenvectors();
  double leak = 0;
  Eigen::VectorXd log_mu(mu.size());
  for (Eigen::Index i = 0; i < mu.size(); i++) {
    if (mu(i) <= kSupportCutoff) {
      leak += (v.col(i).adjoint() * rho.matrix() * v.col(i))(0, 0).real();
      log_mu(i) = 0;
    } else {
      log_mu(i) = std::log(mu(i));
    }
  }
  if (leak > kSupportCutoff) return std::numeric_limits<double>::infinity();
  Matrix log_sigma = v * log_mu.cast<Complex>().asDiagonal() * v.adjoint();
  double cross = (rho.matrix() * log_sigma).trace().real();
  return -entropy(rho) - cross;
}

double coherent_information(const DenseState &sigma, const DenseCircuit &channel) {
  std::size_t n = sigma.num_qubits();
  if (n > 5) throw ContractViolation("coherent information limited to 5 qubits");
  for (const auto &ch : channel) {
    for (auto q : ch.qubits()) {
      if (q >= n) throw ContractViolation("channel acts outside the system");
    }
  }
  std::size_t d = dim_of(n);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.matrix());
  Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix sq = es.eigenvectors() * root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  Eigen::VectorXcd psi(Eigen::Index(d * d));
  for (std::size_t r = 0; r < d; r++) {
    for (std::size_t q = 0; q < d; q++) psi(Eigen::Index(r * d + q)) = sq(Eigen::Index(q), Eigen::Index(r));
  }
  Matrix rq = psi * psi.adjoint();
  rq = apply_channel(channel, rq);
  std::vector<std::size_t> system(n);
  for (std::size_t q = 0; q < n; q++) system[q] = q;
  return entropy(partial_trace(rq, 2 * n, system)) - entropy(rq);
}

Lemma1Result lemma1_check(const DenseState &rho, const Matrix &o, const DenseCircuit &channel, double tol) {
  if (o.rows() != Eigen::Index(rho.dim()) || o.cols() != o.rows()) throw ContractViolation("operator dimension mismatch");
  Eigen::JacobiSVD<Matrix> svd(o);
  if (std::abs(svd.singularValues()(0) - 1.0) > tol) throw ContractViolation("operator norm must be 1");
  Matrix out = apply_channel(channel, rho.matrix());
  Matrix dual = apply_dual(channel, o);
  Lemma1Result r;
  r.lambda = (o * out).trace();
  bool unit = std::abs(std::abs(r.lambda) - 1.0) <= tol;
  r.cond1 = unit && max_abs(o * out - r.lambda * out) <= tol;
  r.cond2 = unit && max_abs(dual * rho.matrix() - r.lambda * rho.matrix()) <= tol;
  r.cond3 = unit && std::abs((dual * rho.matrix()).trace() - r.lambda) <= tol;
  return r;
}

Lemma1Instance random_lemma1_instance(std::mt19937_64 &rng, std::size_t num_qubits, bool constructed) {
  std::size_t d = dim_of(num_qubits);
  std::vector<std::size_t> all(num_qubits);
  for (std::size_t q = 0; q < num_qubits; q++) all[q] = q;
  std::uniform_int_distribution<std::size_t> rank_dist(1, d);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  Lemma1Instance inst;
  inst.rho = DenseState::random(num_qubits, rng, rank_dist(rng));
  std::uniform_int_distribution<std::size_t> kraus_dist(1, 3);
  KrausChannel k = KrausChannel::random(all, kraus_dist(rng), rng);
  if (!constructed) {
    inst.o = isometry(d, d, rng);
    inst.channel = {k};
    return inst;
  }
  // Force E[rho] into the +1 eigenspace of a Pauli P: project, and move the
  // -1 part over with a Pauli V anticommuting with P.
  SignedPauli p = random_pauli(num_qubits, rng);
  std::size_t j = p.support().indices().front();
  SignedPauli v(num_qubits);
  if (p.x().get(j)) {
    v.z().set(j);
  } else {
    v.x().set(j);
  }
  Matrix pm = pauli_matrix(p);
  Matrix id = Matrix::Identity(Eigen::Index(d), Eigen::Index(d));
  Matrix plus = (id + pm) / 2.0, minus = (id - pm) / 2.0;
  Matrix vm = pauli_matrix(v);
  std::vector<Matrix> ops;
  for (const auto &op : k.ops()) {
    ops.push_back(plus * op);
    ops.push_back(vm * minus * op);
  }
  inst.channel = {KrausChannel(all, ops)};
  std::bernoulli_distribution real_phase(0.5);
  double theta = real_phase(rng) ? (real_phase(rng) ? 0.0 : std::acos(-1.0)) : angle(rng);
  inst.o = std::polar(1.0, theta) * pm;
  return inst;
}

ExperimentReport dressed_channel_symmetry_check(std::uint64_t seed, std::size_t random_states,
                                                std::size_t off_diagonal_samples) {
  TorusLattice lat(2, 2);
  std::size_t n = lat.num_edges();
  std::size_t d = dim_of(n);
  ExperimentReport rep("dressed-channel-symmetry");
  rep.input("lattice", std::string("2x2")).input("seed", std::int64_t(seed));
  rep.input("random_states", std::int64_t(random_states));
  rep.input("off_diagonal_samples", std::int64_t(off_diagonal_samples));

  DenseCircuit f = dense_circuit(reset_circuit(lat));
  for (const auto &ch : dense_circuit(plaquette_mixing_circuit(lat))) f.push_back(ch);
  Matrix id = Matrix::Identity(Eigen::Index(d), Eigen::Index(d));
  double dual_dev = 0;
  for (Axis axis : {Axis::x, Axis::y}) {
    dual_dev = std::max(dual_dev, max_abs(apply_dual(f, pauli_matrix(winding_detector(lat, axis))) - id));
  }
  rep.result("dual_deviation", dual_dev);
  rep.check("dual_maps_loop_to_identity", dual_dev < 1e-10);

  Region string = lat.string_between({0, 0}, {0, 1});
  DenseCircuit g = f;
  g.push_back(KrausChannel::unitary(string.edges(), pauli_matrix(SignedPauli::x_on(string.size(), std::vector<std::size_t>{0}))));
  for (const auto &ch : dense_circuit(dephasing_circuit(lat))) g.push_back(ch);

  std::mt19937_64 rng(seed);
  Matrix target = id / double(d);
  Matrix loop_state = DenseState::from_stabilizer(build_loop_state(lat)).matrix();
  double state_dev = 0, f_dev = 0;
  for (std::size_t k = 0; k < random_states; k++) {
    DenseState s = DenseState::random(n, rng);
    state_dev = std::max(state_dev, max_abs(apply_channel(g, s.matrix()) - target));
    if (k == 0) f_dev = max_abs(apply_channel(f, s.matrix()) - loop_state);
  }
  rep.result("forward_to_loop_state_deviation", f_dev);
  rep.result("random_state_deviation", state_dev);
  rep.check("reverse_path_prepares_loop_state", f_dev < 1e-10);
  rep.check("random_states_replaced", state_dev < 1e-10);

  double unit_dev = 0;
  Matrix unit = Matrix::Zero(Eigen::Index(d), Eigen::Index(d));
  for (std::size_t i = 0; i < d; i++) {
    unit(Eigen::Index(i), Eigen::Index(i)) = 1;
    unit_dev = std::max(unit_dev, max_abs(apply_channel(g, unit) - target));
    unit(Eigen::Index(i), Eigen::Index(i)) = 0;
  }
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  for (std::size_t k = 0; k < off_diagonal_samples; k++) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) j = (j + 1) % d;
    unit(Eigen::Index(i), Eigen::Index(j)) = 1;
    unit_dev = std::max(unit_dev, max_abs(apply_channel(g, unit)));
    unit(Eigen::Index(i), Eigen::Index(j)) = 0;
  }
  rep.result("matrix_unit_deviation", unit_dev);
  rep.check("matrix_units_replaced", unit_dev < 1e-10);
  return rep;
}

}  // namespace mixedphase
