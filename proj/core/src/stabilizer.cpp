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

#include "mixedphase/stabilizer.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace mixedphase {

double EntropyBits::nats() const { return double(value) * std::numbers::ln2; }

double Overlap::value() const { return zero ? 0.0 : std::ldexp(1.0, -int(exponent)); }

MixedStabilizerState::MixedStabilizerState(std::size_t num_qubits, std::vector<SignedPauli> gens)
    : n_(num_qubits), gens_(std::move(gens)) {
  if (gens_.size() > n_) throw ContractViolation("more generators than qubits");
  for (const auto &g : gens_) {
    if (g.num_qubits() != n_) throw ContractViolation("generator size differs from qubit count");
    if (!g.is_hermitian()) throw ContractViolation("generator is not Hermitian: " + g.str());
  }
  for (std::size_t a = 0; a < gens_.size(); a++) {
    for (std::size_t b = a + 1; b < gens_.size(); b++) {
      if (!commutes(gens_[a], gens_[b])) throw ContractViolation("generators do not commute");
    }
  }
  EchelonBasis basis(2 * n_);
  for (const auto &g : gens_) {
    if (!basis.insert(symplectic_row(g))) throw ContractViolation("generators are not independent");
  }
}

MixedStabilizerState MixedStabilizerState::unchecked(std::size_t num_qubits, std::vector<SignedPauli> gens) {
  MixedStabilizerState s;
  s.n_ = num_qubits;
  s.gens_ = std::move(gens);
  return s;
}

MixedStabilizerState MixedStabilizerState::maximally_mixed(std::size_t num_qubits) {
  return unchecked(num_qubits, {});
}

MixedStabilizerState MixedStabilizerState::zero_state(std::size_t num_qubits) {
  std::vector<SignedPauli> gens;
  for (std::size_t q = 0; q < num_qubits; q++) {
    std::size_t idx[] = {q};
    gens.push_back(SignedPauli::z_on(num_qubits, idx));
  }
  return unchecked(num_qubits, std::move(gens));
}

namespace {

bool column_bit(const SignedPauli &p, std::size_t col, std::size_t n) {
  return col < n ? p.x().get(col) : p.z().get(col - n);
}

}  // namespace

MixedStabilizerState MixedStabilizerState::canonical() const {
  std::vector<SignedPauli> rows = gens_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n_ && rank < rows.size(); col++) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !column_bit(rows[pivot], col, n_)) pivot++;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); r++) {
      if (r != rank && column_bit(rows[r], col, n_)) rows[r] *= rows[rank];
    }
    rank++;
  }
  return unchecked(n_, std::move(rows));
}

bool MixedStabilizerState::is_canonical() const { return canonical().gens_ == gens_; }

std::string MixedStabilizerState::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["generators"] = nlohmann::json::array();
  for (const auto &g : gens_) {
    j["generators"].push_back({{"x", g.x().to_hex()}, {"z", g.z().to_hex()}, {"sign", g.sign()}});
  }
  return j.dump(2);
}

MixedStabilizerState MixedStabilizerState::from_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<SignedPauli> gens;
  for (const auto &g : j.at("generators")) {
    int sign = g.at("sign").get<int>();
    if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
    gens.emplace_back(BitVec::from_hex(n, g.at("x").get<std::string>()),
                      BitVec::from_hex(n, g.at("z").get<std::string>()), sign == 1 ? 0 : 2);
  }
  return MixedStabilizerState(n, std::move(gens));
}

bool same_state(const MixedStabilizerState &a, const MixedStabilizerState &b) {
  if (a.num_qubits() != b.num_qubits() || a.num_generators() != b.num_generators()) return false;
  return a.canonical().generators() == b.canonical().generators();
}

EntropyBits total_entropy(const MixedStabilizerState &s) {
  return {std::int64_t(s.num_qubits()) - std::int64_t(s.num_generators())};
}

namespace {

BitVec restricted_row(const SignedPauli &g, const BitVec &keep) { return concat(g.x() & keep, g.z() & keep); }

void check_region(const MixedStabilizerState &s, const Region &a) {
  if (!a.empty() && a.edges().back() >= s.num_qubits()) throw ContractViolation("region exceeds qubit range");
}

}  // namespace

EntropyBits region_entropy(const MixedStabilizerState &s, const Region &a) {
  check_region(s, a);
  std::size_t n = s.num_qubits();
  BitVec outside = ~a.mask(n);
  EchelonBasis basis(2 * n);
  for (const auto &g : s.generators()) basis.insert(restricted_row(g, outside));
  std::int64_t k_a = std::int64_t(s.num_generators()) - std::int64_t(basis.rank());
  return {std::int64_t(a.size()) - k_a};
}

EntropyBits cmi(const MixedStabilizerState &s, const Region &a, const Region &b, const Region &c) {
  if (!a.is_disjoint_from(b) || !b.is_disjoint_from(c) || !a.is_disjoint_from(c)) {
    throw ContractViolation("CMI regions overlap");
  }
  auto ab = region_entropy(s, a | b).value;
  auto bc = region_entropy(s, b | c).value;
  auto abc = region_entropy(s, a | b | c).value;
  auto bb = region_entropy(s, b).value;
  return {ab + bc - abc - bb};
}

std::vector<SignedPauli> subgroup_supported_in(const MixedStabilizerState &s, const Region &a) {
  check_region(s, a);
  std::size_t n = s.num_qubits();
  std::size_t m = s.num_generators();
  BitVec outside = ~a.mask(n);
  EchelonBasis basis(2 * n, m);
  std::vector<SignedPauli> out;
  for (std::size_t i = 0; i < m; i++) {
    BitVec combo(m);
    combo.set(i);
    if (auto dep = basis.insert(restricted_row(s.generators()[i], outside), std::move(combo))) {
      out.push_back(product_of(s.generators(), *dep, n));
    }
  }
  return out;
}

MixedStabilizerState restrict_to(const MixedStabilizerState &s, const Region &a) {
  return MixedStabilizerState::unchecked(s.num_qubits(), subgroup_supported_in(s, a));
}

std::size_t generator_span_count(const MixedStabilizerState &s, const Region &a, const Region &c,
                                 const std::vector<SignedPauli> &gens) {
  MixedStabilizerState alt(s.num_qubits(), gens);
  if (!same_state(alt, s)) throw ContractViolation("generating set does not match the state");
  BitVec ma = a.mask(s.num_qubits());
  BitVec mc = c.mask(s.num_qubits());
  std::size_t count = 0;
  for (const auto &g : gens) {
    BitVec sup = g.support();
    if (sup.intersects(ma) && sup.intersects(mc)) count++;
  }
  return count;
}

bool reduced_equal(const MixedStabilizerState &s1, const MixedStabilizerState &s2, const Region &a) {
  if (s1.num_qubits() != s2.num_qubits()) throw ContractViolation("states differ in qubit count");
  auto b1 = subgroup_supported_in(s1, a);
  auto b2 = subgroup_supported_in(s2, a);
  if (b1.size() != b2.size()) return false;
  GroupIndex index(s2.generators(), s2.num_qubits());
  for (const auto &g : b1) {
    if (index.membership(g) != Membership::member_plus) return false;
  }
  return true;
}

Overlap overlap(const MixedStabilizerState &s1, const MixedStabilizerState &s2) {
  std::size_t n = s1.num_qubits();
  if (s2.num_qubits() != n) throw ContractViolation("states differ in qubit count");
  std::size_t m1 = s1.num_generators();
  std::size_t m2 = s2.num_generators();
  EchelonBasis basis(2 * n, m1 + m2);
  std::int64_t d = 0;
  auto insert = [&](const SignedPauli &g, std::size_t slot) {
    BitVec combo(m1 + m2);
    combo.set(slot);
    return basis.insert(symplectic_row(g), std::move(combo));
  };
  for (std::size_t i = 0; i < m1; i++) insert(s1.generators()[i], i);
  Overlap out;
  out.zero = false;
  for (std::size_t j = 0; j < m2; j++) {
    auto dep = insert(s2.generators()[j], m1 + j);
    if (!dep) continue;
    d++;
    SignedPauli p1(n), p2(n);
    for (auto k : dep->indices()) {
      if (k < m1) {
        p1 *= s1.generators()[k];
      } else {
        p2 *= s2.generators()[k - m1];
      }
    }
    if (p1.phase() != p2.phase()) out.zero = true;
  }
  out.exponent = out.zero ? 0 : std::int64_t(n) - d;
  return out;
}

std::optional<int> eigen_check(const MixedStabilizerState &s, const SignedPauli &o) {
  switch (membership_with_sign(s.generators(), o)) {
    case Membership::member_plus:
      return 1;
    case Membership::member_minus:
      return -1;
    default:
      return std::nullopt;
  }
}

}  // namespace mixedphase
