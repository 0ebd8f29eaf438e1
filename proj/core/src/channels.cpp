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

#include "mixedphase/channels.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"

namespace mixedphase {

namespace {

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Local k-qubit restriction of p to `qubits` (phase dropped).
SignedPauli extract_local(const SignedPauli &p, const std::vector<std::size_t> &qubits) {
  SignedPauli local(qubits.size());
  for (std::size_t j = 0; j < qubits.size(); j++) {
    local.x().set(j, p.x().get(qubits[j]));
    local.z().set(j, p.z().get(qubits[j]));
  }
  return local;
}

/// p with its `qubits` part replaced by the tableau image of that part.
SignedPauli conjugate_embedded(const SignedPauli &p, const std::vector<std::size_t> &qubits,
                               const CliffordTableau &t) {
  SignedPauli local = extract_local(p, qubits);
  if (local.is_identity_word()) return p;
  SignedPauli image = t.conjugate(local);
  SignedPauli out = p;
  for (std::size_t j = 0; j < qubits.size(); j++) {
    out.x().set(qubits[j], image.x().get(j));
    out.z().set(qubits[j], image.z().get(j));
  }
  out.set_phase(p.phase() + image.phase());
  return out;
}

}  // namespace

Gate Gate::clifford(std::vector<std::size_t> qubits, CliffordTableau tableau) {
  if (qubits.size() != tableau.num_qubits()) throw ContractViolation("tableau size differs from qubit list");
  if (!tableau.is_valid()) throw ContractViolation("non-symplectic Clifford tableau");
  auto sorted = sorted_copy(qubits);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("repeated qubit in Clifford gate");
  }
  Gate g;
  g.kind_ = Kind::clifford;
  g.support_ = sorted;
  g.qubits_ = std::move(qubits);
  g.tableau_ = std::move(tableau);
  return g;
}

Gate Gate::pauli_mix(SignedPauli p) {
  if (!p.is_hermitian()) throw ContractViolation("Pauli mixing needs a Hermitian Pauli");
  Gate g;
  g.kind_ = Kind::pauli_mix;
  g.n_ = p.num_qubits();
  g.support_ = p.support().indices();
  g.pauli_ = std::move(p);
  return g;
}

Gate Gate::reset(std::size_t num_qubits, std::size_t e, bool target_one) {
  if (e >= num_qubits) throw ContractViolation("reset qubit out of range");
  Gate g;
  g.kind_ = Kind::reset;
  g.n_ = num_qubits;
  g.support_ = {e};
  g.target_one_ = target_one;
  return g;
}

Gate Gate::partial_pauli_mix(SignedPauli p, double probability) {
  if (!(probability >= 0.0 && probability <= 0.5)) throw ContractViolation("mixing probability outside [0, 1/2]");
  Gate g = pauli_mix(std::move(p));
  g.kind_ = Kind::partial_pauli_mix;
  g.probability_ = probability;
  return g;
}

Gate Gate::inverse() const {
  if (kind_ != Kind::clifford) throw ContractViolation("only Clifford gates are invertible");
  Gate g = *this;
  g.tableau_ = tableau_.inverse();
  return g;
}

std::string Gate::kind_name() const {
  switch (kind_) {
    case Kind::clifford:
      return "clifford";
    case Kind::pauli_mix:
      return "pauli_mix";
    case Kind::reset:
      return "reset";
    case Kind::partial_pauli_mix:
      return "partial_pauli_mix";
  }
  return "?";
}

std::size_t ChannelCircuit::num_gates() const {
  std::size_t total = 0;
  for (const auto &layer : layers_) total += layer.size();
  return total;
}

void ChannelCircuit::add_layer(std::vector<Gate> layer) {
  std::vector<char> used(n_, 0);
  for (const auto &g : layer) {
    if (g.kind() != Gate::Kind::clifford && g.num_qubits() != n_) {
      throw ContractViolation("gate size differs from circuit size");
    }
    for (auto q : g.support()) {
      if (q >= n_) throw ContractViolation("gate qubit out of range");
      if (used[q]) throw ContractViolation("overlapping gate supports within a layer");
      used[q] = 1;
    }
  }
  layers_.push_back(std::move(layer));
}

void ChannelCircuit::append(const ChannelCircuit &next) {
  if (next.n_ != n_) throw ContractViolation("circuit size mismatch");
  for (const auto &layer : next.layers_) layers_.push_back(layer);
}

bool ChannelCircuit::is_clifford() const {
  for (const auto &layer : layers_) {
    for (const auto &g : layer) {
      if (g.kind() != Gate::Kind::clifford) return false;
    }
  }
  return true;
}

ChannelCircuit ChannelCircuit::inverse() const {
  ChannelCircuit inv(n_);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    std::vector<Gate> layer;
    for (const auto &g : *it) layer.push_back(g.inverse());
    inv.layers_.push_back(std::move(layer));
  }
  return inv;
}

Region ChannelCircuit::support() const {
  std::vector<std::size_t> out;
  for (const auto &layer : layers_) {
    for (const auto &g : layer) out.insert(out.end(), g.support().begin(), g.support().end());
  }
  return Region(std::move(out));
}

std::string ChannelCircuit::to_json(std::optional<std::uint64_t> seed) const {
  nlohmann::json j;
  j["n"] = n_;
  if (seed) j["seed"] = *seed;
  j["layers"] = nlohmann::json::array();
  for (const auto &layer : layers_) {
    auto jl = nlohmann::json::array();
    for (const auto &g : layer) {
      nlohmann::json jg;
      jg["kind"] = g.kind_name();
      nlohmann::json params = nlohmann::json::object();
      switch (g.kind()) {
        case Gate::Kind::clifford: {
          jg["qubits"] = g.qubits();
          std::vector<std::string> xs, zs;
          for (const auto &p : g.tableau().x_images()) xs.push_back(p.str());
          for (const auto &p : g.tableau().z_images()) zs.push_back(p.str());
          params["x_images"] = xs;
          params["z_images"] = zs;
          break;
        }
        case Gate::Kind::pauli_mix:
        case Gate::Kind::partial_pauli_mix: {
          jg["qubits"] = g.support();
          SignedPauli local = extract_local(g.pauli(), g.support());
          local.set_phase(g.pauli().phase());
          params["pauli"] = local.str();
          if (g.kind() == Gate::Kind::partial_pauli_mix) params["p"] = g.probability();
          break;
        }
        case Gate::Kind::reset:
          jg["qubits"] = g.support();
          params["target"] = g.target_one() ? 1 : 0;
          break;
      }
      jg["parameters"] = params;
      jl.push_back(jg);
    }
    j["layers"].push_back(jl);
  }
  return j.dump(2);
}

ChannelCircuit ChannelCircuit::from_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  std::size_t n = j.at("n").get<std::size_t>();
  ChannelCircuit c(n);
  for (const auto &jl : j.at("layers")) {
    std::vector<Gate> layer;
    for (const auto &jg : jl) {
      std::string kind = jg.at("kind").get<std::string>();
      auto qubits = jg.at("qubits").get<std::vector<std::size_t>>();
      const auto &params = jg.contains("parameters") ? jg.at("parameters") : nlohmann::json::object();
      if (kind == "clifford") {
        std::vector<SignedPauli> xs, zs;
        for (const auto &s : params.at("x_images")) xs.push_back(SignedPauli::from_string(s.get<std::string>()));
        for (const auto &s : params.at("z_images")) zs.push_back(SignedPauli::from_string(s.get<std::string>()));
        layer.push_back(Gate::clifford(qubits, CliffordTableau::from_images(xs, zs)));
      } else if (kind == "pauli_mix" || kind == "partial_pauli_mix") {
        SignedPauli local = SignedPauli::from_string(params.at("pauli").get<std::string>());
        if (local.num_qubits() != qubits.size()) throw std::invalid_argument("pauli length differs from qubit list");
        SignedPauli full(n);
        for (std::size_t k = 0; k < qubits.size(); k++) {
          if (qubits[k] >= n) throw std::invalid_argument("gate qubit out of range");
          full.x().set(qubits[k], local.x().get(k));
          full.z().set(qubits[k], local.z().get(k));
        }
        full.set_phase(local.phase());
        if (kind == "pauli_mix") {
          layer.push_back(Gate::pauli_mix(full));
        } else {
          layer.push_back(Gate::partial_pauli_mix(full, params.at("p").get<double>()));
        }
      } else if (kind == "reset") {
        if (qubits.size() != 1) throw std::invalid_argument("reset acts on exactly one qubit");
        int target = params.contains("target") ? params.at("target").get<int>() : 0;
        layer.push_back(Gate::reset(n, qubits[0], target == 1));
      } else {
        throw std::invalid_argument("unknown gate kind: " + kind);
      }
    }
    c.add_layer(std::move(layer));
  }
  return c;
}

MixedStabilizerState apply_pauli_mix(const MixedStabilizerState &s, const SignedPauli &p) {
  if (!p.is_hermitian()) throw ContractViolation("Pauli mixing needs a Hermitian Pauli");
  std::vector<SignedPauli> gens = s.generators();
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < gens.size(); i++) {
    if (commutes(gens[i], p)) continue;
    if (!pivot) {
      pivot = i;
    } else {
      gens[i] *= gens[*pivot];
    }
  }
  if (!pivot) return s;
  gens.erase(gens.begin() + std::ptrdiff_t(*pivot));
  return MixedStabilizerState::unchecked(s.num_qubits(), std::move(gens));
}

MixedStabilizerState apply_reset(const MixedStabilizerState &s, std::size_t e, bool target_one) {
  std::size_t n = s.num_qubits();
  if (e >= n) throw ContractViolation("reset qubit out of range");
  std::vector<SignedPauli> gens = s.generators();
  // Partial trace over e: keep only group elements acting as I on e, by
  // eliminating the x_e column and then the z_e column.
  for (int column = 0; column < 2; column++) {
    auto bit = [&](const SignedPauli &g) { return column == 0 ? g.x().get(e) : g.z().get(e); };
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < gens.size(); i++) {
      if (!bit(gens[i])) continue;
      if (!pivot) {
        pivot = i;
      } else {
        gens[i] *= gens[*pivot];
      }
    }
    if (pivot) gens.erase(gens.begin() + std::ptrdiff_t(*pivot));
  }
  std::size_t idx[] = {e};
  SignedPauli z = SignedPauli::z_on(n, idx);
  gens.push_back(target_one ? z.negated() : z);
  return MixedStabilizerState::unchecked(n, std::move(gens));
}

MixedStabilizerState apply_clifford(const MixedStabilizerState &s, const std::vector<std::size_t> &qubits,
                                    const CliffordTableau &tableau) {
  if (!tableau.is_valid()) throw ContractViolation("non-symplectic Clifford tableau");
  if (qubits.size() != tableau.num_qubits()) throw ContractViolation("tableau size differs from qubit list");
  for (auto q : qubits) {
    if (q >= s.num_qubits()) throw ContractViolation("Clifford qubit out of range");
  }
  std::vector<SignedPauli> gens;
  gens.reserve(s.num_generators());
  for (const auto &g : s.generators()) gens.push_back(conjugate_embedded(g, qubits, tableau));
  return MixedStabilizerState::unchecked(s.num_qubits(), std::move(gens));
}

MixedStabilizerState apply_gate(const MixedStabilizerState &s, const Gate &g) {
  switch (g.kind()) {
    case Gate::Kind::clifford:
      return apply_clifford(s, g.qubits(), g.tableau());
    case Gate::Kind::pauli_mix:
      return apply_pauli_mix(s, g.pauli());
    case Gate::Kind::reset:
      return apply_reset(s, g.reset_qubit(), g.target_one());
    case Gate::Kind::partial_pauli_mix:
      break;
  }
  throw ContractViolation("partial-strength Pauli mixing leaves the stabilizer class; use an oracle engine");
}

MixedStabilizerState apply_circuit(const MixedStabilizerState &s, const ChannelCircuit &c) {
  if (c.num_qubits() != s.num_qubits()) throw ContractViolation("circuit size differs from state size");
  MixedStabilizerState cur = s;
  for (const auto &layer : c.layers()) {
    for (const auto &g : layer) cur = apply_gate(cur, g);
  }
  return cur;
}

std::optional<int> markov_width(const MixedStabilizerState &s, const TorusLattice &lattice,
                                const MarkovProbeConfig &cfg) {
  std::vector<int> widths = cfg.widths;
  std::sort(widths.begin(), widths.end());
  int worst = 0;
  for (auto center : cfg.centers) {
    std::optional<int> found;
    for (int w : widths) {
      Partition p;
      try {
        p = lattice.markov_partition(center, cfg.a_side, w);
      } catch (const ContractViolation &) {
        continue;
      }
      if (cmi(s, p.A, p.B, p.C).value == 0) {
        found = w;
        break;
      }
    }
    if (!found) return std::nullopt;
    worst = std::max(worst, *found);
  }
  return worst;
}

TracedResult apply_circuit_traced(const MixedStabilizerState &s, const TorusLattice &lattice,
                                  const ChannelCircuit &c, const MarkovProbeConfig &cfg) {
  TracedResult out;
  out.input_width = markov_width(s, lattice, cfg);
  std::mt19937_64 rng(cfg.seed);
  MixedStabilizerState cur = s;
  for (std::size_t t = 0; t < c.depth(); t++) {
    const auto &layer = c.layers()[t];
    auto probe = [&](const std::string &name, const std::vector<char> &take) {
      MixedStabilizerState st = cur;
      for (std::size_t k = 0; k < layer.size(); k++) {
        if (take[k]) st = apply_gate(st, layer[k]);
      }
      out.probes.push_back({t, name, markov_width(st, lattice, cfg)});
      return st;
    };
    for (std::size_t k = 0; k < layer.size(); k++) {
      std::vector<char> take(layer.size(), 0);
      take[k] = 1;
      probe("single:" + std::to_string(k), take);
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < cfg.random_subsets; r++) {
      std::vector<char> take(layer.size(), 0);
      for (auto &b : take) b = coin(rng) ? 1 : 0;
      probe("random:" + std::to_string(r), take);
    }
    MixedStabilizerState next = cur;
    for (std::size_t k = 1; k <= layer.size(); k++) {
      std::vector<char> take(layer.size(), 0);
      for (std::size_t q = 0; q < k; q++) take[q] = 1;
      next = probe("prefix:" + std::to_string(k), take);
    }
    cur = next;
  }
  out.state = cur;
  return out;
}

std::pair<ChannelCircuit, ChannelCircuit> partition_circuit(const TorusLattice &lattice, const ChannelCircuit &c,
                                                            const Region &region) {
  std::size_t n = c.num_qubits();
  BitVec tainted = lattice.neighborhood(region, int(c.depth())).mask(n);
  ChannelCircuit ca(n), cb(n);
  for (const auto &layer : c.layers()) {
    std::vector<Gate> la, lb;
    for (const auto &g : layer) {
      BitVec sup = BitVec::from_indices(n, g.support());
      if (sup.intersects(tainted)) {
        tainted |= sup;
        la.push_back(g);
      } else {
        lb.push_back(g);
      }
    }
    ca.add_layer(std::move(la));
    cb.add_layer(std::move(lb));
  }
  return {std::move(ca), std::move(cb)};
}

ChannelCircuit dress_operation(const ChannelCircuit &c, const ChannelCircuit &d) {
  if (!c.is_clifford()) throw ContractViolation("dressing needs an invertible (Clifford) circuit");
  if (c.num_qubits() != d.num_qubits()) throw ContractViolation("circuit size mismatch");
  std::size_t n = c.num_qubits();
  BitVec tainted = d.support().mask(n);
  std::vector<std::vector<Gate>> cone(c.depth());
  for (std::size_t t = c.depth(); t-- > 0;) {
    for (const auto &g : c.layers()[t]) {
      BitVec sup = BitVec::from_indices(n, g.support());
      if (sup.intersects(tainted)) {
        tainted |= sup;
        cone[t].push_back(g);
      }
    }
  }
  ChannelCircuit cx(n);
  for (auto &layer : cone) {
    if (!layer.empty()) cx.add_layer(std::move(layer));
  }
  ChannelCircuit out = cx;
  out.append(d);
  out.append(cx.inverse());
  return out;
}

ScaledPauli dual_apply(const Gate &g, const ScaledPauli &o) {
  if (o.coefficient == 0.0) return o;
  ScaledPauli out = o;
  switch (g.kind()) {
    case Gate::Kind::clifford:
      out.word = conjugate_embedded(o.word, g.qubits(), g.tableau().inverse());
      break;
    case Gate::Kind::pauli_mix:
      if (!commutes(o.word, g.pauli())) out.coefficient = 0.0;
      break;
    case Gate::Kind::partial_pauli_mix:
      if (!commutes(o.word, g.pauli())) out.coefficient *= 1.0 - 2.0 * g.probability();
      break;
    case Gate::Kind::reset: {
      std::size_t e = g.reset_qubit();
      if (o.word.x().get(e)) {
        out.coefficient = 0.0;
      } else if (o.word.z().get(e)) {
        out.word.z().set(e, false);
        if (g.target_one()) out.coefficient = -out.coefficient;
      }
      break;
    }
  }
  return out;
}

ScaledPauli dual_apply(const Gate &g, const SignedPauli &o) { return dual_apply(g, ScaledPauli{1.0, o}); }

ScaledPauli dual_apply(const ChannelCircuit &c, const SignedPauli &o) {
  if (!o.is_hermitian()) throw ContractViolation("dual map input must be Hermitian");
  ScaledPauli cur{1.0, o};
  for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it) {
    for (const auto &g : *it) cur = dual_apply(g, cur);
  }
  return cur;
}

ChannelCircuit random_clifford_circuit(const TorusLattice &lattice, std::size_t depth, std::uint64_t seed) {
  std::size_t n = lattice.num_edges();
  std::mt19937_64 rng(seed);
  ChannelCircuit c(n);
  for (std::size_t t = 0; t < depth; t++) {
    std::vector<Gate> layer;
    for (int i = 0; i < lattice.Ly(); i++) {
      for (int j = 0; j < lattice.Lx(); j++) {
        std::size_t a = lattice.edge_index({i, j}, Dir::horizontal);
        // Even layers pair edges leaving the same vertex; odd layers pair the
        // vertical edge above a vertex with the horizontal edge leaving it.
        std::size_t b = t % 2 == 0 ? lattice.edge_index({i, j}, Dir::vertical)
                                   : lattice.edge_index(lattice.wrap(i - 1, j), Dir::vertical);
        auto ops = CliffordTableau::random_ops(2, rng);
        layer.push_back(Gate::clifford({a, b}, CliffordTableau::from_ops(2, ops)));
      }
    }
    c.add_layer(std::move(layer));
  }
  return c;
}

ChannelCircuit pauli_string_circuit(std::size_t num_qubits, const Region &region, char pauli) {
  ElementaryOp::Kind kind;
  switch (pauli) {
    case 'X':
      kind = ElementaryOp::Kind::X;
      break;
    case 'Y':
      kind = ElementaryOp::Kind::Y;
      break;
    case 'Z':
      kind = ElementaryOp::Kind::Z;
      break;
    default:
      throw ContractViolation("Pauli string letter must be X, Y or Z");
  }
  CliffordTableau t = CliffordTableau::from_ops(1, {{kind, 0, 0}});
  std::vector<Gate> layer;
  for (auto e : region.edges()) layer.push_back(Gate::clifford({e}, t));
  ChannelCircuit c(num_qubits);
  c.add_layer(std::move(layer));
  return c;
}

}  // namespace mixedphase
