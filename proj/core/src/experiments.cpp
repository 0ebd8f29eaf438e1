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


#include "mixedphase/experiments.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mixedphase {

namespace {

std::vector<Vertex> all_vertices(const TorusLattice &lattice) {
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < lattice.num_vertices(); k++) out.push_back(lattice.vertex_at(k));
  return out;
}

/// Every vertex on small lattices, a strided grid of them on large ones.
std::vector<Vertex> probe_centers(const TorusLattice &lattice) {
  if (lattice.num_vertices() <= 64) return all_vertices(lattice);
  std::vector<Vertex> out;
  int si = std::max(1, lattice.Ly() / 3);
  int sj = std::max(1, lattice.Lx() / 3);
  for (int i = 0; i < lattice.Ly(); i += si) {
    for (int j = 0; j < lattice.Lx(); j += sj) out.push_back({i, j});
  }
  return out;
}

std::vector<SignedPauli> loop_generators(const TorusLattice &lattice, SectorLabel sector) {
  std::size_t n = lattice.num_edges();
  std::vector<SignedPauli> gens;
  for (std::size_t k = 0; k + 1 < lattice.num_vertices(); k++) {
    gens.push_back(pauli_on(n, lattice.vertex_star(lattice.vertex_at(k)), 'Z'));
  }
  SignedPauli wx = winding_detector(lattice, Axis::x);
  SignedPauli wy = winding_detector(lattice, Axis::y);
  gens.push_back(sector.sx ? wx.negated() : wx);
  gens.push_back(sector.sy ? wy.negated() : wy);
  return gens;
}

ChannelCircuit greedy_layers(std::size_t n, const std::vector<Gate> &gates) {
  std::vector<std::vector<Gate>> layers;
  std::vector<BitVec> used;
  for (const auto &g : gates) {
    BitVec sup = BitVec::from_indices(n, g.support());
    std::size_t t = 0;
    while (t < layers.size() && used[t].intersects(sup)) t++;
    if (t == layers.size()) {
      layers.emplace_back();
      used.emplace_back(n);
    }
    layers[t].push_back(g);
    used[t] |= sup;
  }
  ChannelCircuit c(n);
  for (auto &layer : layers) c.add_layer(std::move(layer));
  return c;
}

std::string sector_pair(SectorLabel a, SectorLabel b) { return a.str() + "/" + b.str(); }

}  // namespace

SectorLabel SectorLabel::parse(const std::string &text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
    throw std::invalid_argument("sector must be one of 00, 01, 10, 11");
  }
  return {text[0] - '0', text[1] - '0'};
}

std::array<SectorLabel, 4> SectorLabel::all() { return {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}}; }

std::string SectorLabel::str() const { return std::string{char('0' + sx), char('0' + sy)}; }

SignedPauli pauli_on(std::size_t num_qubits, const Region &region, char pauli) {
  switch (pauli) {
    case 'X':
      return SignedPauli::x_on(num_qubits, region.edges());
    case 'Y':
      return SignedPauli::y_on(num_qubits, region.edges());
    case 'Z':
      return SignedPauli::z_on(num_qubits, region.edges());
    default:
      throw ContractViolation("Pauli letter must be X, Y or Z");
  }
}

MixedStabilizerState conjugate_by(const MixedStabilizerState &s, const SignedPauli &p) {
  if (!p.is_hermitian()) throw ContractViolation("conjugation needs a Hermitian Pauli");
  std::vector<SignedPauli> gens;
  gens.reserve(s.num_generators());
  for (const auto &g : s.generators()) gens.push_back(commutes(g, p) ? g : g.negated());
  return MixedStabilizerState::unchecked(s.num_qubits(), std::move(gens));
}

SignedPauli winding_detector(const TorusLattice &lattice, Axis axis) {
  return pauli_on(lattice.num_edges(), lattice.dual_loop(axis, 0), 'Z');
}

Region winding_flip_loop(const TorusLattice &lattice, Axis axis) {
  return lattice.primal_loop(axis == Axis::x ? Axis::y : Axis::x, 0);
}

MixedStabilizerState build_loop_state(const TorusLattice &lattice, SectorLabel sector) {
  return MixedStabilizerState(lattice.num_edges(), loop_generators(lattice, sector)).canonical();
}

ChannelCircuit dephasing_circuit(const TorusLattice &lattice) {
  std::size_t n = lattice.num_edges();
  std::vector<Gate> layer;
  for (std::size_t e = 0; e < n; e++) {
    std::size_t idx[] = {e};
    layer.push_back(Gate::pauli_mix(SignedPauli::x_on(n, idx)));
  }
  ChannelCircuit c(n);
  c.add_layer(std::move(layer));
  return c;
}

ChannelCircuit reset_circuit(const TorusLattice &lattice) {
  std::size_t n = lattice.num_edges();
  std::vector<Gate> layer;
  for (std::size_t e = 0; e < n; e++) layer.push_back(Gate::reset(n, e));
  ChannelCircuit c(n);
  c.add_layer(std::move(layer));
  return c;
}

ChannelCircuit plaquette_mixing_circuit(const TorusLattice &lattice) {
  std::size_t n = lattice.num_edges();
  std::vector<Gate> gates;
  for (std::size_t k = 0; k < lattice.num_faces(); k++) {
    gates.push_back(Gate::pauli_mix(pauli_on(n, lattice.plaquette(lattice.vertex_at(k)), 'X')));
  }
  return greedy_layers(n, gates);
}

MarkovScan markov_scan(const MixedStabilizerState &s, const TorusLattice &lattice, const std::vector<Vertex> &centers,
                       int min_width, int min_side) {
  MarkovScan out;
  int L = std::min(lattice.Lx(), lattice.Ly());
  for (auto center : centers) {
    for (int b = std::max(min_width, 0); 2 * b < L; b++) {
      for (int a = std::max(min_side, 0); a + 2 * b < L; a++) {
        Partition p = lattice.markov_partition(center, a, b);
        out.max_cmi = std::max(out.max_cmi, cmi(s, p.A, p.B, p.C).value);
        out.partitions++;
      }
    }
  }
  return out;
}

ExperimentReport td_report(const TorusLattice &lattice, const TdOptions &options) {
  ExperimentReport rep("td");
  rep.input("Lx", std::int64_t(lattice.Lx())).input("Ly", std::int64_t(lattice.Ly()));
  rep.input("seed", std::int64_t(options.seed));
  std::size_t n = lattice.num_edges();

  auto sectors = SectorLabel::all();
  std::vector<MixedStabilizerState> states;
  for (auto sec : sectors) states.push_back(build_loop_state(lattice, sec));
  if (options.inject_sign_flip) {
    auto gens = loop_generators(lattice, sectors[0]);
    gens[0] = gens[0].negated();
    states[0] = MixedStabilizerState(n, gens).canonical();
    rep.input("inject_sign_flip", true);
  }
  rep.result("entropy_bits", total_entropy(states[0]).value);
  rep.result("generators", std::int64_t(states[0].num_generators()));

  bool signs_ok = true;
  for (std::size_t k = 0; k < 4; k++) {
    auto ex = eigen_check(states[k], winding_detector(lattice, Axis::x));
    auto ey = eigen_check(states[k], winding_detector(lattice, Axis::y));
    signs_ok = signs_ok && ex == (sectors[k].sx ? -1 : 1) && ey == (sectors[k].sy ? -1 : 1);
  }
  rep.check("sector_signs", signs_ok);

  auto rects = lattice.rectangle_family(options.seed);
  std::int64_t distinguishable = 0;
  std::string first_failure;
  for (std::size_t p = 0; p < 4; p++) {
    for (std::size_t q = p + 1; q < 4; q++) {
      for (const auto &r : rects) {
        if (!reduced_equal(states[p], states[q], lattice.rectangle(r))) {
          if (distinguishable++ == 0) {
            first_failure = sector_pair(sectors[p], sectors[q]) + " at corner (" + std::to_string(r.corner.i) + "," +
                            std::to_string(r.corner.j) + ") " + std::to_string(r.h) + "x" + std::to_string(r.w);
          }
        }
      }
    }
  }
  rep.result("rectangles", std::int64_t(rects.size()));
  rep.result("distinguishing_rectangles", distinguishable);
  rep.check("locally_indistinguishable", distinguishable == 0, first_failure);

  bool orthogonal = true;
  for (std::size_t p = 0; p < 4; p++) {
    for (std::size_t q = p + 1; q < 4; q++) orthogonal = orthogonal && overlap(states[p], states[q]).zero;
  }
  rep.check("pairwise_orthogonal", orthogonal);

  auto centers = probe_centers(lattice);
  MarkovScan scan = markov_scan(states[0], lattice, centers, 1);
  rep.result("markov_partitions", std::int64_t(scan.partitions));
  rep.result("markov_max_cmi_bits", scan.max_cmi);
  rep.check("markov_cmi_zero", scan.max_cmi == 0 && scan.partitions > 0);

  // Negative control: a primal non-contractible Z loop, probed by windows on
  // its row. Only windows leaving C at least two vertices thick count: on a
  // thinner C the loop times a row of stars fits inside AB.
  auto control_scan = [](const TorusLattice &lat, bool thick) {
    MixedStabilizerState base = build_loop_state(lat);
    auto gens = base.generators();
    Region gamma = lat.primal_loop(Axis::x, 0);
    gens.push_back(pauli_on(lat.num_edges(), gamma, 'Z'));
    MixedStabilizerState control(lat.num_edges(), gens);
    int L = std::min(lat.Lx(), lat.Ly());
    int limit = thick ? L - 3 : L - 1;
    std::int64_t lo = 0, hi = 0;
    std::size_t crossed = 0;
    for (int j = 0; j < lat.Lx(); j++) {
      for (int b = 1; 2 * b < L; b++) {
        for (int a = 1; a + 2 * b <= limit; a++) {
          Partition p = lat.markov_partition({0, j}, a, b);
          if (p.A.is_disjoint_from(gamma)) continue;
          std::int64_t v = cmi(control, p.A, p.B, p.C).value;
          lo = crossed == 0 ? v : std::min(lo, v);
          hi = crossed == 0 ? v : std::max(hi, v);
          crossed++;
        }
      }
    }
    return std::tuple{lo, hi, crossed};
  };
  TorusLattice control_lattice = lattice;
  if (std::min(lattice.Lx(), lattice.Ly()) < 6) {
    control_lattice = TorusLattice(std::max(lattice.Lx(), 6), std::max(lattice.Ly(), 6));
  }
  auto [lo, hi, crossed] = control_scan(control_lattice, true);
  auto [thin_lo, thin_hi, thin_crossed] = control_scan(lattice, false);
  rep.result("control_lattice", std::to_string(control_lattice.Lx()) + "x" + std::to_string(control_lattice.Ly()));
  rep.result("control_windows", std::int64_t(crossed));
  rep.result("control_cmi_min_bits", lo);
  rep.result("control_cmi_max_bits", hi);
  rep.result("control_all_windows", std::int64_t(thin_crossed));
  rep.result("control_all_windows_cmi_min_bits", thin_lo);
  rep.result("control_all_windows_cmi_max_bits", thin_hi);
  rep.check("negative_control_cmi_one", crossed > 0 && lo == 1 && hi == 1);

  MixedStabilizerState product = MixedStabilizerState::zero_state(n);
  rep.check("product_state_distinguishable", !reduced_equal(product, states[0], lattice.vertex_star({0, 0})));
  return rep;
}

MixedStabilizerState memory_encode(const TorusLattice &lattice, LogicalBits bits) {
  MixedStabilizerState s = build_loop_state(lattice);
  std::size_t n = lattice.num_edges();
  if (bits[0]) s = conjugate_by(s, pauli_on(n, winding_flip_loop(lattice, Axis::x), 'X'));
  if (bits[1]) s = conjugate_by(s, pauli_on(n, winding_flip_loop(lattice, Axis::y), 'X'));
  return s;
}

std::optional<LogicalBits> memory_decode(const TorusLattice &lattice, const MixedStabilizerState &s) {
  auto ex = eigen_check(s, winding_detector(lattice, Axis::x));
  auto ey = eigen_check(s, winding_detector(lattice, Axis::y));
  if (!ex || !ey) return std::nullopt;
  return LogicalBits{*ex < 0 ? 1 : 0, *ey < 0 ? 1 : 0};
}

std::optional<LogicalBits> memory_decode_dressed(const TorusLattice &lattice, const MixedStabilizerState &s,
                                                 const ChannelCircuit &c) {
  LogicalBits out{};
  for (int k = 0; k < 2; k++) {
    ScaledPauli det = dual_apply(c, winding_detector(lattice, k == 0 ? Axis::x : Axis::y));
    if (det.coefficient == 0.0) return std::nullopt;
    auto e = eigen_check(s, det.word);
    if (!e) return std::nullopt;
    int value = *e * (det.coefficient < 0 ? -1 : 1);
    out[k] = value < 0 ? 1 : 0;
  }
  return out;
}

std::optional<int> braiding_check(const TorusLattice &lattice, Vertex a, Vertex b, Vertex v, Routing routing,
                                  int radius) {
  std::size_t n = lattice.num_edges();
  MixedStabilizerState s = conjugate_by(build_loop_state(lattice), pauli_on(n, lattice.string_between(a, b, routing), 'X'));
  return eigen_check(s, pauli_on(n, lattice.encircling_dual_loop(v, radius), 'Z'));
}

DressedBraiding dressed_braiding_check(const TorusLattice &lattice, const ChannelCircuit &w, Vertex a, Vertex b,
                                       const Region &detector_loop) {
  std::size_t n = lattice.num_edges();
  MixedStabilizerState rho = build_loop_state(lattice);
  Region string = lattice.string_between(a, b);
  MixedStabilizerState sigma = apply_circuit(rho, w);
  ChannelCircuit c = w.inverse();
  ChannelCircuit dressed = dress_operation(c, pauli_string_circuit(n, string, 'X'));
  MixedStabilizerState lhs = apply_circuit(sigma, dressed);
  MixedStabilizerState rhs = apply_circuit(conjugate_by(rho, pauli_on(n, string, 'X')), w);

  DressedBraiding out;
  out.sides_agree = same_state(lhs, rhs);
  ScaledPauli det = dual_apply(c, pauli_on(n, detector_loop, 'Z'));
  if (det.coefficient != 0.0) {
    auto e = eigen_check(lhs, det.word);
    if (e) out.value = *e * (det.coefficient < 0 ? -1 : 1);
  }
  return out;
}

ExperimentReport annulus_degeneracy(const TorusLattice &lattice, const AnnulusOptions &options,
                                    const std::optional<MixedStabilizerState> &base) {
  int L = std::min(lattice.Lx(), lattice.Ly());
  if (options.r_in < 1 || 2 * (options.r_out + 1) > L) {
    throw ContractViolation("annulus needs a hole and room for the string endpoint outside it");
  }
  std::size_t n = lattice.num_edges();
  ExperimentReport rep("annulus");
  rep.input("Lx", std::int64_t(lattice.Lx())).input("Ly", std::int64_t(lattice.Ly()));
  rep.input("center", std::to_string(options.center.i) + "," + std::to_string(options.center.j));
  rep.input("r_in", std::int64_t(options.r_in)).input("r_out", std::int64_t(options.r_out));
  rep.input("deformation_depth", std::int64_t(options.deformation ? options.deformation->depth() : 0));

  Region gamma = lattice.annulus_region(options.center, options.r_in, options.r_out);
  Vertex a = options.center;
  Vertex b = lattice.wrap(a.i, a.j + options.r_out + 1);
  ChannelCircuit w = options.deformation.value_or(ChannelCircuit(n));
  MixedStabilizerState sigma = apply_circuit(base.value_or(build_loop_state(lattice)), w);
  ChannelCircuit dressed = dress_operation(w.inverse(), pauli_string_circuit(n, lattice.string_between(a, b), 'X'));
  MixedStabilizerState sigma_prime = apply_circuit(sigma, dressed);

  MixedStabilizerState r = restrict_to(sigma, gamma);
  MixedStabilizerState rp = restrict_to(sigma_prime, gamma);
  Overlap ov = overlap(r, rp);
  rep.result("annulus_edges", std::int64_t(gamma.size()));
  rep.result("restricted_generators", std::int64_t(r.num_generators()));
  rep.result("restricted_entropy_bits", region_entropy(sigma, gamma).value);
  rep.result("overlap_zero", ov.zero);

  std::int64_t inside = 0, distinguishing = 0;
  for (int i = 0; i < lattice.Ly(); i++) {
    for (int j = 0; j < lattice.Lx(); j++) {
      for (int h = 1; h <= L - 2; h++) {
        for (int wd = 1; wd <= L - 2; wd++) {
          Region rect = lattice.rectangle({{i, j}, h, wd});
          if (!rect.is_subset_of(gamma)) continue;
          inside++;
          if (!reduced_equal(sigma, sigma_prime, rect)) distinguishing++;
        }
      }
    }
  }
  rep.result("rectangles_in_annulus", inside);
  rep.result("distinguishing_rectangles", distinguishing);
  bool indistinguishable = inside > 0 && distinguishing == 0;
  rep.result("nontrivial_set", ov.zero && indistinguishable);
  rep.check("orthogonal", ov.zero);
  rep.check("locally_indistinguishable", indistinguishable);
  return rep;
}

EntropyBits topo_entropy(const MixedStabilizerState &s, const TorusLattice &lattice, Vertex center, int r_in,
                         int r_out) {
  Partition p = lattice.levin_wen_partition(center, r_in, r_out);
  return cmi(s, p.A, p.B, p.C);
}

ExperimentReport two_way_path_demo(const TorusLattice &lattice) {
  std::size_t n = lattice.num_edges();
  ExperimentReport rep("two-way");
  rep.input("Lx", std::int64_t(lattice.Lx())).input("Ly", std::int64_t(lattice.Ly()));

  MixedStabilizerState rho = build_loop_state(lattice);
  MixedStabilizerState mixed = apply_circuit(rho, dephasing_circuit(lattice));
  ChannelCircuit back = reset_circuit(lattice);
  back.append(plaquette_mixing_circuit(lattice));
  MixedStabilizerState restored = apply_circuit(mixed, back);

  rep.result("forward_entropy_bits", total_entropy(mixed).value);
  rep.result("backward_entropy_bits", total_entropy(restored).value);
  rep.result("backward_depth", std::int64_t(back.depth()));
  rep.check("forward_maximally_mixed", same_state(mixed, MixedStabilizerState::maximally_mixed(n)) &&
                                           total_entropy(mixed).value == std::int64_t(n));
  rep.check("backward_restores_loop_state", restored.canonical().generators() == rho.generators());
  auto before = memory_decode(lattice, rho);
  auto after = memory_decode(lattice, mixed);
  rep.result("decode_fails_after_forward", !after.has_value());
  rep.check("decode_before_forward", before == LogicalBits{0, 0});
  rep.check("decode_fails_after_forward", !after.has_value());
  return rep;
}

}  // namespace mixedphase
