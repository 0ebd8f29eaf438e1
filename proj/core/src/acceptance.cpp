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


#include "mixedphase/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "mixedphase/channels.hpp"
#include "mixedphase/clifford.hpp"
#include "mixedphase/dense.hpp"
#include "mixedphase/ensemble.hpp"
#include "mixedphase/experiments.hpp"
#include "mixedphase/lattice.hpp"
#include "mixedphase/loop_soup.hpp"
#include "mixedphase/stabilizer.hpp"

namespace mixedphase {

void CheckOutcome::require(bool condition, const std::string &what) {
  if (condition) return;
  if (passed) {
    detail = what + (detail.empty() ? "" : "; " + detail);
  }
  passed = false;
}

void CheckOutcome::note(const std::string &text) { detail += detail.empty() ? text : "; " + text; }

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string vstr(Vertex v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")"; }

bool report_check(const ExperimentReport &rep, const std::string &name) {
  try {
    return rep.find_check(name).passed;
  } catch (const std::out_of_range &) {
    return false;
  }
}

std::vector<Vertex> all_vertices(const TorusLattice &lat) {
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < lat.num_vertices(); k++) out.push_back(lat.vertex_at(k));
  return out;
}

CheckOutcome loop_state_entropy() {
  CheckOutcome out;
  TorusLattice lat(3, 3);
  auto s = build_loop_state(lat, SectorLabel{0, 0});
  auto bits = total_entropy(s).value;
  auto ens = build_loop_ensemble(lat, SectorLabel{0, 0});
  double h = ens.marginal_entropy(lat.all_edges());
  out.require(bits == 8, "stabilizer entropy " + std::to_string(bits) + " bits");
  out.require(ens.support_size() == 256, "ensemble support " + std::to_string(ens.support_size()));
  out.require(std::abs(h - double(bits) * kLn2) <= 1e-10, "Shannon entropy " + fmt("%.12g", h) + " nats");
  out.note("S=" + std::to_string(bits) + " bits, H=" + fmt("%.12f", h) + " nats");
  return out;
}

CheckOutcome zero_markov_length() {
  CheckOutcome out;
  for (int L : {5, 8, 12}) {
    TorusLattice lat(L, L);
    auto s = build_loop_state(lat);
    std::vector<Vertex> centers;
    if (L <= 8) {
      centers = all_vertices(lat);
    } else {
      for (int i = 0; i < L; i += 3) {
        for (int j = 0; j < L; j += 3) centers.push_back({i, j});
      }
    }
    // b >= 2 leaves only a = 0 (empty A) on L = 5, so b = 1 windows with a
    // nonempty A are scanned as well.
    auto wide = markov_scan(s, lat, centers, 2, 0);
    auto thin = markov_scan(s, lat, centers, 1, 1);
    out.require(wide.partitions > 0, "no b>=2 Markov partition fits on L=" + std::to_string(L));
    out.require(wide.max_cmi == 0 && thin.max_cmi == 0, "L=" + std::to_string(L) + " nonzero CMI");
    out.note("L=" + std::to_string(L) + ": " + std::to_string(wide.partitions) + " b>=2 and " +
             std::to_string(thin.partitions) + " b>=1 partitions, max CMI " +
             std::to_string(std::max(wide.max_cmi, thin.max_cmi)));
  }
  return out;
}

CheckOutcome topological_entropy() {
  CheckOutcome out;
  TorusLattice t8(8, 8);
  auto s8 = build_loop_state(t8);
  for (int r_in : {1, 2}) {
    auto gamma = topo_entropy(s8, t8, {4, 4}, r_in, 3);
    out.require(gamma.value == 1, "T(8,8) r_in=" + std::to_string(r_in) + " gives " + std::to_string(gamma.value));
    out.require(gamma.nats() >= kLn2 - 1e-12, "below the log 2 bound");
  }
  TorusLattice t4(4, 4);
  auto s4 = build_loop_state(t4);
  auto ens = build_loop_ensemble(t4);
  double worst = 0.0;
  std::size_t compared = 0;
  auto compare = [&](const Partition &p) {
    double engine = cmi(s4, p.A, p.B, p.C).nats();
    double oracle = ens.cmi(p.A, p.B, p.C);
    worst = std::max(worst, std::abs(engine - oracle));
    compared++;
  };
  compare(t4.levin_wen_partition({2, 2}, 1, 1));
  for (auto v : all_vertices(t4)) {
    compare(t4.markov_partition(v, 1, 1));
    compare(t4.markov_partition(v, 2, 0));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> part(0, 3);
  for (int k = 0; k < 40; k++) {
    std::vector<std::size_t> a, b, c;
    for (std::size_t e = 0; e < t4.num_edges(); e++) {
      int z = part(rng);
      if (z == 0) a.push_back(e);
      if (z == 1) b.push_back(e);
      if (z == 2) c.push_back(e);
    }
    compare(Partition{Region(a), Region(b), Region(c)});
  }
  out.require(worst <= 1e-9, "T(4,4) engine vs oracle deviation " + fmt("%.3g", worst));
  out.note("T(8,8) gamma=1 bit; T(4,4) " + std::to_string(compared) + " tripartitions, max deviation " +
           fmt("%.3g", worst) + " nats");
  return out;
}

CheckOutcome topological_degeneracy() {
  CheckOutcome out;
  TorusLattice lat(5, 5);
  auto rep = td_report(lat);
  for (const char *name : {"sector_signs", "locally_indistinguishable", "pairwise_orthogonal", "markov_cmi_zero",
                           "negative_control_cmi_one"}) {
    out.require(report_check(rep, name), std::string(name) + " failed");
  }
  out.require(rep.passed(), "td report failed");
  out.note(std::to_string(std::get<std::int64_t>(rep.result_value("rectangles"))) + " rectangles compared");
  return out;
}

CheckOutcome anomaly() {
  CheckOutcome out;
  TorusLattice lat(8, 8);
  std::size_t n = lat.num_edges();
  auto s = build_loop_state(lat);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coord(0, 7), rad(0, 2);
  std::bernoulli_distribution coin(0.5);
  int braided = 0;
  while (braided < 20) {
    Vertex a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    int r = rad(rng);
    if (lat.chebyshev(a, b) <= r) continue;
    Routing routing = coin(rng) ? Routing::row_first : Routing::column_first;
    auto value = braiding_check(lat, a, b, a, routing, r);
    out.require(value == -1, "braiding " + vstr(a) + "->" + vstr(b) + " r=" + std::to_string(r) + " not -1");
    auto other = conjugate_by(s, pauli_on(n, lat.string_between(a, b, Routing::row_first), 'X'));
    auto same = conjugate_by(s, pauli_on(n, lat.string_between(a, b, Routing::column_first), 'X'));
    out.require(same_state(other, same), "homotopic strings differ for " + vstr(a) + "->" + vstr(b));
    braided++;
  }
  int closed = 0;
  for (int k = 0; k < 10; k++) {
    Vertex corner{coord(rng), coord(rng)};
    Rect rect{corner, 2 + k % 3, 2 + (k / 3) % 3};
    auto looped = conjugate_by(s, pauli_on(n, lat.rectangle_boundary(rect), 'X'));
    Vertex inside = lat.wrap(corner.i + 1, corner.j + 1);
    auto value = eigen_check(looped, pauli_on(n, lat.encircling_dual_loop(inside, 0), 'Z'));
    out.require(value == 1, "closed loop around " + vstr(inside) + " not +1");
    out.require(same_state(looped, s), "closed loop changed the state");
    closed++;
  }
  out.note(std::to_string(braided) + " braidings = -1, " + std::to_string(closed) + " closed loops = +1");
  return out;
}

CheckOutcome dressed_anomaly() {
  CheckOutcome out;
  TorusLattice lat(8, 8);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coord(0, 7);
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    auto w = random_clifford_circuit(lat, 2, seed);
    Vertex a{coord(rng), coord(rng)}, b = a;
    while (lat.chebyshev(a, b) < 2) b = {coord(rng), coord(rng)};
    int r = lat.chebyshev(a, b) - 1 > 1 ? 1 : 0;
    auto res = dressed_braiding_check(lat, w, a, b, lat.encircling_dual_loop(a, r));
    out.require(res.value == -1, "seed " + std::to_string(seed) + " dressed braiding not -1");
    out.require(res.sides_agree, "seed " + std::to_string(seed) + " dressed string disagrees with W[string]");
  }
  out.note("10 depth-2 circuits give -1");
  return out;
}

CheckOutcome annulus() {
  CheckOutcome out;
  TorusLattice lat(8, 8);
  AnnulusOptions opts;
  opts.center = {4, 4};
  auto bare = annulus_degeneracy(lat, opts);
  out.require(bare.passed(), "loop state annulus check failed");
  opts.deformation = random_clifford_circuit(lat, 2, 1);
  auto deformed = annulus_degeneracy(lat, opts);
  out.require(deformed.passed(), "deformed annulus check failed");
  out.note("loop state and depth-2 deformation: orthogonal and locally indistinguishable");
  return out;
}

CheckOutcome two_way_path() {
  CheckOutcome out;
  for (int L : {4, 6}) {
    auto rep = two_way_path_demo(TorusLattice(L, L));
    for (const char *name : {"forward_maximally_mixed", "backward_restores_loop_state", "decode_before_forward",
                             "decode_fails_after_forward"}) {
      out.require(report_check(rep, name), "L=" + std::to_string(L) + " " + name + " failed");
    }
    auto bits = std::get<std::int64_t>(rep.result_value("forward_entropy_bits"));
    out.require(bits == 2 * L * L, "forward entropy " + std::to_string(bits) + " bits");
  }
  out.note("L=4,6 forward to I/2^n, back to the loop state, memory lost");
  return out;
}

CheckOutcome appendix_b_exact() {
  CheckOutcome out;
  for (std::int64_t nf : {1, 9, 16, 100, 1600, 100000}) {
    out.require(delta_s_exact(0.0, nf) == 0.0, "delta S(0) != 0 at N=" + std::to_string(nf));
    out.require(delta_s_exact(0.5, nf) == -kLn2, "delta S(1/2) != -log 2 at N=" + std::to_string(nf));
  }
  double worst = 0.0;
  std::size_t compared = 0;
  for (int L : {3, 4}) {
    TorusLattice lat(L, L);
    for (double q : {0.05, 0.1, 0.25, 0.4, 0.5}) {
      auto ens = build_tr_to_cl(lat, q);
      auto nf = std::int64_t(lat.num_faces());
      worst = std::max(worst, std::abs(ens.marginal_entropy(lat.all_edges()) - entropy_exact(q, nf)));
      compared++;
      if (L == 4) {
        for (Rect r : {Rect{{0, 0}, 1, 1}, Rect{{1, 1}, 1, 2}, Rect{{0, 0}, 2, 2}}) {
          std::int64_t closure = r.h * r.w + 2 * r.h + 2 * r.w;
          worst = std::max(worst, std::abs(ens.marginal_entropy(lat.rectangle(r)) - entropy_exact(q, closure)));
          compared++;
        }
      }
    }
  }
  out.require(worst <= 1e-9, "oracle vs exact deviation " + fmt("%.3g", worst));
  out.note(std::to_string(compared) + " oracle comparisons, max deviation " + fmt("%.3g", worst) + " nats");
  return out;
}

CheckOutcome appendix_b_criticality() {
  CheckOutcome out;
  auto fit = fit_nu(default_fit_q_grid(), default_fit_size_grid());
  double c_ref = kLn2 / 2.0;
  out.require(fit.nu_hat >= 1.9 && fit.nu_hat <= 2.1, "nu_hat " + fmt("%.4f", fit.nu_hat) + " outside [1.9, 2.1]");
  out.require(std::abs(fit.c_hat - c_ref) <= 0.15 * c_ref,
              "c_hat " + fmt("%.4f", fit.c_hat) + " not within 15% of " + fmt("%.4f", c_ref));
  out.note("nu_hat=" + fmt("%.4f", fit.nu_hat) + " c_hat=" + fmt("%.4f", fit.c_hat) + " r2=" +
           fmt("%.5f", fit.r_squared));
  return out;
}

CheckOutcome lemma1() {
  CheckOutcome out;
  std::mt19937_64 rng(1);
  int agree = 0, all_true = 0, all_false = 0;
  for (int k = 0; k < 1000; k++) {
    std::size_t nq = std::size_t(1 + k % 3);
    auto inst = random_lemma1_instance(rng, nq, k % 2 == 0);
    auto r = lemma1_check(inst.rho, inst.o, inst.channel, 1e-9);
    bool same = r.cond1 == r.cond2 && r.cond2 == r.cond3;
    out.require(same, "instance " + std::to_string(k) + " conditions disagree");
    agree += same;
    all_true += same && r.cond1;
    all_false += same && !r.cond1;
  }
  out.require(all_true > 0 && all_false > 0, "instance family is one-sided");
  out.note(std::to_string(agree) + "/1000 agree (" + std::to_string(all_true) + " true, " +
           std::to_string(all_false) + " false)");
  return out;
}

CheckOutcome coherent_information_check() {
  CheckOutcome out;
  std::mt19937_64 rng(5);
  double id_dev = 0.0, cl_dev = 0.0;
  for (int k = 0; k < 20; k++) {
    std::size_t nq = std::size_t(1 + k % 4);
    auto sigma = DenseState::random(nq, rng, 1 + std::size_t(k) % (std::size_t{1} << nq));
    double s = entropy(sigma);
    id_dev = std::max(id_dev, std::abs(coherent_information(sigma, {KrausChannel::identity()}) - s));
    std::vector<std::size_t> qubits(nq);
    for (std::size_t q = 0; q < nq; q++) qubits[q] = q;
    auto ops = CliffordTableau::random_ops(nq, rng, 24);
    DenseCircuit u{KrausChannel::unitary(qubits, unitary_from_ops(nq, ops))};
    cl_dev = std::max(cl_dev, std::abs(coherent_information(sigma, u) - s));
  }
  out.require(id_dev <= 1e-9, "identity channel deviation " + fmt("%.3g", id_dev));
  out.require(cl_dev <= 1e-9, "Clifford channel deviation " + fmt("%.3g", cl_dev));

  TorusLattice lat(2, 2);
  Matrix rho = DenseState::from_stabilizer(build_loop_state(lat)).matrix();
  std::size_t e = lat.edge_index({0, 0}, Dir::horizontal);
  auto star = lat.vertex_star({0, 0}).edges();
  double drop_max = -1.0;
  for (const auto &region : {std::vector<std::size_t>{e}, star}) {
    auto sigma = DenseState(region.size(), partial_trace(rho, lat.num_edges(), region));
    double s = entropy(sigma);
    DenseCircuit deph;
    for (std::size_t q = 0; q < region.size(); q++) {
      deph.push_back(KrausChannel::pauli_mix(SignedPauli::x_on(region.size(), std::vector<std::size_t>{q})));
    }
    double info = coherent_information(sigma, deph);
    out.require(info < s - 1e-9, "dephasing kept I=" + fmt("%.6f", info) + " at S=" + fmt("%.6f", s));
    drop_max = std::max(drop_max, info - s);
  }
  out.note("identity dev " + fmt("%.2g", id_dev) + ", Clifford dev " + fmt("%.2g", cl_dev) +
           ", dephasing drops I below S(sigma)");
  return out;
}

CheckOutcome relative_entropy_divergence() {
  CheckOutcome out;
  TorusLattice lat(2, 2);
  std::size_t n = lat.num_edges();
  auto s = build_loop_state(lat);
  auto moved = conjugate_by(s, pauli_on(n, lat.string_between({0, 0}, {0, 1}), 'X'));
  auto rho = DenseState::from_stabilizer(s);
  auto sigma = DenseState::from_stabilizer(moved);
  double forward = relative_entropy(rho, sigma), backward = relative_entropy(sigma, rho);
  double self = relative_entropy(rho, rho);
  out.require(std::isinf(forward) && forward > 0, "D(rho||U[rho]) finite: " + fmt("%.6g", forward));
  out.require(std::isinf(backward) && backward > 0, "D(U[rho]||rho) finite: " + fmt("%.6g", backward));
  out.require(std::abs(self) <= 1e-9, "D(rho||rho) = " + fmt("%.3g", self));
  out.note("D = +inf both ways, D(rho||rho) = " + fmt("%.2g", self));
  return out;
}

CheckOutcome data_processing() {
  CheckOutcome out;
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size_dist(4, 6), kind_dist(0, 2);
  std::int64_t increases = 0, strict_drops = 0;
  int done = 0;
  while (done < 500) {
    int L = size_dist(rng);
    TorusLattice lat(L, L);
    std::size_t n = lat.num_edges();
    auto w = random_clifford_circuit(lat, 2, rng());
    auto sigma = apply_circuit(build_loop_state(lat), w);
    std::uniform_int_distribution<int> coord(0, L - 1), side(0, L - 1), width(0, L / 2);
    int a = side(rng), b = width(rng);
    if (a + 2 * b >= L) continue;
    Partition p = lat.markov_partition({coord(rng), coord(rng)}, a, b);
    if (p.C.size() < 2) continue;
    const auto &c = p.C.edges();
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    std::size_t e1 = c[pick(rng)], e2 = c[pick(rng)];
    while (e2 == e1) e2 = c[pick(rng)];
    Gate g = Gate::reset(n, e1);
    switch (kind_dist(rng)) {
      case 0:
        g = Gate::clifford({e1, e2}, CliffordTableau::from_ops(2, CliffordTableau::random_ops(2, rng)));
        break;
      case 1: {
        SignedPauli pw(n);
        std::uniform_int_distribution<int> letter(1, 3);
        for (auto q : {e1, e2}) {
          int l = letter(rng);
          pw.x().set(q, l != 3);
          pw.z().set(q, l != 1);
        }
        g = Gate::pauli_mix(pw);
        break;
      }
      default:
        g = Gate::reset(n, e1, std::bernoulli_distribution(0.5)(rng));
    }
    auto before = cmi(sigma, p.A, p.B, p.C).value;
    auto after = cmi(apply_gate(sigma, g), p.A, p.B, p.C).value;
    if (after > before) {
      increases++;
      out.require(false, "CMI increased " + std::to_string(before) + "->" + std::to_string(after) + " (" +
                             g.kind_name() + ", L=" + std::to_string(L) + ")");
    }
    strict_drops += after < before;
    done++;
  }
  out.note("500 instances, " + std::to_string(increases) + " increases, " + std::to_string(strict_drops) +
           " strict decreases");
  return out;
}

}  // namespace

const std::vector<Criterion> &acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {"loop-state-entropy", {"stabilizer", "ensemble"}, 1.0, loop_state_entropy},
      {"zero-markov-length", {"stabilizer", "markov"}, 10.0, zero_markov_length},
      {"topo-entropy", {"stabilizer", "ensemble"}, 30.0, topological_entropy},
      {"topo-degeneracy", {"stabilizer", "td"}, 60.0, topological_degeneracy},
      {"anomaly", {"stabilizer", "anomaly"}, 30.0, anomaly},
      {"dressed-anomaly", {"stabilizer", "anomaly", "clifford"}, 60.0, dressed_anomaly},
      {"annulus-degeneracy", {"stabilizer", "annulus"}, 60.0, annulus},
      {"two-way-path", {"stabilizer", "channels"}, 10.0, two_way_path},
      {"appendix-b-exact", {"appendix-b", "analytics", "ensemble"}, 60.0, appendix_b_exact},
      {"appendix-b-criticality", {"appendix-b", "analytics"}, 120.0, appendix_b_criticality},
      {"lemma1", {"dense"}, 120.0, lemma1},
      {"coherent-information", {"dense"}, 60.0, coherent_information_check},
      {"relative-entropy", {"dense"}, 10.0, relative_entropy_divergence},
      {"data-processing", {"stabilizer", "markov"}, 120.0, data_processing},
  };
  return criteria;
}

bool criterion_matches(const Criterion &c, const std::string &filter) {
  if (filter.empty() || c.id.find(filter) != std::string::npos) return true;
  for (const auto &t : c.tags) {
    if (t.find(filter) != std::string::npos) return true;
  }
  return false;
}

std::vector<CriterionResult> run_acceptance(const std::string &filter,
                                            const std::function<void(const CriterionResult &)> &on_result) {
  std::vector<CriterionResult> results;
  for (const auto &c : acceptance_criteria()) {
    if (!criterion_matches(c, filter)) continue;
    CriterionResult r;
    r.id = c.id;
    r.limit_seconds = c.limit_seconds;
    auto t0 = std::chrono::steady_clock::now();
    try {
      CheckOutcome o = c.run();
      r.check_passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception &ex) {
      r.check_passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.within_limit = r.seconds < r.limit_seconds;
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result_line(const CriterionResult &r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.2fs / %.0fs)", r.seconds, r.limit_seconds);
  std::string line = std::string(r.passed() ? "PASS " : "FAIL ") + r.id + " " + buf;
  if (!r.within_limit) line += " over time limit;";
  if (!r.detail.empty()) line += " " + r.detail;
  return line;
}

std::string acceptance_summary_json(const std::vector<CriterionResult> &results) {
  nlohmann::ordered_json j;
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    all = all && r.passed();
    arr.push_back({{"id", r.id},
                   {"passed", r.passed()},
                   {"check_passed", r.check_passed},
                   {"seconds", r.seconds},
                   {"limit_seconds", r.limit_seconds},
                   {"detail", r.detail}});
  }
  j["passed"] = all;
  j["criteria"] = arr;
  return j.dump(2);
}

}  // namespace mixedphase
