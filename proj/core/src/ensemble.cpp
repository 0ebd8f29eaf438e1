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


#include "mixedphase/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace mixedphase {

namespace {

constexpr char kMagic[8] = {'M', 'P', 'E', 'N', 'S', '0', '0', '1'};

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

void check_bits(std::size_t n) {
  if (n > 64) throw CapacityExceeded("ensemble bitstrings are limited to 64 bits");
}

/// Calls f(x) for x = x0 XOR (every combination of basis), in Gray-code order.
template <class F>
void for_each_in_coset(std::uint64_t x0, const std::vector<std::uint64_t> &basis, F f) {
  if (basis.size() >= 63) throw CapacityExceeded("coset too large to enumerate");
  std::uint64_t count = std::uint64_t{1} << basis.size();
  std::uint64_t x = x0;
  f(x);
  for (std::uint64_t k = 1; k < count; k++) {
    x ^= basis[std::countr_zero(k)];
    f(x);
  }
}

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t region_mask(const Region &region, std::size_t num_bits) {
  check_bits(num_bits);
  std::uint64_t m = 0;
  for (auto e : region.edges()) {
    if (e >= num_bits) throw ContractViolation("region edge out of range");
    m |= std::uint64_t{1} << e;
  }
  return m;
}

ClassicalEnsemble::ClassicalEnsemble(std::size_t num_bits, std::size_t cap) : n_(num_bits), cap_(cap) {
  check_bits(num_bits);
}

ClassicalEnsemble ClassicalEnsemble::point(std::size_t num_bits, std::uint64_t bits) {
  ClassicalEnsemble e(num_bits);
  e.add(bits, 1.0);
  return e;
}

ClassicalEnsemble ClassicalEnsemble::uniform(std::size_t num_bits, const std::vector<std::uint64_t> &support,
                                             std::size_t cap) {
  ClassicalEnsemble e(num_bits, cap);
  double w = 1.0 / double(support.size());
  for (auto s : support) e.add(s, w);
  return e;
}

double ClassicalEnsemble::probability(std::uint64_t bits) const {
  auto it = p_.find(bits);
  return it == p_.end() ? 0.0 : it->second;
}

double ClassicalEnsemble::total_probability() const {
  double t = 0;
  for (const auto &[s, w] : p_) t += w;
  return t;
}

void ClassicalEnsemble::add(std::uint64_t bits, double weight) {
  if (n_ < 64 && (bits >> n_) != 0) throw ContractViolation("bitstring wider than the ensemble");
  if (weight < 0) throw ContractViolation("negative probability");
  if (weight == 0) return;
  auto [it, inserted] = p_.try_emplace(bits, 0.0);
  it->second += weight;
  if (inserted && p_.size() > cap_) throw CapacityExceeded("ensemble support exceeds its cap");
}

ClassicalEnsemble ClassicalEnsemble::flip_mix(std::uint64_t mask, double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("flip probability outside [0, 1]");
  ClassicalEnsemble out(n_, cap_);
  out.p_.reserve(std::min(cap_, 2 * p_.size()));
  for (const auto &[s, w] : p_) {
    out.add(s, (1.0 - p) * w);
    out.add(s ^ mask, p * w);
  }
  return out;
}

ClassicalEnsemble ClassicalEnsemble::x_mix(std::size_t e, double p) const {
  if (e >= n_) throw ContractViolation("edge out of range");
  return flip_mix(std::uint64_t{1} << e, p);
}

ClassicalEnsemble ClassicalEnsemble::plaquette_mix(const TorusLattice &lattice, Face f, double q) const {
  return flip_mix(region_mask(lattice.plaquette(f), n_), q);
}

ClassicalEnsemble ClassicalEnsemble::reset(std::size_t e, bool target_one) const {
  if (e >= n_) throw ContractViolation("edge out of range");
  std::uint64_t bit = std::uint64_t{1} << e;
  ClassicalEnsemble out(n_, cap_);
  for (const auto &[s, w] : p_) out.add(target_one ? (s | bit) : (s & ~bit), w);
  return out;
}

ClassicalEnsemble ClassicalEnsemble::flip(std::uint64_t mask) const {
  ClassicalEnsemble out(n_, cap_);
  for (const auto &[s, w] : p_) out.add(s ^ mask, w);
  return out;
}

double ClassicalEnsemble::entropy_of_mask(std::uint64_t mask) const {
  std::unordered_map<std::uint64_t, double> marginal;
  marginal.reserve(p_.size());
  for (const auto &[s, w] : p_) marginal[s & mask] += w;
  double h = 0;
  for (const auto &[s, w] : marginal) {
    if (w > 0) h -= w * std::log(w);
  }
  return h;
}

double ClassicalEnsemble::marginal_entropy(const Region &region) const {
  return entropy_of_mask(region_mask(region, n_));
}

double ClassicalEnsemble::cmi(const Region &a, const Region &b, const Region &c) const {
  std::uint64_t ma = region_mask(a, n_), mb = region_mask(b, n_), mc = region_mask(c, n_);
  if ((ma & mb) || (mb & mc) || (ma & mc)) throw ContractViolation("CMI regions overlap");
  return entropy_of_mask(ma | mb) + entropy_of_mask(mb | mc) - entropy_of_mask(ma | mb | mc) - entropy_of_mask(mb);
}

double ClassicalEnsemble::expectation_z(const Region &region) const {
  std::uint64_t m = region_mask(region, n_);
  double acc = 0;
  for (const auto &[s, w] : p_) acc += parity(s & m) ? -w : w;
  return acc;
}

void ClassicalEnsemble::save_binary(const std::string &path) const {
  std::vector<std::pair<std::uint64_t, double>> rows(p_.begin(), p_.end());
  std::sort(rows.begin(), rows.end());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  std::uint64_t n = n_, count = rows.size();
  f.write(kMagic, sizeof kMagic);
  f.write(reinterpret_cast<const char *>(&n), sizeof n);
  f.write(reinterpret_cast<const char *>(&count), sizeof count);
  for (const auto &[s, w] : rows) {
    f.write(reinterpret_cast<const char *>(&s), sizeof s);
    f.write(reinterpret_cast<const char *>(&w), sizeof w);
  }
}

ClassicalEnsemble ClassicalEnsemble::load_binary(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  char magic[sizeof kMagic];
  std::uint64_t n = 0, count = 0;
  f.read(magic, sizeof magic);
  f.read(reinterpret_cast<char *>(&n), sizeof n);
  f.read(reinterpret_cast<char *>(&count), sizeof count);
  if (!f || !std::equal(magic, magic + sizeof magic, kMagic) || n > 64) {
    throw std::runtime_error("not an ensemble cache file: " + path);
  }
  ClassicalEnsemble e(n, std::max<std::size_t>(kDefaultCap, count));
  for (std::uint64_t k = 0; k < count; k++) {
    std::uint64_t s = 0;
    double w = 0;
    f.read(reinterpret_cast<char *>(&s), sizeof s);
    f.read(reinterpret_cast<char *>(&w), sizeof w);
    if (!f) throw std::runtime_error("truncated ensemble cache file: " + path);
    e.add(s, w);
  }
  return e;
}

double inner_product(const ClassicalEnsemble &a, const ClassicalEnsemble &b) {
  const auto &small = a.support_size() <= b.support_size() ? a : b;
  const auto &large = &small == &a ? b : a;
  double acc = 0;
  for (const auto &[s, w] : small.probabilities()) acc += w * large.probability(s);
  return acc;
}

ClassicalEnsemble build_loop_ensemble(const TorusLattice &lattice, SectorLabel sector, std::size_t cap) {
  std::size_t n = lattice.num_edges();
  check_bits(n);
  std::uint64_t wx = region_mask(lattice.dual_loop(Axis::x, 0), n);
  std::uint64_t wy = region_mask(lattice.dual_loop(Axis::y, 0), n);
  std::vector<std::uint64_t> support;
  if (n <= 26) {
    std::vector<std::uint64_t> stars;
    for (std::size_t k = 0; k < lattice.num_vertices(); k++) {
      stars.push_back(region_mask(lattice.vertex_star(lattice.vertex_at(k)), n));
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); s++) {
      bool closed = true;
      for (auto m : stars) {
        if (parity(s & m)) {
          closed = false;
          break;
        }
      }
      if (closed && parity(s & wx) == sector.sx && parity(s & wy) == sector.sy) support.push_back(s);
    }
  } else {
    std::vector<std::uint64_t> basis;
    for (std::size_t k = 0; k + 1 < lattice.num_faces(); k++) {
      basis.push_back(region_mask(lattice.plaquette(lattice.vertex_at(k)), n));
    }
    std::uint64_t x0 = 0;
    if (sector.sx) x0 ^= region_mask(winding_flip_loop(lattice, Axis::x), n);
    if (sector.sy) x0 ^= region_mask(winding_flip_loop(lattice, Axis::y), n);
    if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > cap) {
      throw CapacityExceeded("loop ensemble exceeds the support cap");
    }
    for_each_in_coset(x0, basis, [&](std::uint64_t s) { support.push_back(s); });
  }
  return ClassicalEnsemble::uniform(n, support, cap);
}

ClassicalEnsemble build_tr_to_cl(const TorusLattice &lattice, double q, std::size_t cap) {
  if (!(q >= 0.0 && q <= 0.5)) throw ContractViolation("q must lie in [0, 1/2]");
  std::size_t n = lattice.num_edges();
  std::size_t nf = lattice.num_faces();
  if (nf > 24) throw CapacityExceeded("face-subset enumeration limited to 24 faces");
  std::vector<std::uint64_t> plaq;
  for (std::size_t k = 0; k < nf; k++) plaq.push_back(region_mask(lattice.plaquette(lattice.vertex_at(k)), n));
  ClassicalEnsemble out(n, cap);
  std::uint64_t count = std::uint64_t{1} << nf;
  std::uint64_t boundary = 0;
  std::uint64_t subset = 0;
  for (std::uint64_t k = 0; k < count; k++) {
    if (k > 0) {
      int f = std::countr_zero(k);
      subset ^= std::uint64_t{1} << f;
      boundary ^= plaq[std::size_t(f)];
    }
    int size = std::popcount(subset);
    double w = std::pow(q, size) * std::pow(1.0 - q, double(nf) - size);
    out.add(boundary, w);
  }
  return out;
}

ClassicalEnsemble ensemble_from_stabilizer(const MixedStabilizerState &s, std::size_t cap) {
  std::size_t n = s.num_qubits();
  check_bits(n);
  // Row-reduce the constraints parity(x & z_mask) = [sign == -1].
  std::vector<std::pair<std::uint64_t, int>> rows;
  for (const auto &g : s.generators()) {
    if (g.x().any()) throw ContractViolation("ensemble conversion needs a Z-diagonal state");
    std::uint64_t m = 0;
    for (auto q : g.z().indices()) m |= std::uint64_t{1} << q;
    rows.emplace_back(m, g.sign() < 0 ? 1 : 0);
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); c++) {
    std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = r;
    while (p < rows.size() && !(rows[p].first & bit)) p++;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t k = 0; k < rows.size(); k++) {
      if (k != r && (rows[k].first & bit)) {
        rows[k].first ^= rows[r].first;
        rows[k].second ^= rows[r].second;
      }
    }
    pivot_col.push_back(int(c));
    r++;
  }
  std::uint64_t pivots = 0;
  for (int c : pivot_col) pivots |= std::uint64_t{1} << c;
  std::uint64_t x0 = 0;
  for (std::size_t k = 0; k < pivot_col.size(); k++) {
    if (rows[k].second) x0 |= std::uint64_t{1} << pivot_col[k];
  }
  std::vector<std::uint64_t> basis;
  for (std::size_t f = 0; f < n; f++) {
    std::uint64_t bit = std::uint64_t{1} << f;
    if (pivots & bit) continue;
    std::uint64_t v = bit;
    for (std::size_t k = 0; k < pivot_col.size(); k++) {
      if (rows[k].first & bit) v |= std::uint64_t{1} << pivot_col[k];
    }
    basis.push_back(v);
  }
  if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > cap) {
    throw CapacityExceeded("stabilizer state support exceeds the cap");
  }
  std::vector<std::uint64_t> support;
  for_each_in_coset(x0, basis, [&](std::uint64_t x) { support.push_back(x); });
  return ClassicalEnsemble::uniform(n, support, cap);
}

std::vector<MarkovSweepRow> markov_sweep_partial_dephasing(const TorusLattice &lattice,
                                                           const std::vector<double> &p_grid,
                                                           const std::vector<int> &widths, int a_side,
                                                           Vertex center) {
  ClassicalEnsemble loops = build_loop_ensemble(lattice);
  int L = std::min(lattice.Lx(), lattice.Ly());
  std::vector<MarkovSweepRow> rows;
  for (double p : p_grid) {
    ClassicalEnsemble e = loops;
    for (std::size_t k = 0; k < lattice.num_edges(); k++) e = e.x_mix(k, p);
    for (int w : widths) {
      if (w < 0 || a_side + 2 * w >= L) continue;
      Partition part = lattice.markov_partition(center, a_side, w);
      rows.push_back({p, w, e.cmi(part.A, part.B, part.C)});
    }
  }
  return rows;
}

ClassicalEnsemble cached_ensemble(const std::string &key, const std::function<ClassicalEnsemble()> &build) {
  const char *dir = std::getenv("MIXEDPHASE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return build();
  std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.ens", static_cast<unsigned long long>(fnv1a(key)));
  std::filesystem::path file = root / name;
  if (std::filesystem::exists(file)) return ClassicalEnsemble::load_binary(file.string());
  ClassicalEnsemble e = build();
  e.save_binary(file.string());
  return e;
}

}  // namespace mixedphase
