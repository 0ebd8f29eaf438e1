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


#include "mixedphase/loop_soup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mixedphase/pauli.hpp"

namespace mixedphase {

namespace {

void check_q(double q) {
  if (!(q >= 0.0 && q <= kCriticalQ)) throw ContractViolation("q must lie in [0, 1/2]");
}

/// log(1 + e^x) without overflow.
double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double> &x, const std::vector<double> &y) {
  double n = double(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); i++) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); i++) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace

double lambda_of_q(double q) {
  check_q(q);
  return q / (1.0 - q);
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw ContractViolation("probability outside [0, 1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log(q) - (1.0 - q) * std::log1p(-q);
}

double delta_s_exact(double q, std::int64_t n_faces) {
  check_q(q);
  if (n_faces < 1) throw ContractViolation("n_faces must be positive");
  if (q == 0.0) return 0.0;
  if (q == kCriticalQ) return -std::numbers::ln2;
  double log_lambda = std::log(q) - std::log1p(-q);
  double log_q = std::log(q);
  double log_p = std::log1p(-q);
  // log C(N, n) by recurrence; each term weight exp(log pmf) <= 1.
  double log_binom = 0.0;
  double acc = 0.0;
  for (std::int64_t n = 0; n <= n_faces; n++) {
    if (n > 0) log_binom += std::log(double(n_faces - n + 1)) - std::log(double(n));
    double log_pmf = log_binom + double(n) * log_q + double(n_faces - n) * log_p;
    acc += std::exp(log_pmf) * softplus(double(n_faces - 2 * n) * log_lambda);
  }
  return acc == 0.0 ? 0.0 : -acc;
}

double entropy_exact(double q, std::int64_t n_faces) {
  return double(n_faces) * binary_entropy(q) + delta_s_exact(q, n_faces);
}

double xi_of_q(double q) {
  check_q(q);
  if (q == kCriticalQ) return std::numeric_limits<double>::infinity();
  double d = kCriticalQ - q;
  return std::numbers::ln2 / 2.0 / (d * d);
}

double delta_s_approx(double q, std::int64_t n_faces) {
  if (n_faces < 1) throw ContractViolation("n_faces must be positive");
  return -std::numbers::ln2 * std::exp(-double(n_faces) / xi_of_q(q));
}

double markov_cmi_model(double q, double n_a, double n_b, double n_c) {
  if (n_a < 0 || n_b < 0 || n_c < 0) throw ContractViolation("region sizes must be non-negative");
  double xi = xi_of_q(q);
  return std::numbers::ln2 * std::exp(-n_b / xi) * -std::expm1(-n_a / xi) * -std::expm1(-n_c / xi);
}

NuFit fit_nu(std::vector<double> q_grid, std::vector<std::int64_t> size_grid) {
  std::sort(q_grid.begin(), q_grid.end());
  std::sort(size_grid.begin(), size_grid.end());
  if (q_grid.size() < 5) throw ContractViolation("fit needs at least 5 q values");
  if (std::adjacent_find(q_grid.begin(), q_grid.end()) != q_grid.end()) {
    throw ContractViolation("repeated q value in fit grid");
  }
  if (q_grid.front() < 0.40 - 1e-12 || q_grid.back() > 0.49 + 1e-12) {
    throw ContractViolation("fit grid must lie in [0.40, 0.49]");
  }
  if (size_grid.size() < 2 || size_grid.front() < 1 || size_grid.back() < 10 * size_grid.front()) {
    throw ContractViolation("size grid must span at least one decade");
  }
  NuFit out;
  out.q_grid = q_grid;
  std::vector<double> lx, ly;
  for (double q : q_grid) {
    std::vector<double> xs, ys;
    for (auto n : size_grid) {
      double ds = delta_s_exact(q, n);
      if (!(ds < 0.0)) throw ContractViolation("delta S underflowed; shrink the size grid");
      xs.push_back(double(n));
      ys.push_back(std::log(-ds / std::numbers::ln2));
    }
    LineFit f = least_squares(xs, ys);
    double xi = -1.0 / f.slope;
    out.xi_hat.push_back(xi);
    lx.push_back(std::log(kCriticalQ - q));
    ly.push_back(std::log(xi));
  }
  LineFit g = least_squares(lx, ly);
  out.nu_hat = -g.slope;
  out.c_hat = std::exp(g.intercept);
  out.r_squared = g.r_squared;
  return out;
}

std::vector<double> default_fit_q_grid() {
  std::vector<double> out;
  for (int k = 40; k <= 49; k++) out.push_back(k / 100.0);
  return out;
}

std::vector<std::int64_t> default_fit_size_grid() { return {100, 200, 400, 800, 1600}; }

}  // namespace mixedphase
