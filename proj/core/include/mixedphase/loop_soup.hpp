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


#ifndef MIXEDPHASE_LOOP_SOUP_HPP
#define MIXEDPHASE_LOOP_SOUP_HPP

#include <cstdint>
#include <vector>

namespace mixedphase {

/// Critical plaquette-flip probability of the loop-soup family.
inline constexpr double kCriticalQ = 0.5;

/// lambda = q / (1 - q).
double lambda_of_q(double q);
/// Binary entropy in nats.
double binary_entropy(double q);

/// Non-extensive entropy correction (nats, <= 0) of a connected region whose
/// face closure has `n_faces` faces:
///   -E_{n ~ Bin(n_faces, q)} log(1 + lambda^(n_faces - 2n)).
double delta_s_exact(double q, std::int64_t n_faces);
/// n_faces * H_b(q) + delta_s_exact.
double entropy_exact(double q, std::int64_t n_faces);

/// Correlation area (log 2 / 2) (1/2 - q)^-2; +infinity at q = 1/2.
double xi_of_q(double q);
/// -log 2 * exp(-n_faces / xi).
double delta_s_approx(double q, std::int64_t n_faces);
/// log 2 * e^(-nB/xi) (1 - e^(-nA/xi)) (1 - e^(-nC/xi)); arguments are face counts.
double markov_cmi_model(double q, double n_a, double n_b, double n_c);

struct NuFit {
  double nu_hat = 0.0;
  double c_hat = 0.0;
  /// Sorted fit grid and the per-q correlation areas.
  std::vector<double> q_grid;
  std::vector<double> xi_hat;
  /// Coefficient of determination of the log-log regression.
  double r_squared = 0.0;
};

/// For each q, xi_hat = -1/slope of log(-delta_s_exact / log 2) against n_faces;
/// then log xi_hat regressed on log(1/2 - q) gives slope -nu_hat and intercept
/// log c_hat.
NuFit fit_nu(std::vector<double> q_grid, std::vector<std::int64_t> size_grid);

std::vector<double> default_fit_q_grid();
std::vector<std::int64_t> default_fit_size_grid();

}  // namespace mixedphase

#endif
