// Copyright 2026 The haarlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "haarlab/group.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/sampler.hpp"

namespace haarlab {

/// Real functional on group elements with a declared Lipschitz bound with
/// respect to the Hilbert-Schmidt distance. register_lipschitz_functional
/// runs a soft probe-pair check and records the worst observed ratio.
struct LipschitzFunctional {
  std::function<double(const GroupElement&)> evaluate;
  double lipschitz_bound = 1.0;
  bool soft_check_passed = true;
  double max_observed_ratio = 0.0;
};

LipschitzFunctional register_lipschitz_functional(
    std::function<double(const GroupElement&)> evaluate, double lipschitz_bound,
    const GroupId& probe_group, RngStream& probe_rng, int probe_pairs = 100);

/// Sub-Gaussian constant of the group's concentration inequality:
/// 4/(D-2) for SO(D) (needs D >= 3), 2/D for SU(D), 1/(D+1) for Sp(D)
/// with D the quaternionic dimension.
double levy_constant(const GroupId& id);

/// Tail bound 2 exp(-tau^2 / (2 L^2 C_G)) for an L-Lipschitz functional.
double levy_bound(const GroupId& id, double lipschitz, double tau);

/// Empirical tail probabilities of |f(U) - mean| over a tau grid, paired
/// with the analytic bound values and binomial standard errors.
struct TailReport {
  std::vector<double> tau_grid;
  std::vector<double> empirical_tail;
  std::vector<double> analytic_bound;
  std::vector<double> binomial_se;
  std::int64_t n_samples = 0;
  double empirical_mean = 0.0;
  std::optional<double> exact_mean;  // printed alongside when known
};

TailReport empirical_tail(const GroupId& id, const LipschitzFunctional& f,
                          const std::vector<double>& tau_grid, std::int64_t n_samples,
                          RngStream& rng, std::optional<double> exact_mean = std::nullopt);

/// Large-deviation bound for a degree-K polynomial under an eps-approximate
/// k-design, delta^(-2m) (C (m/a)^m + (eps/D^k)(alpha + |Ef|)^(2m)) with
/// C = 2 and a the sub-Gaussian rate of the exact-Haar tail (for an
/// L-Lipschitz polynomial, a = 1/(2 L^2 C_G)). Requires integer m with
/// 2 m K <= k.
struct DesignDeviationParams {
  int k = 4;
  double epsilon = 0.0;
  int degree_K = 1;
  double alpha = 1.0;     // sum of |monomial coefficients|
  double mean_abs = 0.0;  // |E_mu f|
  double delta = 1.0;
  int m = 1;
  double a = 1.0;
  double dim_D = 2.0;
};

double design_deviation_bound(const DesignDeviationParams& params);

}  // namespace haarlab
