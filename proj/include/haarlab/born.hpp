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

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "haarlab/group.hpp"
#include "haarlab/moments.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/sampler.hpp"

namespace haarlab {

/// Computational-basis outcome distribution of measuring U|0>: the squared
/// magnitudes of the first matrix column.
struct BornDistribution {
  Eigen::VectorXd probs;
  Group source = Group::SU;
};

BornDistribution born_distribution(const GroupElement& element);

/// Total variation distance to the uniform distribution,
/// (1/2) sum_x |P(x) - 1/D|.
double tv_to_uniform(const BornDistribution& p);

/// Asymptotic mean M_G of the TV distance to uniform and the bound
/// Delta_G on the finite-size correction: (sqrt(2/(pi e)), 1/sqrt(2 D)) for
/// SO, (1/e, 2^(-n/2-1)) for SU and Sp.
struct TvConstants {
  double mean = 0.0;
  double delta_bound = 0.0;
};

TvConstants expected_tv_constants(Group group, int n_qubits);

/// Monte Carlo mean of tv_to_uniform over sampled group elements on n
/// qubits. Throws ResourceError for n > 11 (QR cost at D = 2^n).
MomentEstimate estimate_expected_tv(Group group, int n_qubits, std::int64_t n_samples,
                                    RngStream& rng);

/// Statistical-query parameters; the bound is valid while
/// xi_G = M_G - Delta_G - (epsilon + tau) >= 0.
struct SqParams {
  int n = 8;
  double tau = 0.1;
  double epsilon = 0.1;
  double beta = 0.5;

  void validate() const {
    if (n < 1 || n > 60) throw ContractError("SqParams: n out of range");
    if (!(tau > 0.0 && tau < 1.0)) throw ContractError("SqParams: tau must lie in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw ContractError("SqParams: epsilon must lie in (0,1)");
    if (!(beta > 0.0 && beta <= 1.0)) throw ContractError("SqParams: beta must lie in (0,1]");
  }
};

/// One evaluation route of the query lower bound: the bound 'f' on the
/// maximally distinguishable fraction, the bound 'u' on trivial learning,
/// and q_lower = (beta - u)/f - 1.
struct SqRoute {
  double f_bound = 0.0;
  double u_bound = 0.0;
  double q_lower = 0.0;
  bool nontrivial = false;  // false when beta <= u_bound (numerator <= 0)
};

/// Query-complexity lower bound report. `table` evaluates the exponents as
/// printed in the per-group bound table ((2^n - 2), (2^(n-1) + 1) and 2^n
/// factors); `lemma` is the labeled alternative that inserts the group
/// constant C_G literally into the generic exponents (C_G tau^2 / 8 and
/// xi^2 C_G / 2). The two routes disagree by the placement of C_G; both are
/// reported rather than silently reconciled.
struct SqBoundReport {
  Group group = Group::SU;
  SqParams params;
  double mean_M = 0.0;
  double delta_bound = 0.0;
  double xi = 0.0;
  SqRoute table;
  SqRoute lemma;
  double route_q_gap = 0.0;  // |table.q_lower - lemma.q_lower|
};

/// Throws DomainError when xi_G < 0 (accuracy restriction
/// epsilon <= M_G - Delta_G - 2 tau).
SqBoundReport sq_lower_bound(Group group, const SqParams& params);

/// Empirical lower-bound witness for the maximally distinguishable
/// fraction: the frequency of |E_{x~P_U} phi(x) - mean_x phi(x)| >= tau
/// over sampled circuits, for one supplied outcome weighting phi with
/// values in [-1, 1].
struct FractionReport {
  double fraction = 0.0;
  double binomial_se = 0.0;
  std::int64_t n_samples = 0;
};

FractionReport empirical_distinguishable_fraction(Group group, int n_qubits,
                                                  const std::function<double(std::uint64_t)>& phi,
                                                  double tau, std::int64_t n_samples,
                                                  RngStream& rng);

}  // namespace haarlab
