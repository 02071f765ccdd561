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

#include "haarlab/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "haarlab/parallel.hpp"
#include "haarlab/stats.hpp"

namespace haarlab {

LipschitzFunctional register_lipschitz_functional(
    std::function<double(const GroupElement&)> evaluate, double lipschitz_bound,
    const GroupId& probe_group, RngStream& probe_rng, int probe_pairs) {
  if (!evaluate) throw ContractError("lipschitz functional: empty callable");
  if (!(lipschitz_bound > 0.0)) throw ContractError("lipschitz functional: bound must be > 0");

  LipschitzFunctional f{std::move(evaluate), lipschitz_bound, true, 0.0};
  for (int p = 0; p < probe_pairs; ++p) {
    const GroupElement v1 = sample_group_element(probe_group, probe_rng);
    const GroupElement v2 = sample_group_element(probe_group, probe_rng);
    const double dist = (v1.matrix.m - v2.matrix.m).norm();
    if (dist == 0.0) continue;
    const double ratio = std::abs(f.evaluate(v1) - f.evaluate(v2)) / dist;
    f.max_observed_ratio = std::max(f.max_observed_ratio, ratio);
  }
  // Soft check: flag but keep the declared constant.
  f.soft_check_passed = f.max_observed_ratio <= lipschitz_bound * (1.0 + 1e-9);
  return f;
}

double levy_constant(const GroupId& id) {
  id.validate();
  switch (id.group) {
    case Group::SO:
      if (id.dim <= 2) throw DomainError("levy_constant: SO requires D >= 3");
      return 4.0 / (id.dim - 2);
    case Group::SU:
      return 2.0 / id.dim;
    case Group::Sp:
      return 1.0 / (id.dim + 1);
  }
  throw ContractError("levy_constant: unknown group");
}

double levy_bound(const GroupId& id, double lipschitz, double tau) {
  if (!(lipschitz > 0.0)) throw ContractError("levy_bound: Lipschitz constant must be > 0");
  if (!(tau >= 0.0)) throw ContractError("levy_bound: tau must be >= 0");
  const double c = levy_constant(id);
  return 2.0 * std::exp(-(tau * tau) / (2.0 * lipschitz * lipschitz * c));
}

TailReport empirical_tail(const GroupId& id, const LipschitzFunctional& f,
                          const std::vector<double>& tau_grid, std::int64_t n_samples,
                          RngStream& rng, std::optional<double> exact_mean) {
  if (n_samples < 1000) throw ContractError("empirical_tail: need n_samples >= 10^3");
  if (tau_grid.empty()) throw ContractError("empirical_tail: empty tau grid");
  if (!f.evaluate) throw ContractError("empirical_tail: empty functional");

  struct Slot {
    std::vector<double> values;
  };
  auto slots = run_sharded<Slot>(n_samples, rng,
                                 [&](RngStream stream, std::int64_t count, Slot& slot) {
                                   slot.values.reserve(static_cast<std::size_t>(count));
                                   for (std::int64_t i = 0; i < count; ++i)
                                     slot.values.push_back(
                                         f.evaluate(sample_group_element(id, stream)));
                                 });

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_samples));
  for (const auto& slot : slots) values.insert(values.end(), slot.values.begin(), slot.values.end());

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());

  TailReport report;
  report.tau_grid = tau_grid;
  report.n_samples = static_cast<std::int64_t>(values.size());
  report.empirical_mean = mean;
  report.exact_mean = exact_mean;
  for (double tau : tau_grid) {
    if (!(tau > 0.0)) throw ContractError("empirical_tail: tau grid entries must be > 0");
    std::int64_t hits = 0;
    for (double v : values)
      if (std::abs(v - mean) >= tau) ++hits;
    const double p = static_cast<double>(hits) / static_cast<double>(values.size());
    report.empirical_tail.push_back(p);
    report.analytic_bound.push_back(levy_bound(id, f.lipschitz_bound, tau));
    report.binomial_se.push_back(binomial_se(p, report.n_samples));
  }
  return report;
}

double design_deviation_bound(const DesignDeviationParams& p) {
  if (p.m < 1) throw ContractError("design_deviation_bound: m must be a positive integer");
  if (2 * p.m * p.degree_K > p.k)
    throw ContractError("design_deviation_bound: needs 2 m K <= k");
  if (!(p.delta > 0.0)) throw ContractError("design_deviation_bound: delta must be > 0");
  if (!(p.a > 0.0)) throw ContractError("design_deviation_bound: sub-Gaussian rate a must be > 0");
  if (p.epsilon < 0.0) throw ContractError("design_deviation_bound: epsilon must be >= 0");
  if (!(p.dim_D >= 2.0)) throw ContractError("design_deviation_bound: D must be >= 2");
  if (p.alpha < 0.0 || p.mean_abs < 0.0)
    throw ContractError("design_deviation_bound: alpha and |Ef| must be >= 0");

  constexpr double kC = 2.0;
  const double m = static_cast<double>(p.m);
  // Both terms in log space; the bound spans many orders of magnitude.
  const double log_haar_term = std::log(kC) + m * std::log(m / p.a);
  double log_total = log_haar_term;
  if (p.epsilon > 0.0) {
    const double log_design_term = std::log(p.epsilon) - p.k * std::log(p.dim_D) +
                                   2.0 * m * std::log(p.alpha + p.mean_abs);
    const double hi = std::max(log_haar_term, log_design_term);
    log_total = hi + std::log(std::exp(log_haar_term - hi) + std::exp(log_design_term - hi));
  }
  return std::exp(log_total - 2.0 * m * std::log(p.delta));
}

}  // namespace haarlab
