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

#include "haarlab/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "haarlab/norms.hpp"
#include "haarlab/sampler.hpp"

namespace haarlab {
namespace {

double log_sum_exp(double a, double b) {
  const double hi = std::max(a, b);
  if (std::isinf(hi) && hi < 0) return hi;
  return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

double delta_window_upper(double dim) {
  return 0.5 - 1.0 / dim - 0.5 * std::pow(dim, -1.5);
}

}  // namespace

BoundReport measurement_class_size_bound(const ComplexityParams& p) {
  p.validate();
  BoundReport report;
  report.formula_id = "measurement-class-size";
  report.log_value = std::log(2.0) + p.n * std::log(2.0) +
                     static_cast<double>(p.r) * std::log(static_cast<double>(p.n) + 1.0) +
                     static_cast<double>(p.r) * std::log(static_cast<double>(p.gate_set_size));
  report.inputs = {{"n", static_cast<double>(p.n)},
                   {"r", static_cast<double>(p.r)},
                   {"gate_set_size", static_cast<double>(p.gate_set_size)}};
  return report;
}

BoundReport low_complexity_prob_bound(Group group, const ComplexityParams& p) {
  p.validate();
  if (!(p.delta > 0.0 && p.delta < 1.0))
    throw ContractError("low_complexity_prob_bound: delta must lie in (0,1)");
  const double dim = p.dim();
  if (group == Group::SO && dim < 3.0)
    throw DomainError("low_complexity_prob_bound: SO branch needs D >= 3");

  const double log_prefactor =
      std::log(4.0) + p.n * std::log(2.0) +
      static_cast<double>(p.r) * std::log(static_cast<double>(p.n) + 1.0) +
      static_cast<double>(p.r) * std::log(static_cast<double>(p.gate_set_size));
  const double slack = (1.0 - p.delta) * (1.0 - p.delta);

  BoundReport report;
  report.group = group;
  report.formula_id = "low-complexity-prob/" + group_name(group);
  switch (group) {
    case Group::SO:
      report.log_value = log_prefactor + 9.0 / 64.0 - (dim - 2.0) * slack / 32.0;
      break;
    case Group::Sp:
      report.log_value = log_prefactor + 7.0 / 32.0 - dim * slack / 16.0;
      break;
    case Group::SU:
      report.log_value = log_prefactor + 3.0 / 32.0 - dim * slack / 16.0;
      break;
  }
  report.vacuous = report.log_value >= 0.0;
  report.inputs = {{"n", static_cast<double>(p.n)},
                   {"r", static_cast<double>(p.r)},
                   {"delta", p.delta},
                   {"gate_set_size", static_cast<double>(p.gate_set_size)}};
  return report;
}

BoundReport design_low_complexity_prob_bound(Group group, const ComplexityParams& p,
                                             const DesignParams& design, MomentMode mode) {
  p.validate();
  design.validate();
  if (design.k <= 3) throw DomainError("design_low_complexity_prob_bound: requires k > 3");
  const double dim = p.dim();
  const double window = delta_window_upper(dim);
  if (!(p.delta > 0.0 && p.delta < window))
    throw DomainError("design_low_complexity_prob_bound: delta must lie in (0, 1/2 - 1/D - "
                      "1/(2 D^(3/2))) = (0, " +
                      std::to_string(window) + ")");

  const double k = static_cast<double>(design.k);
  const double log_gates = static_cast<double>(p.r) * std::log(static_cast<double>(p.gate_set_size));
  const double log_layers = static_cast<double>(p.r) * std::log(static_cast<double>(p.n) + 1.0);

  BoundReport report;
  report.group = group;
  report.inputs = {{"n", static_cast<double>(p.n)},
                   {"r", static_cast<double>(p.r)},
                   {"delta", p.delta},
                   {"gate_set_size", static_cast<double>(p.gate_set_size)},
                   {"k", k},
                   {"epsilon", design.epsilon}};

  if (mode == MomentMode::AsPrinted) {
    // Specialized bounds at m = k/3 evaluated with real exponents as printed.
    double log_core = std::log(4.0) + log_gates + log_layers;
    switch (group) {
      case Group::SO:
        log_core += (k / 3.0) * std::log(32.0 * k / 3.0) + std::log(dim) -
                    (k / 3.0) * std::log(dim - 2.0);
        break;
      case Group::Sp:
        log_core += (k / 3.0) * std::log(16.0 * k / 3.0) + std::log(dim) -
                    (k / 3.0) * std::log(dim + 2.0);
        break;
      case Group::SU:
        log_core += (k / 3.0) * std::log(16.0 * k / 3.0) + (1.0 - k / 3.0) * std::log(dim);
        break;
    }
    double log_value = log_core;
    if (design.epsilon > 0.0) log_value = log_sum_exp(log_core, std::log(design.epsilon));
    report.log_value = (2.0 * k / 3.0) * std::log(2.0) + log_value;
    report.formula_id = "design-low-complexity-prob/" + group_name(group);
  } else {
    // Integer-moment route: the underlying large-deviation bound at
    // m = floor(k/3), before the printed simplification.
    const int m_int = std::max<int>(1, design.k / 3);
    const double m = static_cast<double>(m_int);
    const double deviation = 1.0 - 1.0 / dim - p.delta;
    const double log_prefactor = std::log(4.0) + std::log(dim) + log_layers + log_gates;
    double rate = 0.0;
    switch (group) {
      case Group::SO: rate = 32.0 * m / (dim - 2.0); break;
      case Group::Sp: rate = 8.0 * m / (dim / 2.0 + 1.0); break;
      case Group::SU: rate = 16.0 * m / dim; break;
    }
    double log_value = log_prefactor + m * std::log(rate);
    if (design.epsilon > 0.0) {
      const double log_design_term = std::log(design.epsilon) - k * std::log(dim) +
                                     2.0 * m * std::log(std::pow(dim, 1.5) + 1.0);
      log_value = log_sum_exp(log_value, log_design_term);
    }
    report.log_value = log_value - 2.0 * m * std::log(deviation);
    report.formula_id = "design-low-complexity-prob-integer-m/" + group_name(group);
    report.inputs["m"] = m;
  }
  report.vacuous = report.log_value >= 0.0;
  return report;
}

BoundReport packing_count(Group group, double dim, double delta_sep) {
  if (!(delta_sep > 0.0 && delta_sep < 1.0))
    throw ContractError("packing_count: Delta must lie in (0,1)");
  if (!(dim >= 2.0)) throw ContractError("packing_count: D must be >= 2");

  const double d4 = std::pow(delta_sep, 4);
  BoundReport report;
  report.group = group;
  report.formula_id = "packing-count/" + group_name(group);
  switch (group) {
    case Group::SO:
      report.log_value = std::log(0.25) - 29.0 / 64.0 + dim * d4 / 32.0;
      break;
    case Group::Sp:
      report.log_value = std::log(0.25) - 1.0 + dim * d4 / 8.0;
      break;
    case Group::SU:
      report.log_value = std::log(0.25) - 0.25 + dim * d4 / 16.0;
      break;
  }
  report.inputs = {{"D", dim}, {"Delta", delta_sep}};
  return report;
}

BoundReport design_packing_count(Group group, double dim, double delta_sep,
                                 const DesignParams& design, MomentMode mode) {
  design.validate();
  if (design.k <= 3) throw DomainError("design_packing_count: requires k > 3");
  if (!(delta_sep > 0.0 && delta_sep < 1.0))
    throw ContractError("design_packing_count: Delta must lie in (0,1)");
  if (!(dim >= 2.0)) throw ContractError("design_packing_count: D must be >= 2");
  if (group == Group::SO && !(dim > 2.0))
    throw DomainError("design_packing_count: SO branch needs D > 2");
  const double overlap = (2.0 - delta_sep) * delta_sep - 1.0 / dim;
  if (!(overlap > 0.0))
    throw DomainError("design_packing_count: requires (2 - Delta) Delta > 1/D");

  const double k = static_cast<double>(design.k);
  BoundReport report;
  report.group = group;
  report.inputs = {{"D", dim}, {"Delta", delta_sep}, {"k", k}, {"epsilon", design.epsilon}};

  if (mode == MomentMode::AsPrinted) {
    double ratio = 0.0;
    switch (group) {
      case Group::SO: ratio = 16.0 * k / (dim - 2.0); break;
      case Group::Sp: ratio = 8.0 * k / (dim + 2.0); break;
      case Group::SU: ratio = 8.0 * k / dim; break;
    }
    double log_denominator = std::log(2.0) + (k / 2.0) * std::log(ratio);
    if (design.epsilon > 0.0)
      log_denominator =
          log_sum_exp(log_denominator, k * std::log(2.0) + std::log(design.epsilon));
    report.log_value = std::log(0.5) + k * std::log(overlap) - log_denominator;
    report.formula_id = "design-packing-count/" + group_name(group);
  } else {
    const int m_int = std::max<int>(1, design.k / 2);
    const double m = static_cast<double>(m_int);
    double rate = 0.0;
    switch (group) {
      case Group::SO: rate = 32.0 * m / (dim - 2.0); break;
      case Group::Sp: rate = 8.0 * m / (dim / 2.0 + 1.0); break;
      case Group::SU: rate = 16.0 * m / dim; break;
    }
    double log_p = std::log(2.0) + m * std::log(rate);
    if (design.epsilon > 0.0) {
      const double log_design_term = std::log(design.epsilon) - k * std::log(dim) +
                                     2.0 * m * std::log(dim + 1.0 / dim);
      log_p = log_sum_exp(log_p, log_design_term);
    }
    log_p -= 2.0 * m * std::log(overlap);
    // Packing grows until N p > 1/2, so the guaranteed count is 1/(2 p).
    report.log_value = -std::log(2.0) - log_p;
    report.formula_id = "design-packing-count-integer-m/" + group_name(group);
    report.inputs["m"] = m;
  }
  return report;
}

BoundReport corollary_packing_count(Group group, double dim, int k) {
  if (k <= 3) throw DomainError("corollary_packing_count: requires k > 3");
  const double delta_sep = std::pow(dim, -1.0 / 3.0);
  DesignParams design;
  design.k = k;
  design.epsilon = std::exp(-k * std::log(2.0) - (k / 2.0) * std::log(dim));
  BoundReport report = design_packing_count(group, dim, delta_sep, design);
  report.formula_id = "corollary-packing-count/" + group_name(group);
  report.inputs["scaling_exponent"] = report.log_value / std::log(dim / k);
  return report;
}

PairwiseFidelityReport empirical_pairwise_fidelity(const GroupId& id, std::int64_t n_states,
                                                   RngStream& rng) {
  if (n_states < 2) throw ContractError("empirical_pairwise_fidelity: need n_states >= 2");
  std::vector<Eigen::VectorXcd> states;
  states.reserve(static_cast<std::size_t>(n_states));
  for (std::int64_t i = 0; i < n_states; ++i)
    states.push_back(sample_state(id, rng).state.storage());

  PairwiseFidelityReport report;
  report.n_states = n_states;
  double sum_fidelity = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double fidelity = std::norm(states[i].dot(states[j]));
      sum_fidelity += fidelity;
      report.max_fidelity = std::max(report.max_fidelity, fidelity);
      ++report.n_pairs;
    }
  report.mean_fidelity = sum_fidelity / static_cast<double>(report.n_pairs);
  report.min_trace_distance = std::sqrt(std::clamp(1.0 - report.max_fidelity, 0.0, 1.0));
  return report;
}

}  // namespace haarlab
