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

#include "haarlab/born.hpp"

#include <cmath>
#include <vector>

#include "haarlab/parallel.hpp"
#include "haarlab/stats.hpp"

namespace haarlab {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;

GroupId qubit_group(Group group, int n_qubits) { return GroupId::for_qubits(group, n_qubits); }

}  // namespace

BornDistribution born_distribution(const GroupElement& element) {
  const Eigen::Index d = element.matrix.rows();
  BornDistribution p;
  p.source = element.group.group;
  p.probs.resize(d);
  for (Eigen::Index x = 0; x < d; ++x) p.probs[x] = std::norm(element.matrix.m(x, 0));
  const double total = p.probs.sum();
  if (std::abs(total - 1.0) > 1e-12)
    throw ContractError("born_distribution: column norm deviates from 1");
  return p;
}

double tv_to_uniform(const BornDistribution& p) {
  const Eigen::Index d = p.probs.size();
  if (d < 1) throw ContractError("tv_to_uniform: empty distribution");
  const double uniform = 1.0 / static_cast<double>(d);
  double total = 0.0;
  for (Eigen::Index x = 0; x < d; ++x) total += std::abs(p.probs[x] - uniform);
  return 0.5 * total;
}

TvConstants expected_tv_constants(Group group, int n_qubits) {
  if (n_qubits < 1) throw ContractError("expected_tv_constants: n must be >= 1");
  TvConstants c;
  if (group == Group::SO) {
    c.mean = std::sqrt(2.0 / (kPi * std::exp(1.0)));
    c.delta_bound = 1.0 / std::sqrt(2.0 * std::ldexp(1.0, n_qubits));
  } else {
    c.mean = std::exp(-1.0);
    c.delta_bound = std::exp2(-0.5 * n_qubits - 1.0);
  }
  return c;
}

MomentEstimate estimate_expected_tv(Group group, int n_qubits, std::int64_t n_samples,
                                    RngStream& rng) {
  if (n_qubits > 11)
    throw ResourceError("estimate_expected_tv: n > 11 exceeds the desk-scale QR budget");
  const GroupId id = qubit_group(group, n_qubits);
  if (n_samples < 2) throw ContractError("estimate_expected_tv: need n_samples >= 2");

  auto slots = run_sharded<Accumulator>(
      n_samples, rng, [&](RngStream stream, std::int64_t count, Accumulator& acc) {
        for (std::int64_t i = 0; i < count; ++i) {
          const GroupElement e = sample_group_element(id, stream);
          acc.add(tv_to_uniform(born_distribution(e)));
        }
      });
  Accumulator merged;
  for (const auto& s : slots) merged.merge(s);

  MomentEstimate estimate;
  estimate.value = merged.mean();
  estimate.std_error = merged.std_error();
  estimate.n_samples = merged.count();
  estimate.normalization = 1.0;
  return estimate;
}

SqBoundReport sq_lower_bound(Group group, const SqParams& params) {
  params.validate();
  const TvConstants constants = expected_tv_constants(group, params.n);

  SqBoundReport report;
  report.group = group;
  report.params = params;
  report.mean_M = constants.mean;
  report.delta_bound = constants.delta_bound;
  report.xi = constants.mean - constants.delta_bound - (params.epsilon + params.tau);
  if (report.xi < 0.0)
    throw DomainError(
        "sq_lower_bound: xi_G < 0; the bound requires accuracy epsilon <= M_G - Delta_G - "
        "2 tau");

  const double dim = std::ldexp(1.0, params.n);
  const double tau2 = params.tau * params.tau;
  const double xi2 = report.xi * report.xi;

  auto finish = [&](SqRoute& route) {
    route.q_lower = (params.beta - route.u_bound) / route.f_bound - 1.0;
    route.nontrivial = route.q_lower > 0.0;
  };

  // Route 1: exponents as printed in the per-group table.
  switch (group) {
    case Group::SO:
      report.table.f_bound = 2.0 * std::exp(-(dim - 2.0) * tau2 / 32.0);
      report.table.u_bound = 2.0 * std::exp(-(dim - 2.0) * xi2 / 8.0);
      break;
    case Group::Sp:
      report.table.f_bound = 2.0 * std::exp(-(dim / 2.0 + 1.0) * tau2 / 8.0);
      report.table.u_bound = 2.0 * std::exp(-(dim / 2.0 + 1.0) * xi2 / 2.0);
      break;
    case Group::SU:
      report.table.f_bound = 2.0 * std::exp(-dim * tau2 / 16.0);
      report.table.u_bound = 2.0 * std::exp(-dim * xi2 / 4.0);
      break;
  }
  finish(report.table);

  // Route 2: the generic exponents with the group constant inserted
  // literally (C_G multiplying the exponent).
  const GroupId id = qubit_group(group, params.n);
  const double c_g = [&] {
    switch (group) {
      case Group::SO: return 4.0 / (id.dim - 2.0);
      case Group::SU: return 2.0 / id.dim;
      case Group::Sp: return 1.0 / (id.dim + 1.0);
    }
    throw ContractError("sq_lower_bound: unknown group");
  }();
  report.lemma.f_bound = 2.0 * std::exp(-c_g * tau2 / 8.0);
  report.lemma.u_bound = 2.0 * std::exp(-xi2 * c_g / 2.0);
  finish(report.lemma);

  report.route_q_gap = std::abs(report.table.q_lower - report.lemma.q_lower);
  return report;
}

FractionReport empirical_distinguishable_fraction(Group group, int n_qubits,
                                                  const std::function<double(std::uint64_t)>& phi,
                                                  double tau, std::int64_t n_samples,
                                                  RngStream& rng) {
  if (!phi) throw ContractError("empirical_distinguishable_fraction: empty phi");
  if (!(tau > 0.0)) throw ContractError("empirical_distinguishable_fraction: tau must be > 0");
  if (n_qubits > 11)
    throw ResourceError("empirical_distinguishable_fraction: n > 11 exceeds the QR budget");
  if (n_samples < 1) throw ContractError("empirical_distinguishable_fraction: n_samples >= 1");

  const GroupId id = qubit_group(group, n_qubits);
  const std::uint64_t dim = 1ull << n_qubits;

  std::vector<double> weights(dim);
  double uniform_mean = 0.0;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double w = phi(x);
    if (!(w >= -1.0 && w <= 1.0))
      throw ContractError("empirical_distinguishable_fraction: phi out of [-1,1]");
    weights[x] = w;
    uniform_mean += w;
  }
  uniform_mean /= static_cast<double>(dim);

  struct Slot {
    std::int64_t hits = 0;
    std::int64_t total = 0;
  };
  auto slots = run_sharded<Slot>(n_samples, rng,
                                 [&](RngStream stream, std::int64_t count, Slot& slot) {
                                   for (std::int64_t i = 0; i < count; ++i) {
                                     const GroupElement e = sample_group_element(id, stream);
                                     const BornDistribution p = born_distribution(e);
                                     double expectation = 0.0;
                                     for (std::uint64_t x = 0; x < dim; ++x)
                                       expectation += p.probs[static_cast<Eigen::Index>(x)] *
                                                      weights[x];
                                     if (std::abs(expectation - uniform_mean) >= tau) ++slot.hits;
                                     ++slot.total;
                                   }
                                 });
  std::int64_t hits = 0, total = 0;
  for (const auto& s : slots) {
    hits += s.hits;
    total += s.total;
  }

  FractionReport report;
  report.n_samples = total;
  report.fraction = static_cast<double>(hits) / static_cast<double>(total);
  report.binomial_se = binomial_se(report.fraction, total);
  return report;
}

}  // namespace haarlab
