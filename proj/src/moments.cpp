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

#include "haarlab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "haarlab/parallel.hpp"
#include "haarlab/sampler.hpp"
#include "haarlab/stats.hpp"

namespace haarlab {

HomogeneousFunctional make_homogeneous_functional(
    std::function<std::complex<double>(const AmplitudeVector&)> evaluate, int degree_2k,
    FieldTag field, int probe_dim, RngStream& probe_rng) {
  if (degree_2k < 2 || degree_2k % 2 != 0)
    throw ContractError("homogeneous functional: degree must be even and positive");
  if (probe_dim < 1) throw ContractError("homogeneous functional: probe_dim must be >= 1");

  for (int probe = 0; probe < 8; ++probe) {
    const AmplitudeVector x = gaussian_vector(probe_dim, field, probe_rng);
    const double r = 0.25 + 2.0 * probe_rng.uniform01();
    const std::complex<double> fx = evaluate(x);
    AmplitudeVector scaled_x = x.scaled(r);
    double magnitude_2k = std::pow(r, degree_2k);
    if (field == FieldTag::Complex && probe % 2 == 1) {
      // Complex scalings must enter through |a| only.
      const std::complex<double> phase = std::polar(1.0, 6.28318530717958648 * probe_rng.uniform01());
      scaled_x = AmplitudeVector(field, x.dim(), x.storage() * (phase * r));
    }
    const std::complex<double> fscaled = evaluate(scaled_x);
    const double err = std::abs(fscaled - magnitude_2k * fx);
    if (err > 1e-8 * (1.0 + std::abs(fx) * magnitude_2k))
      throw ContractError("homogeneous functional: declared degree " + std::to_string(degree_2k) +
                          " fails scaling probe");
  }
  return HomogeneousFunctional{std::move(evaluate), degree_2k, field};
}

double chi_square_moment(int dof, int k) {
  if (dof < 1) throw ContractError("chi_square_moment: dof must be >= 1");
  if (k < 0) throw ContractError("chi_square_moment: k must be >= 0");
  if (k == 0) return 1.0;
  const double half_dof = 0.5 * static_cast<double>(dof);
  const double log_value =
      k * std::log(2.0) + std::lgamma(k + half_dof) - std::lgamma(half_dof);
  if (log_value >= std::log(std::numeric_limits<double>::max()))
    throw std::range_error("chi_square_moment: result exceeds double range");
  return std::exp(log_value);
}

double normalization_constant(const GroupId& id, int k) {
  id.validate();
  if (k < 1) throw ContractError("normalization_constant: k must be >= 1");
  // The constant is the (2k)-th radial moment of the Gaussian construction,
  // i.e. a chi-square moment with one dof per real component.
  switch (id.group) {
    case Group::SO: return chi_square_moment(id.dim, k);
    case Group::SU: return chi_square_moment(2 * id.dim, k);
    case Group::Sp: return chi_square_moment(4 * id.dim, k);
  }
  throw ContractError("normalization_constant: unknown group");
}

namespace {

MomentEstimate mc_functional_mean(const GroupId& id, const HomogeneousFunctional& f,
                                  std::int64_t n_samples, RngStream& rng, bool normalized_states) {
  id.validate();
  if (n_samples < 1) throw ContractError("moment estimate: n_samples must be >= 1");
  if (f.field != id.field())
    throw ContractError("moment estimate: functional field " + field_name(f.field) +
                        " does not match group field " + field_name(id.field()));
  if (!f.evaluate) throw ContractError("moment estimate: empty functional");

  auto slots = run_sharded<ComplexAccumulator>(
      n_samples, rng, [&](RngStream stream, std::int64_t count, ComplexAccumulator& acc) {
        for (std::int64_t i = 0; i < count; ++i) {
          if (normalized_states) {
            acc.add(f.evaluate(sample_state(id, stream).state));
          } else {
            acc.add(f.evaluate(gaussian_vector(id.dim, id.field(), stream)));
          }
        }
      });
  ComplexAccumulator merged;
  for (const auto& s : slots) merged.merge(s);

  MomentEstimate estimate;
  estimate.value = merged.mean();
  estimate.std_error = merged.std_error();
  estimate.n_samples = merged.count();
  estimate.normalization = 1.0;
  return estimate;
}

}  // namespace

MomentEstimate haar_expect_gaussian(const GroupId& id, const HomogeneousFunctional& f,
                                    std::int64_t n_samples, RngStream& rng) {
  MomentEstimate estimate = mc_functional_mean(id, f, n_samples, rng, /*normalized_states=*/false);
  const double constant = normalization_constant(id, f.degree_2k / 2);
  estimate.value /= constant;
  estimate.std_error /= constant;
  estimate.normalization = constant;
  return estimate;
}

MomentEstimate haar_expect_direct(const GroupId& id, const HomogeneousFunctional& f,
                                  std::int64_t n_samples, RngStream& rng) {
  return mc_functional_mean(id, f, n_samples, rng, /*normalized_states=*/true);
}

RadialAngularReport radial_angular_independence(int dof, std::int64_t n_samples, RngStream& rng) {
  if (dof < 1) throw ContractError("radial_angular_independence: dof must be >= 1");
  if (n_samples < 10000)
    throw ContractError("radial_angular_independence: need n_samples >= 10^4");

  std::vector<double> radius(static_cast<std::size_t>(n_samples));
  std::vector<double> angular(static_cast<std::size_t>(n_samples));
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const AmplitudeVector g = gaussian_vector(dof, FieldTag::Real, rng);
    const double r = g.norm();
    radius[static_cast<std::size_t>(i)] = r;
    angular[static_cast<std::size_t>(i)] = r > 0.0 ? g.storage()[0].real() / r : 0.0;
  }

  RadialAngularReport report;
  report.n_samples = n_samples;
  report.correlation = pearson_correlation(radius, angular);
  report.correlation_threshold = 3.0 / std::sqrt(static_cast<double>(n_samples));
  report.degenerate = (dof == 1);
  if (report.degenerate) return report;  // angular statistic is +/-1 only

  std::vector<double> sorted_radius = radius;
  std::nth_element(sorted_radius.begin(), sorted_radius.begin() + sorted_radius.size() / 2,
                   sorted_radius.end());
  const double median = sorted_radius[sorted_radius.size() / 2];
  std::vector<double> low, high;
  low.reserve(radius.size() / 2 + 1);
  high.reserve(radius.size() / 2 + 1);
  for (std::size_t i = 0; i < radius.size(); ++i) {
    (radius[i] <= median ? low : high).push_back(angular[i]);
  }
  report.ks_p_value = ks_two_sample_p(std::move(low), std::move(high));
  return report;
}

}  // namespace haarlab
