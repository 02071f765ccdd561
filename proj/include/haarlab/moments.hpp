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

#include <complex>
#include <cstdint>
#include <functional>

#include "haarlab/group.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/types.hpp"

namespace haarlab {

/// Positively homogeneous functional of even degree 2k: f(r x) = r^(2k) f(x)
/// for r > 0, which is exactly what the radial factorization of Gaussian
/// vectors requires. Build instances through make_homogeneous_functional,
/// which probes the declared degree before the functional can corrupt a
/// normalization.
///
/// The callable receives amplitudes as stored by AmplitudeVector; for the
/// Quaternion field that is the embedded complex 2D-vector, never raw
/// quaternions.
struct HomogeneousFunctional {
  std::function<std::complex<double>(const AmplitudeVector&)> evaluate;
  int degree_2k = 2;
  FieldTag field = FieldTag::Complex;
};

/// Registers a functional after verifying homogeneity on 8 random scaling
/// probes at the given dimension; throws ContractError when the declared
/// degree does not match. Probe scalings use positive reals (the scaling the
/// moment identities rely on) plus complex phases for the Complex field.
HomogeneousFunctional make_homogeneous_functional(
    std::function<std::complex<double>(const AmplitudeVector&)> evaluate, int degree_2k,
    FieldTag field, int probe_dim, RngStream& probe_rng);

/// Monte Carlo moment estimate. `normalization` is the radial constant that
/// was divided out (1 for direct averages).
struct MomentEstimate {
  std::complex<double> value{0.0, 0.0};
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  double normalization = 1.0;
};

/// k-th moment of a chi-square variable with `dof` degrees of freedom,
/// 2^k Gamma(k + dof/2) / Gamma(dof/2), equal to k! 2^k C(dof/2 + k - 1, k).
/// Evaluated through log-Gamma; throws std::range_error on overflow.
double chi_square_moment(int dof, int k);

/// Radial normalization constant of the group's Gaussian identity: the
/// (2k)-th radial moment of a standard Gaussian over the group's field,
/// i.e. k! 2^k C(D/2 + k - 1, k) for SO(D), k! 2^k C(D + k - 1, k) for
/// SU(D) and k! 2^k C(2D + k - 1, k) for Sp(D).
double normalization_constant(const GroupId& id, int k);

/// Haar expectation of f over pure states of the group, computed as the
/// Gaussian expectation of f over unnormalized Gaussian vectors divided by
/// normalization_constant(id, k).
MomentEstimate haar_expect_gaussian(const GroupId& id, const HomogeneousFunctional& f,
                                    std::int64_t n_samples, RngStream& rng);

/// Brute-force oracle: plain Monte Carlo average of f over normalized Haar
/// states (normalization field = 1).
MomentEstimate haar_expect_direct(const GroupId& id, const HomogeneousFunctional& f,
                                  std::int64_t n_samples, RngStream& rng);

/// Empirical check that the radius ||g|| and a fixed angular statistic
/// (first coordinate of g/||g||) of a standard Gaussian vector are
/// independent: Pearson correlation plus a two-sample KS test of the angular
/// statistic conditioned on the radius being above/below its median.
/// dof = 1 makes the angular statistic two-valued; the report is flagged
/// degenerate and the KS test is skipped.
struct RadialAngularReport {
  double correlation = 0.0;
  double correlation_threshold = 0.0;  // 3/sqrt(n)
  double ks_p_value = 1.0;
  bool degenerate = false;
  std::int64_t n_samples = 0;
};

RadialAngularReport radial_angular_independence(int dof, std::int64_t n_samples, RngStream& rng);

}  // namespace haarlab
