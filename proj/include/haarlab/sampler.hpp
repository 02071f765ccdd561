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
#include <optional>
#include <string>
#include <vector>

#include "haarlab/group.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/types.hpp"

namespace haarlab {

/// Haar-distributed group element. For SO the matrix is real orthogonal with
/// determinant +1; for SU it is unitary (optionally determinant-normalized,
/// see SampleOptions); for Sp it is the 2D x 2D complex embedding of a
/// quaternionic unitary, satisfying U Omega U^T = Omega for the block
/// symplectic form.
struct GroupElement {
  GroupId group;
  DenseMatrix matrix;
};

/// Normalized state produced by the group's Gaussian construction. States
/// are stored as complex amplitude vectors; symplectic states use the
/// interleaved quaternion ket layout of AmplitudeVector.
struct PureState {
  GroupId source_group;
  AmplitudeVector state;
};

struct SampleOptions {
  /// Divide SU samples by a D-th root of the determinant so det = 1 (the
  /// sampled-element invariant). Disabling yields plain Haar U(D) samples,
  /// which differ only by a global phase and induce the same channels.
  bool su_fix_determinant = true;
};

/// Block symplectic form Omega = [[0, I], [-I, 0]] on an even dimension.
Eigen::MatrixXcd symplectic_form(int embedded_dim);

/// Haar sample via a Ginibre matrix over the group's field followed by QR
/// (phase-fixed so the factor is Haar). SO maps the det = -1 coset onto
/// SO(D) by negating the first column; Sp runs a quaternionic Gram-Schmidt
/// and embeds the result.
GroupElement sample_group_element(const GroupId& id, RngStream& rng,
                                  const SampleOptions& options = {});

/// Haar state: a normalized Gaussian vector over the group's field. The
/// symplectic state is returned in the interleaved complex ket layout.
PureState sample_state(const GroupId& id, RngStream& rng);

/// Worst-case defining-constraint residuals of a sampled element:
/// max |(U^dag U - I)_ij|, |det - 1| (SO/SU), max |(U Omega U^T - Omega)_ij|
/// (Sp only, 0 otherwise).
struct ConstraintResiduals {
  double unitarity = 0.0;
  double determinant = 0.0;
  double symplectic = 0.0;
};
ConstraintResiduals constraint_residuals(const GroupElement& element);

/// Left/right invariance self-test: two-sample KS p-values comparing scalar
/// statistics of independent Haar batches {t(U)} against {t(V U')} and
/// {t(U' V)} for a few fixed probe elements V.
struct InvarianceReport {
  struct Row {
    int probe = 0;
    std::string statistic;
    std::string side;  // "left" or "right"
    double p_value = 1.0;
  };
  std::vector<Row> rows;
  double min_p = 1.0;
};

InvarianceReport invariance_check(const GroupId& id, std::int64_t n_samples, int probe_count,
                                  RngStream& rng,
                                  const std::vector<Eigen::MatrixXcd>* probe_override = nullptr);

}  // namespace haarlab
