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
#include <vector>

#include "haarlab/group.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/sampler.hpp"

namespace haarlab {

/// Hermitian, Hilbert-Schmidt-orthonormal basis of the commutant of the
/// k-fold tensor representation, acting on d^k dimensions with d the
/// (embedded) matrix dimension of the group.
struct CommutantBasis {
  GroupId group;
  int order_k = 1;
  std::vector<Eigen::MatrixXcd> elements;
};

/// Commutant basis for k in {1, 2}. The k = 2 spanning operators are the
/// identity and the flip for SU; the maximally entangled projector, the
/// antisymmetric projector and the symmetric complement for SO; identity,
/// flip and the Omega-twisted entangled projector for Sp. The spanning list
/// is orthonormalized in listing order.
///
/// SO(2) is the one abelian special case: the plane-rotation group leaves
/// the two circular-polarization lines invariant, so its commutant is
/// strictly larger than the generic orthogonal one (dimension 2 at k = 1 and
/// 6 at k = 2). The constructor appends the extra invariant operators there,
/// which is what makes the exact twirl agree with the Monte Carlo twirl.
CommutantBasis commutant_basis(const GroupId& id, int k);

/// Convenience wrapper for commutant_basis(id, 2). Requires embedded
/// dimension <= 8 (d^2 x d^2 matrices stay desk-sized).
CommutantBasis second_moment_basis(const GroupId& id);

/// First-moment channel rho -> Tr(rho) I / D. Exact for every group with an
/// irreducible defining representation (all SU/Sp, SO with D >= 3); for
/// SO(2) use twirl() with commutant_basis, see above.
Eigen::MatrixXcd first_moment_channel(const GroupId& id, const Eigen::MatrixXcd& rho);

/// Orthogonal projection of rho onto the span of the basis:
/// sum_eta Tr(B_eta^dag rho) B_eta.
Eigen::MatrixXcd twirl(const GroupId& id, const Eigen::MatrixXcd& rho,
                       const CommutantBasis& basis);

/// Monte Carlo twirl: average of U^(x)k rho U^dag(x)k over sampled group
/// elements, with a per-entry standard error.
struct McTwirlResult {
  Eigen::MatrixXcd mean;
  Eigen::MatrixXd std_error;  // per entry, sqrt((var_re + var_im)/n)
  std::int64_t n_samples = 0;
};

McTwirlResult mc_twirl(const GroupId& id, int k, const Eigen::MatrixXcd& rho,
                       std::int64_t n_samples, RngStream& rng);

/// Operator-norm distance between the empirical twirl of the given ensemble
/// and the exact twirl under the reference group, on the input rho.
double design_moment_deviation(const std::vector<GroupElement>& ensemble_samples,
                               const GroupId& reference_group, int k,
                               const Eigen::MatrixXcd& rho);

/// k-fold Kronecker power.
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& u, int k);

}  // namespace haarlab
