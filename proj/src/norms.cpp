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

#include "haarlab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace haarlab {

double schatten_norm(const Eigen::MatrixXcd& a, double p) {
  if (!(p >= 1.0)) throw ContractError("schatten_norm: p must be in [1, inf]");
  if (!a.allFinite()) throw ContractError("schatten_norm: non-finite input");

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0) return 0.0;

  if (std::isinf(p)) return s[0];
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();

  // Scale by the largest singular value so s^p cannot overflow.
  const double top = s[0];
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s[i] / top, p);
  return top * std::pow(acc, 1.0 / p);
}

double trace_distance(const AmplitudeVector& psi, const AmplitudeVector& phi) {
  if (psi.field() == FieldTag::Quaternion || phi.field() == FieldTag::Quaternion)
    throw ContractError("trace_distance: fields must be Real or Complex");
  if (psi.dim() != phi.dim()) throw ContractError("trace_distance: dimension mismatch");
  constexpr double kNormTol = 1e-8;
  if (std::abs(psi.norm() - 1.0) > kNormTol || std::abs(phi.norm() - 1.0) > kNormTol)
    throw ContractError("trace_distance: state not normalized");

  const double fidelity = std::norm(psi.storage().dot(phi.storage()));
  return std::sqrt(std::clamp(1.0 - fidelity, 0.0, 1.0));
}

}  // namespace haarlab
