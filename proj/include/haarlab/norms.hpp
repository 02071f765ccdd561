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
#include <limits>

#include "haarlab/types.hpp"

namespace haarlab {

/// Schatten p-norm: the vector p-norm of the singular values, computed via
/// bidiagonal divide-and-conquer SVD. p = infinity gives the operator norm.
/// Throws ContractError for p < 1 or non-finite input.
double schatten_norm(const Eigen::MatrixXcd& a, double p);

inline double schatten_norm(const DenseMatrix& a, double p) { return schatten_norm(a.m, p); }

/// Operator norm, i.e. the largest singular value.
inline double operator_norm(const Eigen::MatrixXcd& a) {
  return schatten_norm(a, std::numeric_limits<double>::infinity());
}

/// Trace distance between two pure states, sqrt(1 - |<psi|phi>|^2).
/// Requires unit norm (tolerance 1e-8), equal dimension, and Real or
/// Complex fields.
double trace_distance(const AmplitudeVector& psi, const AmplitudeVector& phi);

}  // namespace haarlab
