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

#include "haarlab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "haarlab/stats.hpp"

namespace haarlab {
namespace {

using Cplx = std::complex<double>;

Eigen::MatrixXd ginibre_real(int d, RngStream& rng) {
  Eigen::MatrixXd g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.normal();
  return g;
}

Eigen::MatrixXcd ginibre_complex(int d, RngStream& rng) {
  Eigen::MatrixXcd g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = {re, im};
    }
  return g;
}

/// Quaternionic matrix Q = A + j B, columns as quaternionic vectors.
struct QuatMat {
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd b;
};

QuatMat ginibre_quaternion(int d, RngStream& rng) {
  QuatMat g{Eigen::MatrixXcd(d, d), Eigen::MatrixXcd(d, d)};
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const Quaternion q = Quaternion::from_components(rng.normal(), rng.normal(),
                                                       rng.normal(), rng.normal());
      g.a(i, j) = q.a;
      g.b(i, j) = q.b;
    }
  return g;
}

/// Orthonormalizes the columns of q in place under the quaternionic inner
/// product <u,v> = sum conj(u_l) v_l, with Gram-Schmidt coefficients applied
/// on the right (right-module convention). Classical Gram-Schmidt applied
/// twice, blocked into panels so the projections run as matrix products.
///
/// In the split representation the inner product <u,v> = sigma + j tau has
///   sigma = a_u^H a_v + b_u^H b_v,   tau = a_u^T b_v - b_u^T a_v,
/// and the right-multiplied update v -= u (sigma + j tau) reads
///   a_v -= a_u sigma - conj(b_u) tau,   b_v -= conj(a_u) tau + b_u sigma.
void quaternion_gram_schmidt(QuatMat& q) {
  const Eigen::Index d = q.a.rows();
  const Eigen::Index panel = std::min<Eigen::Index>(48, d);

  auto project_block = [&](Eigen::Index done, Eigen::Index lo, Eigen::Index width) {
    // Remove the components of columns [lo, lo+width) along columns [0, done).
    if (done == 0 || width == 0) return;
    const auto qa = q.a.leftCols(done);
    const auto qb = q.b.leftCols(done);
    const auto va = q.a.middleCols(lo, width);
    const auto vb = q.b.middleCols(lo, width);
    const Eigen::MatrixXcd sigma = qa.adjoint() * va + qb.adjoint() * vb;
    const Eigen::MatrixXcd tau = qa.transpose() * vb - qb.transpose() * va;
    q.a.middleCols(lo, width) -= qa * sigma - qb.conjugate() * tau;
    q.b.middleCols(lo, width) -= qa.conjugate() * tau + qb * sigma;
  };

  auto normalize_column = [&](Eigen::Index j) {
    const double nrm = std::sqrt(q.a.col(j).squaredNorm() + q.b.col(j).squaredNorm());
    q.a.col(j) /= nrm;
    q.b.col(j) /= nrm;
  };

  for (Eigen::Index lo = 0; lo < d; lo += panel) {
    const Eigen::Index width = std::min(panel, d - lo);
    project_block(lo, lo, width);
    project_block(lo, lo, width);
    for (Eigen::Index j = lo; j < lo + width; ++j) {
      for (int pass = 0; pass < 2; ++pass) project_block(j, j, 1);
      normalize_column(j);
    }
  }
}

/// Complex embedding of Q = A + j B acting on stacked coordinates (a; b):
/// [[A, -conj(B)], [B, conj(A)]]. The image satisfies U Omega U^T = Omega.
Eigen::MatrixXcd embed_quaternion(const QuatMat& q) {
  const Eigen::Index d = q.a.rows();
  Eigen::MatrixXcd u(2 * d, 2 * d);
  u.topLeftCorner(d, d) = q.a;
  u.topRightCorner(d, d) = -q.b.conjugate();
  u.bottomLeftCorner(d, d) = q.b;
  u.bottomRightCorner(d, d) = q.a.conjugate();
  return u;
}

// Determinant of the orthogonal/unitary factor, assembled from the packed
// reflectors: a Householder matrix I - tau v v^dag (v = (1, essential)) has
// determinant 1 - tau ||v||^2, and householderQ() applies the reflectors
// with conjugated coefficients. Each later phase fix multiplies in its
// phase. O(n^2), so large samplers never pay for an extra LU.
template <typename Scalar>
Scalar q_determinant_from_reflectors(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& packed_qr,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& h_coeffs) {
  const Eigen::Index d = packed_qr.rows();
  Scalar det = Scalar(1);
  for (Eigen::Index i = 0; i < h_coeffs.size(); ++i) {
    const double essential_norm2 =
        i + 1 < d ? packed_qr.col(i).tail(d - i - 1).squaredNorm() : 0.0;
    using std::conj;
    det *= Scalar(1) - conj(h_coeffs[i]) * Scalar(1.0 + essential_norm2);
  }
  return det;
}

Eigen::MatrixXd haar_orthogonal(int d, RngStream& rng, double* det_out) {
  Eigen::MatrixXd g = ginibre_real(d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  double det = q_determinant_from_reflectors<double>(r, qr.hCoeffs());
  // Fix the sign ambiguity of QR so the factor is Haar.
  for (int i = 0; i < d; ++i) {
    if (r(i, i) < 0.0) {
      q.col(i) = -q.col(i);
      det = -det;
    }
  }
  if (det_out != nullptr) *det_out = det > 0.0 ? 1.0 : -1.0;
  return q;
}

Eigen::MatrixXcd haar_unitary(int d, RngStream& rng, Cplx* det_out) {
  Eigen::MatrixXcd g = ginibre_complex(d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  Cplx det = q_determinant_from_reflectors<Cplx>(r, qr.hCoeffs());
  for (int i = 0; i < d; ++i) {
    const Cplx rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) {
      const Cplx phase = rii / mag;
      q.col(i) *= phase;
      det *= phase;
    }
  }
  if (det_out != nullptr) *det_out = det / std::abs(det);
  return q;
}

}  // namespace

Eigen::MatrixXcd symplectic_form(int embedded_dim) {
  if (embedded_dim < 2 || embedded_dim % 2 != 0)
    throw ContractError("symplectic_form: dimension must be even and >= 2");
  const int h = embedded_dim / 2;
  Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(embedded_dim, embedded_dim);
  omega.topRightCorner(h, h) = Eigen::MatrixXcd::Identity(h, h);
  omega.bottomLeftCorner(h, h) = -Eigen::MatrixXcd::Identity(h, h);
  return omega;
}

GroupElement sample_group_element(const GroupId& id, RngStream& rng,
                                  const SampleOptions& options) {
  id.validate();
  switch (id.group) {
    case Group::SO: {
      double det = 1.0;
      Eigen::MatrixXd q = haar_orthogonal(id.dim, rng, &det);
      // A det = -1 draw is mapped onto SO(D) by negating one fixed column;
      // this carries Haar on the reflection coset to Haar on SO(D).
      if (det < 0.0) q.col(0) = -q.col(0);
      return {id, DenseMatrix::real(q)};
    }
    case Group::SU: {
      Cplx det{1.0, 0.0};
      Eigen::MatrixXcd q = haar_unitary(id.dim, rng, &det);
      if (options.su_fix_determinant) {
        // Dividing by a D-th root of the determinant maps Haar on U(D) to
        // Haar on SU(D) and changes only the global phase of each sample.
        q *= std::polar(1.0, -std::arg(det) / static_cast<double>(id.dim));
      }
      return {id, DenseMatrix::complex(std::move(q))};
    }
    case Group::Sp: {
      QuatMat g = ginibre_quaternion(id.dim, rng);
      quaternion_gram_schmidt(g);
      return {id, DenseMatrix::complex(embed_quaternion(g))};
    }
  }
  throw ContractError("sample_group_element: unknown group");
}

PureState sample_state(const GroupId& id, RngStream& rng) {
  id.validate();
  for (;;) {
    AmplitudeVector g = gaussian_vector(id.dim, id.field(), rng);
    const double nrm = g.norm();
    if (nrm < 1e-30) continue;  // probability ~ 0; resample rather than divide
    return {id, g.scaled(1.0 / nrm)};
  }
}

ConstraintResiduals constraint_residuals(const GroupElement& element) {
  const Eigen::MatrixXcd& u = element.matrix.m;
  const Eigen::Index d = u.rows();
  ConstraintResiduals res;
  res.unitarity = (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (element.group.group != Group::Sp) {
    res.determinant = std::abs(u.determinant() - Cplx(1.0, 0.0));
  } else {
    const Eigen::MatrixXcd omega = symplectic_form(static_cast<int>(d));
    res.symplectic = (u * omega * u.transpose() - omega).cwiseAbs().maxCoeff();
  }
  return res;
}

InvarianceReport invariance_check(const GroupId& id, std::int64_t n_samples, int probe_count,
                                  RngStream& rng,
                                  const std::vector<Eigen::MatrixXcd>* probe_override) {
  if (n_samples < 1000) throw ContractError("invariance_check: need n_samples >= 10^3");
  if (probe_count < 1) throw ContractError("invariance_check: need probe_count >= 1");

  struct Statistic {
    std::string name;
    double (*eval)(const Eigen::MatrixXcd&);
  };
  const Statistic stats[] = {
      {"re_trace", [](const Eigen::MatrixXcd& m) { return m.trace().real(); }},
      {"re_entry_00", [](const Eigen::MatrixXcd& m) { return m(0, 0).real(); }},
      {"born_00", [](const Eigen::MatrixXcd& m) { return std::norm(m(0, 0)); }},
  };
  constexpr int n_stats = 3;

  RngStream base_rng = rng.split(1);
  RngStream probe_rng = rng.split(2);

  // Reference batch of Haar statistics.
  std::vector<std::vector<double>> reference(n_stats,
                                             std::vector<double>(static_cast<std::size_t>(n_samples)));
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const GroupElement e = sample_group_element(id, base_rng);
    for (int s = 0; s < n_stats; ++s)
      reference[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = stats[s].eval(e.matrix.m);
  }

  InvarianceReport report;
  for (int p = 0; p < probe_count; ++p) {
    Eigen::MatrixXcd probe;
    if (probe_override != nullptr) {
      probe = probe_override->at(static_cast<std::size_t>(p) % probe_override->size());
    } else {
      probe = sample_group_element(id, probe_rng).matrix.m;
    }

    // Fresh independent batch, transformed on each side by the probe.
    RngStream batch_rng = rng.split(100 + static_cast<std::uint64_t>(p));
    std::vector<std::vector<double>> left(n_stats,
                                          std::vector<double>(static_cast<std::size_t>(n_samples)));
    std::vector<std::vector<double>> right = left;
    for (std::int64_t i = 0; i < n_samples; ++i) {
      const GroupElement e = sample_group_element(id, batch_rng);
      const Eigen::MatrixXcd vu = probe * e.matrix.m;
      const Eigen::MatrixXcd uv = e.matrix.m * probe;
      for (int s = 0; s < n_stats; ++s) {
        left[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = stats[s].eval(vu);
        right[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = stats[s].eval(uv);
      }
    }
    for (int s = 0; s < n_stats; ++s) {
      const auto& ref = reference[static_cast<std::size_t>(s)];
      report.rows.push_back(
          {p, stats[s].name, "left", ks_two_sample_p(ref, left[static_cast<std::size_t>(s)])});
      report.rows.push_back(
          {p, stats[s].name, "right", ks_two_sample_p(ref, right[static_cast<std::size_t>(s)])});
    }
  }
  for (const auto& row : report.rows) report.min_p = std::min(report.min_p, row.p_value);
  return report;
}

}  // namespace haarlab
