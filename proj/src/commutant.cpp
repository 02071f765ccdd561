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

#include "haarlab/commutant.hpp"

#include <cmath>
#include <complex>

#include "haarlab/norms.hpp"
#include "haarlab/parallel.hpp"
#include "haarlab/stats.hpp"

namespace haarlab {
namespace {

using Cplx = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd flip_operator(int d) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

Eigen::VectorXcd max_entangled_ket(int d) {
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) phi[i * d + i] = 1.0;
  return phi / std::sqrt(static_cast<double>(d));
}

/// Spanning operators in listing order, before orthonormalization.
std::vector<Eigen::MatrixXcd> spanning_operators(const GroupId& id, int k) {
  const int d = id.embedded_dim();
  std::vector<Eigen::MatrixXcd> ops;

  if (k == 1) {
    if (id.group == Group::SO && id.dim == 2) {
      // Plane rotations leave the two circular lines (1, -i) and (1, i)
      // invariant, so the one-fold commutant is two-dimensional.
      Eigen::VectorXcd plus(2), minus(2);
      plus << 1.0, Cplx(0.0, -1.0);
      minus << 1.0, Cplx(0.0, 1.0);
      plus /= std::sqrt(2.0);
      minus /= std::sqrt(2.0);
      ops.push_back(plus * plus.adjoint());
      ops.push_back(minus * minus.adjoint());
    } else {
      ops.push_back(Eigen::MatrixXcd::Identity(d, d));
    }
    return ops;
  }

  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d * d, d * d);
  const Eigen::MatrixXcd flip = flip_operator(d);
  const Eigen::VectorXcd phi = max_entangled_ket(d);
  const Eigen::MatrixXcd phi_proj = phi * phi.adjoint();

  switch (id.group) {
    case Group::SU:
      ops.push_back(identity);
      ops.push_back(flip);
      break;
    case Group::SO: {
      ops.push_back(phi_proj);
      ops.push_back(0.5 * (identity - flip));
      ops.push_back(0.5 * (identity + flip) - phi_proj);
      if (id.dim == 2) {
        // SO(2) is abelian; beyond the generic three operators its two-fold
        // commutant also mixes the two rotation-invariant vectors and keeps
        // each weight-(+/-2) line separately. Appending these makes the
        // basis complete (dimension 6), which the Monte Carlo twirl oracle
        // confirms.
        Eigen::VectorXcd anti = Eigen::VectorXcd::Zero(4);
        anti[1] = 1.0 / std::sqrt(2.0);
        anti[2] = -1.0 / std::sqrt(2.0);
        Eigen::VectorXcd m1 = Eigen::VectorXcd::Zero(4), m2 = Eigen::VectorXcd::Zero(4);
        m1[0] = 1.0 / std::sqrt(2.0);
        m1[3] = -1.0 / std::sqrt(2.0);
        m2[1] = 1.0 / std::sqrt(2.0);
        m2[2] = 1.0 / std::sqrt(2.0);
        const Eigen::VectorXcd e_plus = (m1 - Cplx(0.0, 1.0) * m2) / std::sqrt(2.0);
        const Eigen::VectorXcd e_minus = (m1 + Cplx(0.0, 1.0) * m2) / std::sqrt(2.0);
        const Eigen::MatrixXcd cross = phi * anti.adjoint();
        ops.push_back((cross + cross.adjoint()) / std::sqrt(2.0));
        ops.push_back((Cplx(0.0, 1.0) * cross - Cplx(0.0, 1.0) * cross.adjoint()) /
                      std::sqrt(2.0));
        ops.push_back(e_plus * e_plus.adjoint());
        ops.push_back(e_minus * e_minus.adjoint());
      }
      break;
    }
    case Group::Sp: {
      ops.push_back(identity);
      ops.push_back(flip);
      const Eigen::MatrixXcd i_omega =
          kron(Eigen::MatrixXcd::Identity(d, d), symplectic_form(d));
      ops.push_back(static_cast<double>(d) * (i_omega * phi_proj * i_omega));
      break;
    }
  }
  return ops;
}

Cplx hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.adjoint() * b).trace();
}

}  // namespace

CommutantBasis commutant_basis(const GroupId& id, int k) {
  id.validate();
  if (k != 1 && k != 2)
    throw ContractError("commutant_basis: only k in {1, 2} is supported");
  if (k == 2 && id.embedded_dim() > 8)
    throw ResourceError("commutant_basis: embedded dimension > 8 at k = 2");

  CommutantBasis basis{id, k, {}};
  for (Eigen::MatrixXcd candidate : spanning_operators(id, k)) {
    const double original_norm = candidate.norm();
    // Two projection sweeps keep the basis orthonormal to machine precision.
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& b : basis.elements) {
        // Hermitian candidates against Hermitian basis elements have real
        // overlaps; dropping the (roundoff) imaginary part keeps every
        // basis element exactly Hermitian.
        candidate -= hs_inner(b, candidate).real() * b;
      }
    }
    const double remainder = candidate.norm();
    if (remainder > 1e-9 * (1.0 + original_norm))
      basis.elements.push_back(candidate / remainder);
  }
  return basis;
}

CommutantBasis second_moment_basis(const GroupId& id) { return commutant_basis(id, 2); }

Eigen::MatrixXcd first_moment_channel(const GroupId& id, const Eigen::MatrixXcd& rho) {
  id.validate();
  if (rho.rows() != rho.cols()) throw ContractError("first_moment_channel: rho must be square");
  const Eigen::Index d = rho.rows();
  return (rho.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
}

Eigen::MatrixXcd twirl(const GroupId& id, const Eigen::MatrixXcd& rho,
                       const CommutantBasis& basis) {
  if (!(basis.group == id)) throw ContractError("twirl: basis built for a different group");
  if (basis.elements.empty()) throw ContractError("twirl: empty basis");
  if (rho.rows() != rho.cols() || rho.rows() != basis.elements.front().rows())
    throw ContractError("twirl: rho dimension does not match basis");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const auto& b : basis.elements) out += hs_inner(b, rho) * b;
  return out;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& u, int k) {
  if (k < 1) throw ContractError("kron_power: k must be >= 1");
  Eigen::MatrixXcd out = u;
  for (int i = 1; i < k; ++i) out = kron(out, u);
  return out;
}

McTwirlResult mc_twirl(const GroupId& id, int k, const Eigen::MatrixXcd& rho,
                       std::int64_t n_samples, RngStream& rng) {
  id.validate();
  if (k < 1) throw ContractError("mc_twirl: k must be >= 1");
  if (n_samples < 1) throw ContractError("mc_twirl: n_samples must be >= 1");
  double space = 1.0;
  for (int i = 0; i < k; ++i) space *= id.embedded_dim();
  if (space > 64.0) throw ResourceError("mc_twirl: d^k exceeds the 64-dimensional limit");
  const Eigen::Index dk = static_cast<Eigen::Index>(space);
  if (rho.rows() != dk || rho.cols() != dk)
    throw ContractError("mc_twirl: rho must act on the k-fold space");

  struct Slot {
    std::vector<Accumulator> re, im;
  };
  auto slots = run_sharded<Slot>(
      n_samples, rng, [&](RngStream stream, std::int64_t count, Slot& slot) {
        slot.re.resize(static_cast<std::size_t>(dk * dk));
        slot.im.resize(static_cast<std::size_t>(dk * dk));
        for (std::int64_t i = 0; i < count; ++i) {
          const GroupElement e = sample_group_element(id, stream);
          const Eigen::MatrixXcd uk = kron_power(e.matrix.m, k);
          const Eigen::MatrixXcd t = uk * rho * uk.adjoint();
          for (Eigen::Index c = 0; c < dk; ++c)
            for (Eigen::Index r = 0; r < dk; ++r) {
              const auto idx = static_cast<std::size_t>(c * dk + r);
              slot.re[idx].add(t(r, c).real());
              slot.im[idx].add(t(r, c).imag());
            }
        }
      });

  std::vector<Accumulator> re(static_cast<std::size_t>(dk * dk));
  std::vector<Accumulator> im(static_cast<std::size_t>(dk * dk));
  for (const auto& slot : slots) {
    for (std::size_t i = 0; i < re.size(); ++i) {
      re[i].merge(slot.re[i]);
      im[i].merge(slot.im[i]);
    }
  }

  McTwirlResult result;
  result.mean.resize(dk, dk);
  result.std_error.resize(dk, dk);
  result.n_samples = n_samples;
  for (Eigen::Index c = 0; c < dk; ++c)
    for (Eigen::Index r = 0; r < dk; ++r) {
      const auto idx = static_cast<std::size_t>(c * dk + r);
      result.mean(r, c) = {re[idx].mean(), im[idx].mean()};
      const double n = static_cast<double>(re[idx].count());
      result.std_error(r, c) = std::sqrt((re[idx].variance() + im[idx].variance()) / n);
    }
  return result;
}

double design_moment_deviation(const std::vector<GroupElement>& ensemble_samples,
                               const GroupId& reference_group, int k,
                               const Eigen::MatrixXcd& rho) {
  if (ensemble_samples.empty()) throw ContractError("design_moment_deviation: empty ensemble");
  if (k != 1 && k != 2)
    throw ContractError("design_moment_deviation: only k in {1, 2} is supported");
  const int d = reference_group.embedded_dim();
  double space = 1.0;
  for (int i = 0; i < k; ++i) space *= d;
  const Eigen::Index dk = static_cast<Eigen::Index>(space);
  if (rho.rows() != dk || rho.cols() != dk)
    throw ContractError("design_moment_deviation: rho must act on the k-fold space");

  Eigen::MatrixXcd empirical = Eigen::MatrixXcd::Zero(dk, dk);
  for (const auto& element : ensemble_samples) {
    if (element.matrix.m.rows() != d)
      throw ContractError("design_moment_deviation: ensemble dimension mismatch");
    const Eigen::MatrixXcd uk = kron_power(element.matrix.m, k);
    empirical += uk * rho * uk.adjoint();
  }
  empirical /= static_cast<double>(ensemble_samples.size());

  const CommutantBasis basis = commutant_basis(reference_group, k);
  const Eigen::MatrixXcd exact = twirl(reference_group, rho, basis);
  return operator_norm(empirical - exact);
}

}  // namespace haarlab
