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

#include <doctest.h>

#include <cmath>

#include "haarlab/commutant.hpp"
#include "haarlab/norms.hpp"

using namespace haarlab;

namespace {

Eigen::MatrixXcd random_matrix(int dim, RngStream& rng, double scale = 1.0) {
  Eigen::MatrixXcd m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      m(r, c) = std::complex<double>(re, im) * scale;
    }
  return m;
}

}  // namespace

TEST_CASE("basis sizes match the commutant dimensions") {
  CHECK(commutant_basis(GroupId(Group::SU, 2), 1).elements.size() == 1);
  CHECK(commutant_basis(GroupId(Group::SO, 4), 1).elements.size() == 1);
  CHECK(commutant_basis(GroupId(Group::Sp, 2), 1).elements.size() == 1);
  CHECK(commutant_basis(GroupId(Group::SO, 2), 1).elements.size() == 2);

  CHECK(commutant_basis(GroupId(Group::SU, 2), 2).elements.size() == 2);
  CHECK(commutant_basis(GroupId(Group::SU, 4), 2).elements.size() == 2);
  CHECK(commutant_basis(GroupId(Group::SO, 4), 2).elements.size() == 3);
  CHECK(commutant_basis(GroupId(Group::SO, 2), 2).elements.size() == 6);
  CHECK(commutant_basis(GroupId(Group::Sp, 2), 2).elements.size() == 3);
  // Sp(1) embeds as SU(2); the twisted projector collapses into span{I, F}.
  CHECK(commutant_basis(GroupId(Group::Sp, 1), 2).elements.size() == 2);

  CHECK_THROWS_AS(commutant_basis(GroupId(Group::SU, 4), 3), ContractError);
  CHECK_THROWS_AS(commutant_basis(GroupId(Group::SU, 16), 2), ResourceError);
}

TEST_CASE("basis elements are hermitian, orthonormal, and commute") {
  RngStream rng(113, 0);
  for (const GroupId& id : {GroupId(Group::SO, 2), GroupId(Group::SO, 4),
                            GroupId(Group::SU, 2), GroupId(Group::SU, 4),
                            GroupId(Group::Sp, 1), GroupId(Group::Sp, 2)}) {
    for (int k : {1, 2}) {
      const CommutantBasis basis = commutant_basis(id, k);
      for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const Eigen::MatrixXcd& bi = basis.elements[i];
        CHECK((bi - bi.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
          const std::complex<double> inner = (bi.adjoint() * basis.elements[j]).trace();
          CHECK(std::abs(inner - (i == j ? 1.0 : 0.0)) <= 1e-10);
        }
      }
      RngStream stream = rng.split(100 * static_cast<int>(id.group) + 10 * id.dim + k);
      for (int probe = 0; probe < 100; ++probe) {
        const Eigen::MatrixXcd uk =
            kron_power(sample_group_element(id, stream).matrix.m, k);
        for (const auto& b : basis.elements)
          CHECK((uk * b - b * uk).cwiseAbs().maxCoeff() <= 1e-8);
      }
    }
  }
}

TEST_CASE("first moment channel") {
  RngStream rng(127, 0);
  // |0><0| goes to I/D.
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  rho(0, 0) = 1.0;
  const Eigen::MatrixXcd out = first_moment_channel(GroupId(Group::SO, 4), rho);
  CHECK((out - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-15);

  // Identity is a fixed point.
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(6, 6);
  CHECK((first_moment_channel(GroupId(Group::SU, 6), eye) - eye).cwiseAbs().maxCoeff() <= 1e-15);

  // Traceless input maps to zero (Z (x) I on the Sp embedding space).
  Eigen::MatrixXcd z_tensor_i = Eigen::MatrixXcd::Zero(4, 4);
  z_tensor_i.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(first_moment_channel(GroupId(Group::Sp, 2), z_tensor_i).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK_THROWS_AS(first_moment_channel(GroupId(Group::SU, 4), Eigen::MatrixXcd::Zero(2, 3)),
                  ContractError);
  (void)rng;
}

TEST_CASE("twirl is a trace-preserving projector matching the k=1 channel") {
  RngStream rng(131, 0);
  for (const GroupId& id :
       {GroupId(Group::SU, 3), GroupId(Group::SO, 3), GroupId(Group::Sp, 2)}) {
    const CommutantBasis basis = commutant_basis(id, 1);
    const int dim = id.embedded_dim();
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd rho = random_matrix(dim, rng);
      const Eigen::MatrixXcd once = twirl(id, rho, basis);
      CHECK((once - first_moment_channel(id, rho)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((twirl(id, once, basis) - once).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs(once.trace() - rho.trace()) <= 1e-12);
    }
  }

  // Hermiticity preservation at k = 2.
  const GroupId su2(Group::SU, 2);
  const CommutantBasis basis2 = commutant_basis(su2, 2);
  Eigen::MatrixXcd h = random_matrix(4, rng);
  h = (h + h.adjoint()).eval();
  const Eigen::MatrixXcd th = twirl(su2, h, basis2);
  CHECK((th - th.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(twirl(su2, Eigen::MatrixXcd::Identity(3, 3), basis2), ContractError);
}

TEST_CASE("mc twirl agrees with the exact projection") {
  RngStream rng(137, 0);
  for (const GroupId& id :
       {GroupId(Group::SU, 2), GroupId(Group::SO, 2), GroupId(Group::Sp, 1)}) {
    const CommutantBasis basis = commutant_basis(id, 2);
    const Eigen::MatrixXcd rho = random_matrix(id.embedded_dim() * id.embedded_dim(),
                                               rng, 0.5);
    const Eigen::MatrixXcd exact = twirl(id, rho, basis);
    RngStream mc = rng.split(static_cast<int>(id.group));
    const McTwirlResult sampled = mc_twirl(id, 2, rho, 20000, mc);
    for (Eigen::Index c = 0; c < rho.cols(); ++c)
      for (Eigen::Index r = 0; r < rho.rows(); ++r)
        CHECK(std::abs(sampled.mean(r, c) - exact(r, c)) <=
              5.0 * sampled.std_error(r, c) + 1e-12);
  }
}

TEST_CASE("mc twirl error shrinks with the sample count") {
  RngStream rng(139, 0);
  const GroupId id(Group::SU, 2);
  const CommutantBasis basis = commutant_basis(id, 2);
  const Eigen::MatrixXcd rho = random_matrix(4, rng, 0.5);
  const Eigen::MatrixXcd exact = twirl(id, rho, basis);

  double first_dev = 0.0, last_dev = 0.0;
  std::int64_t n = 2000;
  for (int doubling = 0; doubling < 4; ++doubling, n *= 2) {
    RngStream mc = rng.split(doubling);
    const McTwirlResult sampled = mc_twirl(id, 2, rho, n, mc);
    const double dev = (sampled.mean - exact).cwiseAbs().maxCoeff();
    if (doubling == 0) first_dev = dev;
    last_dev = dev;
  }
  // 8x the samples: expect roughly sqrt(8) ~ 2.8x shrinkage; require 1.5x.
  CHECK(last_dev < first_dev / 1.5);
}

TEST_CASE("mc twirl resource limit") {
  RngStream rng(141, 0);
  CHECK_THROWS_AS(
      mc_twirl(GroupId(Group::SU, 16), 2, Eigen::MatrixXcd::Identity(256, 256), 10, rng),
      ResourceError);
}

TEST_CASE("design moment deviation") {
  RngStream rng(149, 0);
  const GroupId su4(Group::SU, 4);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  rho(0, 0) = 1.0;

  // A Haar ensemble of the same group: deviation at the MC-error scale.
  std::vector<GroupElement> haar_ensemble;
  for (int i = 0; i < 4000; ++i) haar_ensemble.push_back(sample_group_element(su4, rng));
  CHECK(design_moment_deviation(haar_ensemble, su4, 1, rho) <=
        5.0 * 4.0 / std::sqrt(4000.0));

  // Embedded symplectic samples are an exact state design for k = 1.
  std::vector<GroupElement> sp_ensemble;
  RngStream sp_rng = rng.split(1);
  for (int i = 0; i < 4000; ++i)
    sp_ensemble.push_back(sample_group_element(GroupId(Group::Sp, 2), sp_rng));
  CHECK(design_moment_deviation(sp_ensemble, su4, 1, rho) <= 5.0 * 4.0 / std::sqrt(4000.0));

  // The trivial ensemble {I}: ||rho - I/D|| = 1 - 1/D.
  std::vector<GroupElement> trivial = {
      GroupElement{su4, DenseMatrix::complex(Eigen::MatrixXcd::Identity(4, 4))}};
  CHECK(design_moment_deviation(trivial, su4, 1, rho) ==
        doctest::Approx(0.75).epsilon(1e-10));

  CHECK_THROWS_AS(design_moment_deviation({}, su4, 1, rho), ContractError);
  CHECK_THROWS_AS(design_moment_deviation(trivial, su4, 3, rho), ContractError);
}
