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

#include "haarlab/concentration.hpp"

using namespace haarlab;

TEST_CASE("levy constants") {
  CHECK(levy_constant(GroupId(Group::SO, 4)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(levy_constant(GroupId(Group::SU, 8)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(levy_constant(GroupId(Group::Sp, 3)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(levy_constant(GroupId(Group::SO, 2)), DomainError);
}

TEST_CASE("levy bound closed form") {
  // 2 exp(-1/16), evaluated by hand.
  CHECK(levy_bound(GroupId(Group::SO, 4), 2.0, 1.0) ==
        doctest::Approx(1.8788261256269516).epsilon(1e-12));
  // Vacuous limit as tau -> 0.
  CHECK(levy_bound(GroupId(Group::SU, 8), 1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  // Strictly decreasing in tau.
  double previous = 2.1;
  for (double tau = 0.1; tau <= 1.0; tau += 0.1) {
    const double bound = levy_bound(GroupId(Group::Sp, 4), 1.5, tau);
    CHECK(bound < previous);
    previous = bound;
  }
  // Invariant under simultaneous rescaling of f, L and tau.
  const GroupId id(Group::SU, 6);
  for (double c : {0.5, 2.0, 7.0}) {
    CHECK(levy_bound(id, c * 1.3, c * 0.4) ==
          doctest::Approx(levy_bound(id, 1.3, 0.4)).epsilon(1e-13));
  }
}

TEST_CASE("lipschitz registration soft check") {
  RngStream rng(151, 0);
  const GroupId id(Group::SU, 4);
  // Trace is sqrt(D)-Lipschitz; declaring 4 >= 2 passes at D = 4.
  LipschitzFunctional ok = register_lipschitz_functional(
      [](const GroupElement& e) { return e.matrix.m.trace().real(); }, 4.0, id, rng, 50);
  CHECK(ok.soft_check_passed);
  // Declaring a bound that is far too small gets flagged, not thrown.
  LipschitzFunctional flagged = register_lipschitz_functional(
      [](const GroupElement& e) { return 100.0 * e.matrix.m.trace().real(); }, 0.01, id, rng, 50);
  CHECK(!flagged.soft_check_passed);
  CHECK(flagged.max_observed_ratio > 0.01);
}

TEST_CASE("empirical tails of a constant functional vanish") {
  RngStream rng(157, 0);
  LipschitzFunctional constant = register_lipschitz_functional(
      [](const GroupElement&) { return 0.75; }, 1.0, GroupId(Group::SO, 4), rng, 10);
  RngStream mc = rng.split(1);
  const TailReport report =
      empirical_tail(GroupId(Group::SO, 4), constant, {0.1, 0.2}, 2000, mc);
  CHECK(report.empirical_tail[0] == 0.0);
  CHECK(report.empirical_tail[1] == 0.0);
  CHECK(report.empirical_mean == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("fidelity functional concentrates around 1/D") {
  RngStream rng(163, 0);
  const GroupId id(Group::SO, 64);
  RngStream probe = rng.split(1);
  Eigen::VectorXcd v(64);
  for (int i = 0; i < 64; ++i) v[i] = probe.normal();
  v.normalize();
  LipschitzFunctional f = register_lipschitz_functional(
      [v](const GroupElement& e) { return std::norm(v.dot(e.matrix.m.col(0))); }, 2.0, id,
      probe, 10);
  RngStream mc = rng.split(2);
  const TailReport report =
      empirical_tail(id, f, {0.05, 0.1, 0.2}, 10000, mc, 1.0 / 64.0);
  CHECK(std::abs(report.empirical_mean - 1.0 / 64.0) <= 5.0 * (1.0 / 64.0) / std::sqrt(10000.0) * 10.0);
  for (std::size_t i = 0; i < report.tau_grid.size(); ++i)
    CHECK(report.empirical_tail[i] <= report.analytic_bound[i] + 3.0 * report.binomial_se[i]);
  REQUIRE(report.exact_mean.has_value());
  CHECK(*report.exact_mean == doctest::Approx(1.0 / 64.0));
}

TEST_CASE("design deviation bound pins and contracts") {
  DesignDeviationParams p;
  p.k = 4;
  p.epsilon = 0.0;
  p.degree_K = 1;
  p.alpha = 8.0 * std::sqrt(8.0);
  p.mean_abs = 1.0;
  p.delta = 0.5;
  p.m = 2;
  p.a = 0.5;
  p.dim_D = 8.0;
  CHECK(design_deviation_bound(p) == doctest::Approx(512.0).epsilon(1e-12));

  p.epsilon = 1e-3;
  CHECK(design_deviation_bound(p) == doctest::Approx(513.21737679562435).epsilon(1e-12));

  // Vanishes as delta grows.
  p.delta = 1e60;
  CHECK(design_deviation_bound(p) < 1e-200);
  p.delta = 0.5;

  // Nondecreasing in epsilon.
  p.epsilon = 0.0;
  const double at_zero = design_deviation_bound(p);
  p.epsilon = 0.5;
  CHECK(design_deviation_bound(p) >= at_zero);

  // 2 m K <= k is enforced.
  p.m = 3;
  CHECK_THROWS_AS(design_deviation_bound(p), ContractError);
  p.m = 2;
  p.degree_K = 2;
  CHECK_THROWS_AS(design_deviation_bound(p), ContractError);
  p.degree_K = 1;
  p.delta = 0.0;
  CHECK_THROWS_AS(design_deviation_bound(p), ContractError);
}
