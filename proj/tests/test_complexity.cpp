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

#include "haarlab/complexity.hpp"
#include "haarlab/norms.hpp"
#include "haarlab/sampler.hpp"
#include "haarlab/stats.hpp"

using namespace haarlab;

// Pins below come from 50-digit evaluations of the same closed forms
// (tests/pins/generate_pins.py).

TEST_CASE("measurement class size") {
  CHECK(measurement_class_size_bound({1, 0, 0.5, 2}).value() ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(measurement_class_size_bound({3, 2, 0.5, 2}).value() ==
        doctest::Approx(1024.0).epsilon(1e-12));
  // Monotone nondecreasing in r.
  double previous = 0.0;
  for (std::int64_t r = 0; r < 6; ++r) {
    const double v = measurement_class_size_bound({4, r, 0.5, 3}).log_value;
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("low-complexity probability bounds") {
  const ComplexityParams p{10, 1, 0.5, 2};
  CHECK(low_complexity_prob_bound(Group::SO, p).log_value ==
        doctest::Approx(3.5650586200776596).epsilon(1e-12));
  CHECK(low_complexity_prob_bound(Group::Sp, p).log_value ==
        doctest::Approx(-4.3724413799223404).epsilon(1e-12));
  CHECK(low_complexity_prob_bound(Group::SU, p).log_value ==
        doctest::Approx(-4.4974413799223404).epsilon(1e-12));

  // SO raw value exceeds 1 here; raw kept, clamp available.
  const BoundReport so = low_complexity_prob_bound(Group::SO, p);
  CHECK(so.vacuous);
  CHECK(so.clamped_probability() == 1.0);
  const BoundReport su = low_complexity_prob_bound(Group::SU, p);
  CHECK(!su.vacuous);
  CHECK(su.clamped_probability() == doctest::Approx(su.value()));

  // SU and Sp branches share the exponent and differ by the prefactor only.
  for (int n : {6, 8, 12}) {
    for (double delta : {0.1, 0.5, 0.9}) {
      const ComplexityParams q{n, 3, delta, 5};
      const double gap = low_complexity_prob_bound(Group::Sp, q).log_value -
                         low_complexity_prob_bound(Group::SU, q).log_value;
      CHECK(gap == doctest::Approx(7.0 / 32.0 - 3.0 / 32.0).epsilon(1e-12));
    }
  }

  // The SO exponent is the weaker one at equal parameters.
  const ComplexityParams big{8, 0, 0.3, 2};
  const double so_rate = (big.dim() - 2.0) * 0.49 / 32.0;
  const double su_rate = big.dim() * 0.49 / 16.0;
  CHECK(so_rate < su_rate);

  // delta -> 1 removes the exponential suppression.
  const ComplexityParams nearly_one{6, 1, 1.0 - 1e-12, 2};
  const double expected = std::log(4.0 * 64.0 * 7.0 * 2.0) + 3.0 / 32.0;
  CHECK(low_complexity_prob_bound(Group::SU, nearly_one).log_value ==
        doctest::Approx(expected).epsilon(1e-9));

  CHECK_THROWS_AS(low_complexity_prob_bound(Group::SU, ComplexityParams{10, 1, 0.0, 2}),
                  ContractError);
  CHECK_THROWS_AS(low_complexity_prob_bound(Group::SO, ComplexityParams{1, 1, 0.5, 2}),
                  DomainError);
}

TEST_CASE("log-space evaluation matches direct evaluation in range") {
  const ComplexityParams p{4, 2, 0.5, 3};
  const double direct = 4.0 * 16.0 * 25.0 * 9.0 * std::exp(3.0 / 32.0) *
                        std::exp(-16.0 * 0.25 / 16.0);
  CHECK(low_complexity_prob_bound(Group::SU, p).value() ==
        doctest::Approx(direct).epsilon(1e-10));

  const double direct_size = 2.0 * 16.0 * 25.0 * 9.0;
  CHECK(measurement_class_size_bound(p).value() ==
        doctest::Approx(direct_size).epsilon(1e-10));
}

TEST_CASE("design low-complexity bounds") {
  const ComplexityParams p{8, 2, 0.1, 2};
  CHECK(design_low_complexity_prob_bound(Group::SU, p, {6, 0.0}).value() ==
        doctest::Approx(82944.0).epsilon(1e-10));
  CHECK(design_low_complexity_prob_bound(Group::SO, p, {6, 1e-4}).log_value ==
        doctest::Approx(12.727901681061307).epsilon(1e-12));
  CHECK(design_low_complexity_prob_bound(Group::Sp, p, {6, 1e-4}).log_value ==
        doctest::Approx(11.310356698980491).epsilon(1e-12));

  // epsilon additivity: bound(eps) - bound(0) = eps 2^(2k/3).
  const double base = design_low_complexity_prob_bound(Group::Sp, p, {6, 0.0}).value();
  const double bumped = design_low_complexity_prob_bound(Group::Sp, p, {6, 0.5}).value();
  CHECK(bumped - base == doctest::Approx(0.5 * std::exp2(4.0)).epsilon(1e-9));

  // Validity windows.
  CHECK_THROWS_AS(design_low_complexity_prob_bound(Group::SU, p, {3, 0.0}), DomainError);
  CHECK_THROWS_AS(
      design_low_complexity_prob_bound(Group::SU, ComplexityParams{8, 2, 0.6, 2}, {6, 0.0}),
      DomainError);
  // The window boundary itself is excluded: 1/2 - 1/D - 1/(2 D^(3/2)).
  const double window = 0.5 - 1.0 / 256.0 - 0.5 * std::pow(256.0, -1.5);
  CHECK_THROWS_AS(design_low_complexity_prob_bound(
                      Group::SU, ComplexityParams{8, 2, window, 2}, {6, 0.0}),
                  DomainError);
  CHECK_NOTHROW(design_low_complexity_prob_bound(
      Group::SU, ComplexityParams{8, 2, window - 1e-6, 2}, {6, 0.0}));

  // Vacuity flag when the bound is >= 1.
  CHECK(design_low_complexity_prob_bound(Group::SU, p, {6, 0.0}).vacuous);

  // The integer-moment route is labeled and differs from the printed one.
  const BoundReport integer_route =
      design_low_complexity_prob_bound(Group::SU, p, {6, 1e-4}, MomentMode::IntegerM);
  CHECK(integer_route.formula_id == "design-low-complexity-prob-integer-m/su");
  CHECK(integer_route.inputs.at("m") == 2.0);
  CHECK(integer_route.log_value !=
        design_low_complexity_prob_bound(Group::SU, p, {6, 1e-4}).log_value);
}

TEST_CASE("packing counts") {
  CHECK(packing_count(Group::SO, 1024, 0.5).value() ==
        doctest::Approx(1.1741924548876449).epsilon(1e-12));
  CHECK(packing_count(Group::Sp, 1024, 0.5).value() ==
        doctest::Approx(274.15828960711465).epsilon(1e-12));
  CHECK(packing_count(Group::SU, 1024, 0.5).value() ==
        doctest::Approx(10.630270500015696).epsilon(1e-12));

  // Delta -> 0: below one, no guaranteed packing.
  CHECK(packing_count(Group::SU, 4096, 1e-6).value() < 1.0);
  // Monotone in D and in Delta.
  CHECK(packing_count(Group::SU, 2048, 0.5).log_value >
        packing_count(Group::SU, 1024, 0.5).log_value);
  CHECK(packing_count(Group::SU, 1024, 0.6).log_value >
        packing_count(Group::SU, 1024, 0.5).log_value);
  CHECK_THROWS_AS(packing_count(Group::SU, 1024, 0.0), ContractError);
}

TEST_CASE("design packing counts") {
  CHECK(design_packing_count(Group::SU, 256, 0.5, {8, 0.0}).log_value ==
        doctest::Approx(1.815650951896211).epsilon(1e-12));
  CHECK(design_packing_count(Group::SO, 256, 0.5, {8, 0.00390625}).log_value ==
        doctest::Approx(-3.1576972060709881).epsilon(1e-12));
  CHECK(design_packing_count(Group::Sp, 256, 0.5, {8, 0.0}).log_value ==
        doctest::Approx(1.8467795136644308).epsilon(1e-12));

  // At eps = 2^-k the additive term in the denominator is exactly one.
  const int k = 8;
  const double overlap = 1.5 * 0.5 - 1.0 / 256.0;
  const double expected =
      0.5 * std::pow(overlap, k) / (2.0 * std::pow(8.0 * k / 256.0, k / 2.0) + 1.0);
  CHECK(design_packing_count(Group::SU, 256, 0.5, {k, std::exp2(-k)}).value() ==
        doctest::Approx(expected).epsilon(1e-10));

  // Decreasing in eps.
  CHECK(design_packing_count(Group::SU, 256, 0.5, {8, 0.01}).log_value <
        design_packing_count(Group::SU, 256, 0.5, {8, 0.0}).log_value);

  CHECK_THROWS_AS(design_packing_count(Group::SU, 256, 0.001, {8, 0.0}), DomainError);
  CHECK_THROWS_AS(design_packing_count(Group::SU, 256, 0.5, {2, 0.0}), DomainError);

  const BoundReport corollary = corollary_packing_count(Group::SU, 1024, 8);
  CHECK(corollary.log_value == doctest::Approx(-3.6832536410312287).epsilon(1e-12));
  CHECK(corollary.inputs.at("scaling_exponent") ==
        doctest::Approx(-0.75911596603599597).epsilon(1e-10));
}

TEST_CASE("empirical pairwise fidelity") {
  RngStream rng(167, 0);
  const GroupId id(Group::SU, 4);
  const PairwiseFidelityReport report = empirical_pairwise_fidelity(id, 300, rng);
  CHECK(report.n_pairs == 300 * 299 / 2);
  // Mean pairwise fidelity ~ 1/D. The pair values share states, but the
  // conditional mean given one state is exactly 1/D, so pair-level noise
  // dominates; allow a factor-two cushion on the independent-pair error.
  const double var_single = 2.0 / (4.0 * 5.0) - 1.0 / 16.0;
  const double se = std::sqrt(2.0 * var_single / static_cast<double>(report.n_pairs));
  CHECK(std::abs(report.mean_fidelity - 0.25) <= 5.0 * se);
  CHECK(report.max_fidelity <= 1.0);
  CHECK(report.min_trace_distance ==
        doctest::Approx(std::sqrt(1.0 - report.max_fidelity)).epsilon(1e-12));

  // Identical streams give identical states: fidelity 1, distance 0.
  RngStream s1(5, 5), s2(5, 5);
  const Eigen::VectorXcd a = sample_state(id, s1).state.storage();
  const Eigen::VectorXcd b = sample_state(id, s2).state.storage();
  CHECK(std::norm(a.dot(b)) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(empirical_pairwise_fidelity(id, 1, rng), ContractError);
}

TEST_CASE("pairwise extremes against trace-distance relation") {
  RngStream rng(173, 0);
  const GroupId id(Group::SO, 128);
  std::vector<Eigen::VectorXcd> states;
  for (int i = 0; i < 20; ++i) states.push_back(sample_state(id, rng).state.storage());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double fid = std::norm(states[i].dot(states[j]));
      const AmplitudeVector a(FieldTag::Real, 128, states[i]);
      const AmplitudeVector b(FieldTag::Real, 128, states[j]);
      CHECK(trace_distance(a, b) == doctest::Approx(std::sqrt(1.0 - fid)).epsilon(1e-10));
    }
}
