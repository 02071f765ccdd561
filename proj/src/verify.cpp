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

#include "haarlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "haarlab/born.hpp"
#include "haarlab/commutant.hpp"
#include "haarlab/complexity.hpp"
#include "haarlab/concentration.hpp"
#include "haarlab/moments.hpp"
#include "haarlab/norms.hpp"
#include "haarlab/parallel.hpp"
#include "haarlab/sampler.hpp"
#include "haarlab/stats.hpp"

namespace haarlab::verify {
namespace {

constexpr Group kGroups[] = {Group::SO, Group::SU, Group::Sp};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(4);
  out << x;
  return out.str();
}

/// Tracks the worst margin of a family of "observed <= limit" checks as the
/// ratio observed/limit; the family passes while the ratio stays <= 1.
struct WorstCase {
  double ratio = 0.0;
  std::string where;

  void update(double observed, double limit, const std::string& label) {
    const double r = limit > 0.0 ? observed / limit : (observed > 0.0 ? 1e300 : 0.0);
    if (r > ratio) {
      ratio = r;
      where = label + " (" + fmt(observed) + " vs limit " + fmt(limit) + ")";
    }
  }
  bool passed() const { return ratio <= 1.0; }
};

GroupId state_space_group(Group group, int state_dim) {
  return group == Group::Sp ? GroupId(group, state_dim / 2) : GroupId(group, state_dim);
}

// ---------------------------------------------------------------------------
// 1. Uniform average Born distribution over state samples.
CriterionResult criterion_born_uniform(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 100000 : 10000;
  WorstCase worst;
  for (Group group : kGroups) {
    for (int state_dim : {4, 8, 16}) {
      const GroupId id = state_space_group(group, state_dim);
      struct Slot {
        std::vector<Accumulator> per_x;
      };
      auto slots = run_sharded<Slot>(
          n, rng.split(state_dim + 100 * static_cast<int>(group)),
          [&](RngStream stream, std::int64_t count, Slot& slot) {
            slot.per_x.resize(static_cast<std::size_t>(state_dim));
            for (std::int64_t i = 0; i < count; ++i) {
              const PureState psi = sample_state(id, stream);
              for (int x = 0; x < state_dim; ++x)
                slot.per_x[static_cast<std::size_t>(x)].add(std::norm(psi.state.storage()[x]));
            }
          });
      for (int x = 0; x < state_dim; ++x) {
        Accumulator acc;
        for (const auto& slot : slots) acc.merge(slot.per_x[static_cast<std::size_t>(x)]);
        worst.update(std::abs(acc.mean() - 1.0 / state_dim), 5.0 * acc.std_error(),
                     id.to_string() + " x=" + std::to_string(x));
      }
    }
  }
  return {1, "uniform average Born distribution", worst.passed(), "worst " + worst.where, 0.0};
}

// ---------------------------------------------------------------------------
// 2. Gaussian-integration estimates match the direct-Haar oracle on random
//    even-degree homogeneous polynomials.
CriterionResult criterion_gaussian_oracle(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 100000 : 10000;
  constexpr int kPolysPerCell = 20;
  constexpr int kTermsPerPoly = 2;
  WorstCase worst;

  for (Group group : kGroups) {
    const FieldTag field = field_of(group);
    for (int k : {1, 2, 3}) {
      for (int dim : {2, 4, 8}) {
        const GroupId id(group, dim);
        const int storage_dim = field == FieldTag::Quaternion ? 2 * dim : dim;
        RngStream cell_rng =
            rng.split(1000 * static_cast<int>(group) + 100 * k + dim);

        // Random sums of products of k squared linear forms: positively
        // homogeneous of degree 2k over every field.
        struct Poly {
          std::vector<Eigen::VectorXcd> forms;  // kTermsPerPoly * k vectors
          std::vector<double> weights;
        };
        std::vector<Poly> polys(kPolysPerCell);
        RngStream poly_rng = cell_rng.split(1);
        for (auto& poly : polys) {
          for (int t = 0; t < kTermsPerPoly; ++t) {
            poly.weights.push_back(0.5 + poly_rng.uniform01());
            for (int j = 0; j < k; ++j) {
              Eigen::VectorXcd c(storage_dim);
              for (int i = 0; i < storage_dim; ++i) {
                const double re = poly_rng.normal();
                const double im = poly_rng.normal();
                c[i] = {re, im};
              }
              poly.forms.push_back(std::move(c));
            }
          }
        }
        auto eval_poly = [&](const Poly& poly, const AmplitudeVector& v) {
          double total = 0.0;
          int form = 0;
          for (int t = 0; t < kTermsPerPoly; ++t) {
            double prod = poly.weights[static_cast<std::size_t>(t)];
            for (int j = 0; j < k; ++j)
              prod *= std::norm(poly.forms[static_cast<std::size_t>(form++)].dot(v.storage()));
            total += prod;
          }
          return total;
        };

        struct Slot {
          std::vector<Accumulator> per_poly;
        };
        auto run_route = [&](bool normalized, std::uint64_t salt) {
          auto slots = run_sharded<Slot>(
              n, cell_rng.split(salt), [&](RngStream stream, std::int64_t count, Slot& slot) {
                slot.per_poly.resize(kPolysPerCell);
                for (std::int64_t i = 0; i < count; ++i) {
                  const AmplitudeVector v = normalized
                                                ? sample_state(id, stream).state
                                                : gaussian_vector(dim, field, stream);
                  for (int p = 0; p < kPolysPerCell; ++p)
                    slot.per_poly[static_cast<std::size_t>(p)].add(
                        eval_poly(polys[static_cast<std::size_t>(p)], v));
                }
              });
          std::vector<Accumulator> merged(kPolysPerCell);
          for (const auto& slot : slots)
            for (int p = 0; p < kPolysPerCell; ++p)
              merged[static_cast<std::size_t>(p)].merge(slot.per_poly[static_cast<std::size_t>(p)]);
          return merged;
        };

        const auto gaussian_accs = run_route(false, 2);
        const auto direct_accs = run_route(true, 3);
        const double constant = normalization_constant(id, k);
        for (int p = 0; p < kPolysPerCell; ++p) {
          const auto& g = gaussian_accs[static_cast<std::size_t>(p)];
          const auto& d = direct_accs[static_cast<std::size_t>(p)];
          const double gaussian_value = g.mean() / constant;
          const double gaussian_se = g.std_error() / constant;
          const double combined_se =
              std::sqrt(gaussian_se * gaussian_se + d.std_error() * d.std_error());
          worst.update(std::abs(gaussian_value - d.mean()), 3.0 * combined_se,
                       id.to_string() + " k=" + std::to_string(k) + " poly=" + std::to_string(p));
        }
      }
    }
  }
  return {2, "gaussian-integration oracle equivalence", worst.passed(), "worst " + worst.where,
          0.0};
}

// ---------------------------------------------------------------------------
// 3. Exact moment pins: E x1^4 over real spheres and chi-square moments.
CriterionResult criterion_moment_pins(RngStream rng, Scale scale) {
  const std::int64_t n_state = scale == Scale::Full ? 100000 : 20000;
  const std::int64_t n_chi = scale == Scale::Full ? 1000000 : 100000;
  WorstCase worst;

  for (int dim : {4, 8, 16}) {
    RngStream probe = rng.split(dim);
    HomogeneousFunctional f = make_homogeneous_functional(
        [](const AmplitudeVector& v) {
          const double x = v.storage()[0].real();
          return std::complex<double>(x * x * x * x, 0.0);
        },
        4, FieldTag::Real, dim, probe);
    RngStream mc = rng.split(10 + dim);
    const MomentEstimate est = haar_expect_gaussian(GroupId(Group::SO, dim), f, n_state, mc);
    const double expected = 3.0 / (static_cast<double>(dim) * (dim + 2.0));
    worst.update(std::abs(est.value.real() - expected), 5.0 * est.std_error,
                 "so(" + std::to_string(dim) + ") x1^4");
  }

  for (int dof : {2, 4, 8}) {
    for (int k : {1, 2, 3}) {
      auto slots = run_sharded<Accumulator>(
          n_chi, rng.split(100 + 10 * dof + k),
          [&](RngStream stream, std::int64_t count, Accumulator& acc) {
            for (std::int64_t i = 0; i < count; ++i) {
              const double s = gaussian_vector(dof, FieldTag::Real, stream).storage().squaredNorm();
              acc.add(std::pow(s, k));
            }
          });
      Accumulator acc;
      for (const auto& slot : slots) acc.merge(slot);
      worst.update(std::abs(acc.mean() - chi_square_moment(dof, k)), 5.0 * acc.std_error(),
                   "chi2 dof=" + std::to_string(dof) + " k=" + std::to_string(k));
    }
  }
  return {3, "exact moment pins", worst.passed(), "worst " + worst.where, 0.0};
}

// ---------------------------------------------------------------------------
// 4. Expected TV distance to uniform sits inside the [M - Delta, M + Delta]
//    band (up to Monte Carlo error).
CriterionResult criterion_expected_tv(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 200 : 24;
  constexpr int kQubits = 10;
  bool passed = true;
  std::ostringstream detail;
  for (Group group : kGroups) {
    RngStream mc = rng.split(static_cast<int>(group));
    const MomentEstimate est = estimate_expected_tv(group, kQubits, n, mc);
    const TvConstants constants = expected_tv_constants(group, kQubits);
    const double lo = constants.mean - constants.delta_bound - 3.0 * est.std_error;
    const double hi = constants.mean + constants.delta_bound + 3.0 * est.std_error;
    const bool inside = est.value.real() >= lo && est.value.real() <= hi;
    passed = passed && inside;
    detail << group_name(group) << "=" << fmt(est.value.real()) << " in [" << fmt(lo) << ","
           << fmt(hi) << "] ";
  }
  return {4, "expected TV distance bands", passed, detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 5. Empirical tails never exceed the concentration bound.
CriterionResult criterion_levy_tails(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 10000 : 2000;
  std::vector<double> tau_grid;
  for (int i = 1; i <= 10; ++i) tau_grid.push_back(0.05 * i);
  WorstCase worst;

  for (Group group : kGroups) {
    for (int dim : {16, 64}) {
      const GroupId id(group, dim);
      RngStream cell = rng.split(10 * dim + static_cast<int>(group));
      RngStream probe = cell.split(1);

      // Rank-one projector observable f(U) = <0|U^dag M U|0> with M = vv^dag.
      Eigen::VectorXcd v(id.embedded_dim());
      for (int i = 0; i < id.embedded_dim(); ++i) {
        const double re = probe.normal();
        const double im = group == Group::SO ? 0.0 : probe.normal();
        v[i] = {re, im};
      }
      v.normalize();
      LipschitzFunctional f = register_lipschitz_functional(
          [v](const GroupElement& e) { return std::norm(v.dot(e.matrix.m.col(0))); }, 2.0, id,
          probe, 20);

      RngStream mc = cell.split(2);
      const TailReport report =
          empirical_tail(id, f, tau_grid, n, mc, 1.0 / id.embedded_dim());
      for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        worst.update(report.empirical_tail[i],
                     report.analytic_bound[i] + 3.0 * report.binomial_se[i],
                     id.to_string() + " tau=" + fmt(tau_grid[i]));
      }
    }
  }
  return {5, "levy bound never violated", worst.passed(), "worst " + worst.where, 0.0};
}

// ---------------------------------------------------------------------------
// 6. Exact commutant twirl against the Monte Carlo twirl, plus projector
//    properties.
CriterionResult criterion_twirl(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 100000 : 10000;
  constexpr int kInputs = 10;
  WorstCase worst;

  for (Group group : kGroups) {
    const GroupId id(group, 2);
    for (int k : {1, 2}) {
      const CommutantBasis basis = commutant_basis(id, k);
      const Eigen::Index dk = basis.elements.front().rows();
      RngStream cell = rng.split(10 * static_cast<int>(group) + k);

      for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
          const std::complex<double> inner =
              (basis.elements[i].adjoint() * basis.elements[j]).trace();
          const double expected = i == j ? 1.0 : 0.0;
          worst.update(std::abs(inner - expected), 1e-10,
                       id.to_string() + " k=" + std::to_string(k) + " orthonormality");
        }

      RngStream input_rng = cell.split(1);
      for (int input = 0; input < kInputs; ++input) {
        Eigen::MatrixXcd rho(dk, dk);
        for (Eigen::Index c = 0; c < dk; ++c)
          for (Eigen::Index r = 0; r < dk; ++r) {
            const double re = input_rng.normal();
            const double im = input_rng.normal();
            rho(r, c) = std::complex<double>(re, im) / std::sqrt(2.0 * dk);
          }

        const Eigen::MatrixXcd exact = twirl(id, rho, basis);
        worst.update((twirl(id, exact, basis) - exact).cwiseAbs().maxCoeff(), 1e-10,
                     id.to_string() + " idempotence");
        worst.update(std::abs((exact.trace() - rho.trace())), 1e-10,
                     id.to_string() + " trace preservation");

        RngStream mc = cell.split(100 + input);
        const McTwirlResult sampled = mc_twirl(id, k, rho, n, mc);
        for (Eigen::Index c = 0; c < dk; ++c)
          for (Eigen::Index r = 0; r < dk; ++r) {
            worst.update(std::abs(sampled.mean(r, c) - exact(r, c)),
                         5.0 * sampled.std_error(r, c) + 1e-12,
                         id.to_string() + " k=" + std::to_string(k) + " mc entry");
          }
      }
    }
  }
  return {6, "commutant twirl equivalence", worst.passed(), "worst " + worst.where, 0.0};
}

// ---------------------------------------------------------------------------
// 7. Symplectic states reproduce the complex-Haar first and second moments
//    (state-design behaviour), with the second-moment reference first
//    validated by the complex-Gaussian oracle.
CriterionResult criterion_sp_state_design(RngStream rng, Scale scale) {
  const std::int64_t n = scale == Scale::Full ? 100000 : 20000;
  constexpr int kStateDim = 16;
  const double first_moment = 1.0 / kStateDim;
  const double second_moment = 2.0 / (static_cast<double>(kStateDim) * (kStateDim + 1));
  WorstCase worst;

  // Oracle for the second moment: Gaussian integration over SU(16).
  RngStream probe = rng.split(1);
  HomogeneousFunctional f4 = make_homogeneous_functional(
      [](const AmplitudeVector& v) {
        const double p = std::norm(v.storage()[0]);
        return std::complex<double>(p * p, 0.0);
      },
      4, FieldTag::Complex, kStateDim, probe);
  RngStream oracle_rng = rng.split(2);
  const MomentEstimate reference =
      haar_expect_gaussian(GroupId(Group::SU, kStateDim), f4, n, oracle_rng);
  worst.update(std::abs(reference.value.real() - second_moment), 5.0 * reference.std_error,
               "gaussian oracle vs 2/(D(D+1))");

  const GroupId id(Group::Sp, kStateDim / 2);
  struct Slot {
    std::vector<Accumulator> p, p2;
  };
  auto slots = run_sharded<Slot>(
      n, rng.split(3), [&](RngStream stream, std::int64_t count, Slot& slot) {
        slot.p.resize(kStateDim);
        slot.p2.resize(kStateDim);
        for (std::int64_t i = 0; i < count; ++i) {
          const PureState psi = sample_state(id, stream);
          for (int x = 0; x < kStateDim; ++x) {
            const double prob = std::norm(psi.state.storage()[x]);
            slot.p[static_cast<std::size_t>(x)].add(prob);
            slot.p2[static_cast<std::size_t>(x)].add(prob * prob);
          }
        }
      });
  for (int x = 0; x < kStateDim; ++x) {
    Accumulator p, p2;
    for (const auto& slot : slots) {
      p.merge(slot.p[static_cast<std::size_t>(x)]);
      p2.merge(slot.p2[static_cast<std::size_t>(x)]);
    }
    worst.update(std::abs(p.mean() - first_moment), 5.0 * p.std_error(),
                 "first moment x=" + std::to_string(x));
    worst.update(std::abs(p2.mean() - second_moment), 5.0 * p2.std_error(),
                 "second moment x=" + std::to_string(x));
  }
  return {7, "sp state-design moments", worst.passed(), "worst " + worst.where, 0.0};
}

// ---------------------------------------------------------------------------
// 8. Pairwise separation of sampled high-dimensional real states.
CriterionResult criterion_pairwise_separation(RngStream rng, Scale) {
  RngStream mc = rng.split(1);
  const PairwiseFidelityReport report =
      empirical_pairwise_fidelity(GroupId(Group::SO, 1024), 100, mc);
  const bool passed = report.max_fidelity <= 0.05 && report.min_trace_distance >= 0.97;
  std::ostringstream detail;
  detail << "max fidelity " << fmt(report.max_fidelity) << " (limit 0.05), min trace distance "
         << fmt(report.min_trace_distance) << " (limit 0.97)";
  return {8, "pairwise separation", passed, detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 9. Closed-form calculators against independently computed high-precision
//    pins, plus the validity-window errors.
CriterionResult criterion_closed_form(RngStream, Scale) {
  WorstCase worst;
  int checks = 0;
  auto pin_log = [&](double actual_log, double expected_log, const std::string& label) {
    ++checks;
    worst.update(std::abs(actual_log - expected_log),
                 1e-10 * std::max(1.0, std::abs(expected_log)), label);
  };
  auto pin_value = [&](double actual, double expected, const std::string& label) {
    ++checks;
    worst.update(std::abs(actual - expected), 1e-10 * std::max(1.0, std::abs(expected)), label);
  };

  // Pinned against 50-digit evaluations of the same closed forms
  // (tests/pins/generate_pins.py).
  ComplexityParams size_params{3, 2, 0.5, 2};
  pin_value(measurement_class_size_bound(size_params).value(), 1024.0, "measurement size n=3");
  ComplexityParams tiny{1, 0, 0.5, 2};
  pin_value(measurement_class_size_bound(tiny).value(), 4.0, "measurement size n=1");

  ComplexityParams low{10, 1, 0.5, 2};
  pin_log(low_complexity_prob_bound(Group::SO, low).log_value, 3.5650586200776596,
          "low-complexity so");
  pin_log(low_complexity_prob_bound(Group::Sp, low).log_value, -4.3724413799223404,
          "low-complexity sp");
  pin_log(low_complexity_prob_bound(Group::SU, low).log_value, -4.4974413799223404,
          "low-complexity su");

  ComplexityParams design_p{8, 2, 0.1, 2};
  pin_value(design_low_complexity_prob_bound(Group::SU, design_p, {6, 0.0}).value(), 82944.0,
            "design low-complexity su");
  pin_log(design_low_complexity_prob_bound(Group::SO, design_p, {6, 1e-4}).log_value,
          12.727901681061307, "design low-complexity so");
  pin_log(design_low_complexity_prob_bound(Group::Sp, design_p, {6, 1e-4}).log_value,
          11.310356698980491, "design low-complexity sp");

  pin_value(packing_count(Group::SO, 1024, 0.5).value(), 1.1741924548876449, "packing so");
  pin_value(packing_count(Group::Sp, 1024, 0.5).value(), 274.15828960711465, "packing sp");
  pin_value(packing_count(Group::SU, 1024, 0.5).value(), 10.630270500015696, "packing su");

  pin_log(design_packing_count(Group::SU, 256, 0.5, {8, 0.0}).log_value, 1.815650951896211,
          "design packing su");
  pin_log(design_packing_count(Group::SO, 256, 0.5, {8, 0.00390625}).log_value,
          -3.1576972060709881, "design packing so");
  pin_log(design_packing_count(Group::Sp, 256, 0.5, {8, 0.0}).log_value, 1.8467795136644308,
          "design packing sp");

  SqParams sq{10, 0.1, 0.1, 0.5};
  pin_value(sq_lower_bound(Group::SO, sq).table.q_lower, -0.65614933030956221, "sq so q");
  pin_value(sq_lower_bound(Group::SU, sq).table.q_lower, -0.53089919358104192, "sq su q");
  pin_value(sq_lower_bound(Group::Sp, sq).table.q_lower, -0.53025453590082608, "sq sp q");
  pin_value(sq_lower_bound(Group::SU, sq).table.f_bound, 1.0545848480860971, "sq su f");
  pin_value(sq_lower_bound(Group::SU, sq).table.u_bound, 0.0052933973255974381, "sq su u");

  DesignDeviationParams dev;
  dev.k = 4;
  dev.epsilon = 0.0;
  dev.degree_K = 1;
  dev.alpha = 8.0 * std::sqrt(8.0);
  dev.mean_abs = 1.0;
  dev.delta = 0.5;
  dev.m = 2;
  dev.a = 0.5;
  dev.dim_D = 8.0;
  pin_value(design_deviation_bound(dev), 512.0, "design deviation eps=0");
  dev.epsilon = 1e-3;
  pin_value(design_deviation_bound(dev), 513.21737679562435, "design deviation eps=1e-3");

  pin_value(levy_bound(GroupId(Group::SO, 4), 2.0, 1.0), 1.8788261256269516, "levy bound pin");

  // Domain errors exactly on the validity windows.
  auto expect_domain_error = [&](const std::function<void()>& call, const std::string& label) {
    ++checks;
    bool threw = false;
    try {
      call();
    } catch (const DomainError&) {
      threw = true;
    } catch (...) {
    }
    worst.update(threw ? 0.0 : 1.0, 0.5, label);
  };
  expect_domain_error(
      [&] { (void)design_low_complexity_prob_bound(Group::SU, ComplexityParams{8, 2, 0.6, 2}, {6, 0.0}); },
      "delta outside window");
  expect_domain_error(
      [&] { (void)design_low_complexity_prob_bound(Group::SU, design_p, {3, 0.0}); },
      "k <= 3 rejected");
  expect_domain_error([&] { (void)sq_lower_bound(Group::SU, SqParams{10, 0.3, 0.5, 0.5}); },
                      "xi < 0 rejected");
  expect_domain_error([&] { (void)design_packing_count(Group::SU, 256, 0.001, {8, 0.0}); },
                      "(2-Delta)Delta <= 1/D rejected");
  expect_domain_error([&] { (void)levy_constant(GroupId(Group::SO, 2)); }, "levy so D=2 rejected");

  return {9, "closed-form calculators", worst.passed(),
          std::to_string(checks) + " pins/windows, worst " + worst.where, 0.0};
}

}  // namespace

VerifyReport run_all(std::uint64_t seed, Scale scale, std::ostream* progress) {
  using CriterionFn = CriterionResult (*)(RngStream, Scale);
  const CriterionFn criteria[] = {
      criterion_born_uniform,   criterion_gaussian_oracle, criterion_moment_pins,
      criterion_expected_tv,    criterion_levy_tails,      criterion_twirl,
      criterion_sp_state_design, criterion_pairwise_separation, criterion_closed_form,
  };

  VerifyReport report;
  report.seed = seed;
  report.scale = scale;
  const RngStream root(seed, 0);
  int id = 1;
  for (CriterionFn fn : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = fn(root.split(static_cast<std::uint64_t>(id)), scale);
    } catch (const std::exception& e) {
      result = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(),
                0.0};
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress != nullptr) {
      (*progress) << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ": " << result.name
                  << " - " << result.detail << " (" << fmt(result.seconds) << " s)\n";
      progress->flush();
    }
    report.criteria.push_back(std::move(result));
    ++id;
  }
  report.all_passed = true;
  for (const auto& c : report.criteria) {
    report.all_passed = report.all_passed && c.passed;
    report.total_seconds += c.seconds;
  }
  return report;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"id", c.id},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
  }
  return {{"seed", report.seed},
          {"scale", report.scale == Scale::Full ? "full" : "quick"},
          {"criteria", criteria},
          {"all_passed", report.all_passed},
          {"total_seconds", report.total_seconds}};
}

}  // namespace haarlab::verify
