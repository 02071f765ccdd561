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

#include "haarlab/io.hpp"

#include <iomanip>
#include <limits>

namespace haarlab {
namespace {

void set_full_precision(std::ostream& out) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
}

}  // namespace

void write_matrix_csv(std::ostream& out, const DenseMatrix& matrix) {
  set_full_precision(out);
  const bool complex_entries = matrix.field != FieldTag::Real;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      if (complex_entries) {
        out << matrix.m(i, j).real() << ',' << matrix.m(i, j).imag();
      } else {
        out << matrix.m(i, j).real();
      }
    }
    out << '\n';
  }
}

void write_state_csv(std::ostream& out, const AmplitudeVector& state) {
  set_full_precision(out);
  const bool complex_entries = state.field() != FieldTag::Real;
  const Eigen::VectorXcd& v = state.storage();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    if (complex_entries) {
      out << v[i].real() << ',' << v[i].imag();
    } else {
      out << v[i].real();
    }
  }
  out << '\n';
}

void write_tail_csv(std::ostream& out, const TailReport& report) {
  set_full_precision(out);
  out << "tau,empirical,bound,se\n";
  for (std::size_t i = 0; i < report.tau_grid.size(); ++i) {
    out << report.tau_grid[i] << ',' << report.empirical_tail[i] << ','
        << report.analytic_bound[i] << ',' << report.binomial_se[i] << '\n';
  }
}

void write_born_csv(std::ostream& out, const BornDistribution& p) {
  set_full_precision(out);
  out << "x,p\n";
  for (Eigen::Index x = 0; x < p.probs.size(); ++x) out << x << ',' << p.probs[x] << '\n';
}

nlohmann::json moment_to_json(const MomentEstimate& estimate, const GroupId& id, int k) {
  return {{"group", group_name(id.group)},
          {"D", id.dim},
          {"k", k},
          {"value_re", estimate.value.real()},
          {"value_im", estimate.value.imag()},
          {"std_error", estimate.std_error},
          {"n_samples", estimate.n_samples},
          {"normalization", estimate.normalization}};
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
  nlohmann::json j{{"formula_id", report.formula_id},
                   {"log_value", report.log_value},
                   {"log10_value", report.log10_value()},
                   {"value", report.value()},
                   {"vacuous", report.vacuous},
                   {"inputs", report.inputs}};
  if (report.group) j["group"] = group_name(*report.group);
  return j;
}

nlohmann::json sq_report_to_json(const SqBoundReport& report) {
  auto route = [](const SqRoute& r) {
    return nlohmann::json{{"f_bound", r.f_bound},
                          {"u_bound", r.u_bound},
                          {"q_lower", r.q_lower},
                          {"nontrivial", r.nontrivial}};
  };
  return {{"group", group_name(report.group)},
          {"n", report.params.n},
          {"tau", report.params.tau},
          {"epsilon", report.params.epsilon},
          {"beta", report.params.beta},
          {"M", report.mean_M},
          {"Delta", report.delta_bound},
          {"xi", report.xi},
          {"table", route(report.table)},
          {"lemma", route(report.lemma)},
          {"route_q_gap", report.route_q_gap}};
}

nlohmann::json tail_report_to_json(const TailReport& report) {
  nlohmann::json j{{"n_samples", report.n_samples},
                   {"empirical_mean", report.empirical_mean},
                   {"tau", report.tau_grid},
                   {"empirical_tail", report.empirical_tail},
                   {"analytic_bound", report.analytic_bound},
                   {"binomial_se", report.binomial_se}};
  if (report.exact_mean) j["exact_mean"] = *report.exact_mean;
  return j;
}

nlohmann::json invariance_report_to_json(const InvarianceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"probe", row.probe},
                    {"statistic", row.statistic},
                    {"side", row.side},
                    {"p_value", row.p_value}});
  }
  return {{"rows", rows}, {"min_p", report.min_p}};
}

}  // namespace haarlab
