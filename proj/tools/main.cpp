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

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "haarlab/born.hpp"
#include "haarlab/commutant.hpp"
#include "haarlab/complexity.hpp"
#include "haarlab/concentration.hpp"
#include "haarlab/io.hpp"
#include "haarlab/moments.hpp"
#include "haarlab/sampler.hpp"
#include "haarlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace haarlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct RunContext {
  std::uint64_t seed = 1;
  std::string output_dir;
  std::vector<Check> checks;
  json config;
  json results;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  void check(const std::string& name, bool passed, const std::string& detail = "") {
    checks.push_back({name, passed, detail});
  }

  void write_file(const std::string& filename, const std::string& contents) const {
    if (output_dir.empty()) return;
    std::filesystem::create_directories(output_dir);
    std::ofstream out(std::filesystem::path(output_dir) / filename);
    out << contents;
  }

  int finish(const std::string& command, double seconds) const {
    json checks_json = json::array();
    for (const auto& c : checks)
      checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    const json report{{"config", config},
                      {"results", results},
                      {"checks", checks_json},
                      {"timing", {{"seconds", seconds}}}};
    std::cout << report.dump(2) << "\n";
    write_file(command + "_report.json", report.dump(2) + "\n");
    return all_passed() ? kExitOk : kExitCheckFailed;
  }
};

GroupId resolve_group(const std::string& group_name_str, std::optional<int> dim,
                      std::optional<int> qubits) {
  const Group group = parse_group(group_name_str);
  if (dim && qubits) throw ContractError("give either --dim or --qubits, not both");
  if (qubits) return GroupId::for_qubits(group, *qubits);
  if (dim) return GroupId(group, *dim);
  throw ContractError("one of --dim or --qubits is required");
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(std::stod(token));
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(std::stoll(token));
  }
  return out;
}

// ---------------------------------------------------------------- sample
int run_sample(RunContext& ctx, const GroupId& id, int count, bool states) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(ctx.seed, 0);
  json items = json::array();
  double worst_unitarity = 0.0, worst_det = 0.0, worst_symplectic = 0.0;

  for (int i = 0; i < count; ++i) {
    if (states) {
      const PureState psi = sample_state(id, rng);
      std::ostringstream csv;
      write_state_csv(csv, psi.state);
      ctx.write_file("state_" + std::to_string(i) + ".csv", csv.str());
      items.push_back({{"index", i}, {"norm", psi.state.norm()}});
    } else {
      const GroupElement e = sample_group_element(id, rng);
      const ConstraintResiduals res = constraint_residuals(e);
      worst_unitarity = std::max(worst_unitarity, res.unitarity);
      worst_det = std::max(worst_det, res.determinant);
      worst_symplectic = std::max(worst_symplectic, res.symplectic);
      std::ostringstream csv;
      write_matrix_csv(csv, e.matrix);
      ctx.write_file("element_" + std::to_string(i) + ".csv", csv.str());
      items.push_back({{"index", i},
                       {"unitarity_residual", res.unitarity},
                       {"determinant_residual", res.determinant},
                       {"symplectic_residual", res.symplectic}});
    }
  }
  ctx.results = {{"items", items}};
  if (!states) {
    ctx.check("unitarity <= 1e-10", worst_unitarity <= 1e-10,
              "worst " + std::to_string(worst_unitarity));
    if (id.group != Group::Sp)
      ctx.check("|det - 1| <= 1e-8", worst_det <= 1e-8, "worst " + std::to_string(worst_det));
    if (id.group == Group::Sp)
      ctx.check("symplectic residual <= 1e-10", worst_symplectic <= 1e-10,
                "worst " + std::to_string(worst_symplectic));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("sample", seconds);
}

// ---------------------------------------------------------------- moment
int run_moment(RunContext& ctx, const GroupId& id, int k, std::int64_t samples,
               const std::string& functional_name) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(ctx.seed, 0);
  RngStream probe = rng.split(1);

  HomogeneousFunctional f;
  if (functional_name == "x1-power") {
    const int degree = 2 * k;
    f = make_homogeneous_functional(
        [degree](const AmplitudeVector& v) {
          return std::complex<double>(std::pow(std::norm(v.storage()[0]), degree / 2), 0.0);
        },
        degree, id.field(), id.dim, probe);
  } else if (functional_name == "random-poly") {
    const int storage_dim = id.field() == FieldTag::Quaternion ? 2 * id.dim : id.dim;
    Eigen::VectorXcd c(storage_dim);
    for (int i = 0; i < storage_dim; ++i) {
      const double re = probe.normal();
      const double im = probe.normal();
      c[i] = {re, im};
    }
    const int kk = k;
    f = make_homogeneous_functional(
        [c, kk](const AmplitudeVector& v) {
          return std::complex<double>(std::pow(std::norm(c.dot(v.storage())), kk), 0.0);
        },
        2 * k, id.field(), id.dim, probe);
  } else {
    throw ContractError("unknown functional: " + functional_name +
                        " (use x1-power or random-poly)");
  }

  RngStream g_rng = rng.split(2);
  RngStream d_rng = rng.split(3);
  const MomentEstimate gaussian = haar_expect_gaussian(id, f, samples, g_rng);
  const MomentEstimate direct = haar_expect_direct(id, f, samples, d_rng);
  const double combined_se = std::sqrt(gaussian.std_error * gaussian.std_error +
                                       direct.std_error * direct.std_error);
  const double gap = std::abs(gaussian.value - direct.value);

  ctx.results = {{"gaussian", moment_to_json(gaussian, id, k)},
                 {"direct", moment_to_json(direct, id, k)},
                 {"gap", gap},
                 {"combined_se", combined_se}};
  ctx.check("gaussian vs direct within 3 SE", gap <= 3.0 * combined_se,
            "gap " + std::to_string(gap) + ", 3SE " + std::to_string(3.0 * combined_se));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("moment", seconds);
}

// ---------------------------------------------------------------- twirl-check
int run_twirl_check(RunContext& ctx, const GroupId& id, int k, std::int64_t samples, int inputs) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(ctx.seed, 0);
  const CommutantBasis basis = commutant_basis(id, k);
  const Eigen::Index dk = basis.elements.front().rows();

  double worst_ratio = 0.0;
  double worst_idem = 0.0;
  double worst_trace = 0.0;
  RngStream input_rng = rng.split(1);
  for (int input = 0; input < inputs; ++input) {
    Eigen::MatrixXcd rho(dk, dk);
    for (Eigen::Index c = 0; c < dk; ++c)
      for (Eigen::Index r = 0; r < dk; ++r) {
        const double re = input_rng.normal();
        const double im = input_rng.normal();
        rho(r, c) = std::complex<double>(re, im) / std::sqrt(2.0 * dk);
      }
    const Eigen::MatrixXcd exact = twirl(id, rho, basis);
    worst_idem = std::max(worst_idem, (twirl(id, exact, basis) - exact).cwiseAbs().maxCoeff());
    worst_trace = std::max(worst_trace, std::abs(exact.trace() - rho.trace()));
    RngStream mc = rng.split(100 + input);
    const McTwirlResult sampled = mc_twirl(id, k, rho, samples, mc);
    for (Eigen::Index c = 0; c < dk; ++c)
      for (Eigen::Index r = 0; r < dk; ++r) {
        const double dev = std::abs(sampled.mean(r, c) - exact(r, c));
        const double limit = 5.0 * sampled.std_error(r, c) + 1e-12;
        worst_ratio = std::max(worst_ratio, dev / limit);
      }
  }
  ctx.results = {{"basis_size", basis.elements.size()},
                 {"worst_mc_deviation_ratio", worst_ratio},
                 {"worst_idempotence_residual", worst_idem},
                 {"worst_trace_residual", worst_trace}};
  ctx.check("mc twirl within 5 SE", worst_ratio <= 1.0);
  ctx.check("idempotent to 1e-10", worst_idem <= 1e-10);
  ctx.check("trace-preserving to 1e-10", worst_trace <= 1e-10);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("twirl-check", seconds);
}

// ---------------------------------------------------------------- concentration
int run_concentration(RunContext& ctx, const GroupId& id, std::int64_t samples,
                      const std::vector<double>& tau_grid) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(ctx.seed, 0);
  RngStream probe = rng.split(1);

  Eigen::VectorXcd v(id.embedded_dim());
  for (int i = 0; i < id.embedded_dim(); ++i) {
    const double re = probe.normal();
    const double im = id.group == Group::SO ? 0.0 : probe.normal();
    v[i] = {re, im};
  }
  v.normalize();
  LipschitzFunctional f = register_lipschitz_functional(
      [v](const GroupElement& e) { return std::norm(v.dot(e.matrix.m.col(0))); }, 2.0, id, probe,
      20);

  RngStream mc = rng.split(2);
  const TailReport report = empirical_tail(id, f, tau_grid, samples, mc,
                                           1.0 / static_cast<double>(id.embedded_dim()));
  std::ostringstream csv;
  write_tail_csv(csv, report);
  ctx.write_file("tail.csv", csv.str());

  bool ok = true;
  for (std::size_t i = 0; i < tau_grid.size(); ++i)
    ok = ok && report.empirical_tail[i] <= report.analytic_bound[i] + 3.0 * report.binomial_se[i];
  ctx.results = tail_report_to_json(report);
  ctx.results["lipschitz_soft_check"] = f.soft_check_passed;
  ctx.check("empirical tail <= bound + 3 SE", ok);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("concentration", seconds);
}

// ---------------------------------------------------------------- tv-distance
int run_tv_distance(RunContext& ctx, Group group, int qubits, std::int64_t samples) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(ctx.seed, 0);
  const MomentEstimate est = estimate_expected_tv(group, qubits, samples, rng);
  const TvConstants constants = expected_tv_constants(group, qubits);
  const double lo = constants.mean - constants.delta_bound - 3.0 * est.std_error;
  const double hi = constants.mean + constants.delta_bound + 3.0 * est.std_error;
  const bool inside = est.value.real() >= lo && est.value.real() <= hi;

  ctx.results = {{"estimate", est.value.real()},
                 {"std_error", est.std_error},
                 {"n_samples", est.n_samples},
                 {"M", constants.mean},
                 {"Delta_bound", constants.delta_bound},
                 {"band", {{"low", lo}, {"high", hi}}},
                 {"in_band", inside}};
  ctx.check("estimate within [M - Delta - 3SE, M + Delta + 3SE]", inside);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("tv-distance", seconds);
}

// ---------------------------------------------------------------- complexity-bound
int run_complexity_bound(RunContext& ctx, Group group, const ComplexityParams& params,
                         std::optional<DesignParams> design, bool r_grid_given,
                         bool delta_grid_given, const std::string& r_grid_csv,
                         const std::string& delta_grid_csv, bool integer_m) {
  const auto start = std::chrono::steady_clock::now();
  const MomentMode mode = integer_m ? MomentMode::IntegerM : MomentMode::AsPrinted;

  if (r_grid_given || delta_grid_given) {
    // Batch mode: cartesian grid, one CSV row per point. An explicitly empty
    // grid yields a zero-row report with success status.
    const std::vector<std::int64_t> r_values =
        r_grid_given ? parse_int_list(r_grid_csv) : std::vector<std::int64_t>{params.r};
    const std::vector<double> delta_values =
        delta_grid_given ? parse_double_list(delta_grid_csv)
                         : std::vector<double>{params.delta};
    std::ostringstream csv;
    csv << "group,n,r,delta,gate_set_size,k,epsilon,formula_id,log_value,value,vacuous\n";
    int rows = 0;
    for (std::int64_t r : r_values) {
      for (double delta : delta_values) {
        ComplexityParams point = params;
        point.r = r;
        point.delta = delta;
        const BoundReport report =
            design ? design_low_complexity_prob_bound(group, point, *design, mode)
                   : low_complexity_prob_bound(group, point);
        csv << group_name(group) << ',' << point.n << ',' << r << ',' << delta << ','
            << point.gate_set_size << ',' << (design ? design->k : 0) << ','
            << (design ? design->epsilon : 0.0) << ',' << report.formula_id << ','
            << report.log_value << ',' << report.value() << ',' << (report.vacuous ? 1 : 0)
            << '\n';
        ++rows;
      }
    }
    ctx.write_file("complexity_grid.csv", csv.str());
    ctx.results = {{"rows", rows}, {"csv", csv.str()}};
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ctx.finish("complexity-bound", seconds);
  }

  const BoundReport report = design
                                 ? design_low_complexity_prob_bound(group, params, *design, mode)
                                 : low_complexity_prob_bound(group, params);
  const BoundReport size_report = measurement_class_size_bound(params);
  ctx.results = {{"bound", bound_report_to_json(report)},
                 {"measurement_class_size", bound_report_to_json(size_report)},
                 {"clamped_probability", report.clamped_probability()}};
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("complexity-bound", seconds);
}

// ---------------------------------------------------------------- packing
int run_packing(RunContext& ctx, Group group, double dim, double delta_sep,
                std::optional<DesignParams> design, bool corollary, int empirical_states) {
  const auto start = std::chrono::steady_clock::now();
  BoundReport report;
  if (corollary) {
    if (!design) throw ContractError("--corollary requires --k");
    report = corollary_packing_count(group, dim, design->k);
  } else if (design) {
    report = design_packing_count(group, dim, delta_sep, *design);
  } else {
    report = packing_count(group, dim, delta_sep);
  }
  ctx.results = {{"bound", bound_report_to_json(report)}};

  if (empirical_states > 1) {
    const GroupId id = group == Group::Sp ? GroupId(group, static_cast<int>(dim) / 2)
                                          : GroupId(group, static_cast<int>(dim));
    RngStream rng(ctx.seed, 0);
    const PairwiseFidelityReport pairwise = empirical_pairwise_fidelity(id, empirical_states, rng);
    ctx.results["empirical"] = {{"n_states", pairwise.n_states},
                                {"max_fidelity", pairwise.max_fidelity},
                                {"mean_fidelity", pairwise.mean_fidelity},
                                {"min_trace_distance", pairwise.min_trace_distance}};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("packing", seconds);
}

// ---------------------------------------------------------------- sq-bound
int run_sq_bound(RunContext& ctx, Group group, const SqParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const SqBoundReport report = sq_lower_bound(group, params);
  ctx.results = sq_report_to_json(report);
  ctx.check("xi_G >= 0", report.xi >= 0.0);
  if (!report.table.nontrivial)
    ctx.check("table route yields nontrivial bound", true, "no nontrivial bound (q_lower <= 0)");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("sq-bound", seconds);
}

// ---------------------------------------------------------------- verify
int run_verify(RunContext& ctx, const std::string& scale_name) {
  const auto start = std::chrono::steady_clock::now();
  const verify::Scale scale =
      scale_name == "quick" ? verify::Scale::Quick : verify::Scale::Full;
  const verify::VerifyReport report = verify::run_all(ctx.seed, scale, &std::cerr);
  ctx.results = verify::verify_report_to_json(report);
  for (const auto& c : report.criteria)
    ctx.check("criterion " + std::to_string(c.id) + ": " + c.name, c.passed, c.detail);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ctx.finish("verify", seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haar sampling, moments, concentration and bound calculators for the classical "
               "compact groups"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI file (sections per subcommand)");

  std::uint64_t seed = 1;
  std::string output_dir;
  std::string group_name_str = "su";
  std::optional<int> dim;
  std::optional<int> qubits;
  std::int64_t samples = 10000;

  auto add_common = [&](CLI::App* cmd, bool with_group = true) {
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--output-dir,-o", output_dir, "directory for CSV/JSON artifacts");
    if (with_group) cmd->add_option("--group", group_name_str, "group: so, su or sp");
  };

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "sample group elements or states");
  int sample_count = 3;
  bool sample_states = false;
  add_common(sample_cmd);
  sample_cmd->add_option("--dim", dim, "group dimension (quaternionic for sp)");
  sample_cmd->add_option("--qubits", qubits, "qubit count (dim = 2^n, sp embedding matches)");
  sample_cmd->add_option("--count", sample_count, "number of samples");
  sample_cmd->add_flag("--states", sample_states, "sample states instead of matrices");

  // moment
  auto* moment_cmd = app.add_subcommand("moment", "gaussian-integration moment vs direct oracle");
  int moment_k = 1;
  std::string functional_name = "x1-power";
  add_common(moment_cmd);
  moment_cmd->add_option("--dim", dim, "group dimension");
  moment_cmd->add_option("--qubits", qubits, "qubit count");
  moment_cmd->add_option("--k", moment_k, "half-degree k (functional degree 2k)");
  moment_cmd->add_option("--samples", samples, "Monte Carlo samples per route");
  moment_cmd->add_option("--functional", functional_name, "x1-power or random-poly");

  // twirl-check
  auto* twirl_cmd = app.add_subcommand("twirl-check", "exact commutant twirl vs Monte Carlo");
  int twirl_k = 2;
  int twirl_inputs = 10;
  add_common(twirl_cmd);
  twirl_cmd->add_option("--dim", dim, "group dimension");
  twirl_cmd->add_option("--qubits", qubits, "qubit count");
  twirl_cmd->add_option("--k", twirl_k, "tensor power (1 or 2)");
  twirl_cmd->add_option("--samples", samples, "Monte Carlo samples per input");
  twirl_cmd->add_option("--inputs", twirl_inputs, "number of random inputs");

  // concentration
  auto* conc_cmd = app.add_subcommand("concentration", "empirical tails vs the analytic bound");
  double tau_min = 0.05, tau_max = 0.5, tau_step = 0.05;
  add_common(conc_cmd);
  conc_cmd->add_option("--dim", dim, "group dimension");
  conc_cmd->add_option("--qubits", qubits, "qubit count");
  conc_cmd->add_option("--samples", samples, "Monte Carlo samples");
  conc_cmd->add_option("--tau-min", tau_min, "smallest tau");
  conc_cmd->add_option("--tau-max", tau_max, "largest tau");
  conc_cmd->add_option("--tau-step", tau_step, "tau increment");

  // tv-distance
  auto* tv_cmd = app.add_subcommand("tv-distance", "expected TV distance to uniform");
  int tv_qubits = 10;
  add_common(tv_cmd);
  tv_cmd->add_option("--qubits", tv_qubits, "qubit count");
  tv_cmd->add_option("--samples", samples, "Monte Carlo samples");

  // complexity-bound
  auto* comp_cmd = app.add_subcommand("complexity-bound", "state-complexity probability bounds");
  ComplexityParams comp_params;
  int comp_k = 0;
  double comp_epsilon = 0.0;
  bool integer_m = false;
  std::string r_grid_csv, delta_grid_csv;
  add_common(comp_cmd);
  comp_cmd->add_option("--qubits", comp_params.n, "qubit count");
  comp_cmd->add_option("--r", comp_params.r, "circuit size");
  comp_cmd->add_option("--delta", comp_params.delta, "distinguishing slack");
  comp_cmd->add_option("--gate-set-size", comp_params.gate_set_size, "|G|");
  comp_cmd->add_option("--k", comp_k, "design order (enables the design bound)");
  comp_cmd->add_option("--epsilon", comp_epsilon, "design approximation error");
  comp_cmd->add_flag("--integer-m", integer_m, "use the integer-moment route (m = floor(k/3))");
  comp_cmd->add_option("--r-grid", r_grid_csv, "comma-separated r grid (batch CSV mode)");
  comp_cmd->add_option("--delta-grid", delta_grid_csv, "comma-separated delta grid");

  // packing
  auto* pack_cmd = app.add_subcommand("packing", "near-orthogonal packing counts");
  double pack_dim = 1024.0, pack_delta = 0.5;
  int pack_k = 0;
  double pack_epsilon = 0.0;
  bool pack_corollary = false;
  int pack_states = 0;
  add_common(pack_cmd);
  pack_cmd->add_option("--dim", pack_dim, "Hilbert-space dimension D");
  pack_cmd->add_option("--Delta", pack_delta, "separation parameter");
  pack_cmd->add_option("--k", pack_k, "design order (enables the design bound)");
  pack_cmd->add_option("--epsilon", pack_epsilon, "design approximation error");
  pack_cmd->add_flag("--corollary", pack_corollary,
                     "specialize to Delta = D^(-1/3), eps = 2^-k D^(-k/2)");
  pack_cmd->add_option("--states", pack_states, "also sample states and report pairwise extremes");

  // sq-bound
  auto* sq_cmd = app.add_subcommand("sq-bound", "statistical-query lower bound");
  SqParams sq_params;
  add_common(sq_cmd);
  sq_cmd->add_option("--qubits", sq_params.n, "qubit count");
  sq_cmd->add_option("--tau", sq_params.tau, "query tolerance");
  sq_cmd->add_option("--epsilon", sq_params.epsilon, "learning accuracy");
  sq_cmd->add_option("--beta", sq_params.beta, "success fraction");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  std::string scale_name = "quick";
  add_common(verify_cmd, /*with_group=*/false);
  verify_cmd->add_option("--scale", scale_name, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  RunContext ctx;
  ctx.seed = seed;
  ctx.output_dir = output_dir;

  try {
    if (sample_cmd->parsed()) {
      const GroupId id = resolve_group(group_name_str, dim, qubits);
      ctx.config = {{"command", "sample"},    {"group", id.to_string()}, {"seed", seed},
                    {"count", sample_count},  {"states", sample_states},
                    {"output_dir", output_dir}};
      return run_sample(ctx, id, sample_count, sample_states);
    }
    if (moment_cmd->parsed()) {
      const GroupId id = resolve_group(group_name_str, dim, qubits);
      ctx.config = {{"command", "moment"},   {"group", id.to_string()},
                    {"seed", seed},          {"k", moment_k},
                    {"samples", samples},    {"functional", functional_name}};
      return run_moment(ctx, id, moment_k, samples, functional_name);
    }
    if (twirl_cmd->parsed()) {
      const GroupId id = resolve_group(group_name_str, dim, qubits);
      ctx.config = {{"command", "twirl-check"}, {"group", id.to_string()}, {"seed", seed},
                    {"k", twirl_k},             {"samples", samples},      {"inputs", twirl_inputs}};
      return run_twirl_check(ctx, id, twirl_k, samples, twirl_inputs);
    }
    if (conc_cmd->parsed()) {
      const GroupId id = resolve_group(group_name_str, dim, qubits);
      std::vector<double> tau_grid;
      for (double tau = tau_min; tau <= tau_max + 1e-12; tau += tau_step) tau_grid.push_back(tau);
      ctx.config = {{"command", "concentration"}, {"group", id.to_string()}, {"seed", seed},
                    {"samples", samples},         {"tau_min", tau_min},      {"tau_max", tau_max},
                    {"tau_step", tau_step}};
      return run_concentration(ctx, id, samples, tau_grid);
    }
    if (tv_cmd->parsed()) {
      const Group group = parse_group(group_name_str);
      ctx.config = {{"command", "tv-distance"},
                    {"group", group_name_str},
                    {"qubits", tv_qubits},
                    {"samples", samples},
                    {"seed", seed}};
      return run_tv_distance(ctx, group, tv_qubits, samples);
    }
    if (comp_cmd->parsed()) {
      const Group group = parse_group(group_name_str);
      std::optional<DesignParams> design;
      if (comp_k > 0) design = DesignParams{comp_k, comp_epsilon};
      ctx.config = {{"command", "complexity-bound"},
                    {"group", group_name_str},
                    {"qubits", comp_params.n},
                    {"r", comp_params.r},
                    {"delta", comp_params.delta},
                    {"gate_set_size", comp_params.gate_set_size},
                    {"k", comp_k},
                    {"epsilon", comp_epsilon},
                    {"integer_m", integer_m},
                    {"r_grid", r_grid_csv},
                    {"delta_grid", delta_grid_csv},
                    {"seed", seed}};
      return run_complexity_bound(ctx, group, comp_params, design,
                                  comp_cmd->count("--r-grid") > 0,
                                  comp_cmd->count("--delta-grid") > 0, r_grid_csv,
                                  delta_grid_csv, integer_m);
    }
    if (pack_cmd->parsed()) {
      const Group group = parse_group(group_name_str);
      std::optional<DesignParams> design;
      if (pack_k > 0) design = DesignParams{pack_k, pack_epsilon};
      ctx.config = {{"command", "packing"},   {"group", group_name_str}, {"dim", pack_dim},
                    {"Delta", pack_delta},    {"k", pack_k},             {"epsilon", pack_epsilon},
                    {"corollary", pack_corollary}, {"states", pack_states}, {"seed", seed}};
      return run_packing(ctx, group, pack_dim, pack_delta, design, pack_corollary, pack_states);
    }
    if (sq_cmd->parsed()) {
      const Group group = parse_group(group_name_str);
      ctx.config = {{"command", "sq-bound"}, {"group", group_name_str}, {"qubits", sq_params.n},
                    {"tau", sq_params.tau},  {"epsilon", sq_params.epsilon},
                    {"beta", sq_params.beta}, {"seed", seed}};
      return run_sq_bound(ctx, group, sq_params);
    }
    if (verify_cmd->parsed()) {
      ctx.config = {{"command", "verify"}, {"seed", seed}, {"scale", scale_name}};
      return run_verify(ctx, scale_name);
    }
  } catch (const ContractError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    std::cerr << "config error (validity window): " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfigError;
}
