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

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "haarlab/group.hpp"
#include "haarlab/rng.hpp"

namespace haarlab {

/// Parameters of the circuit-counting bounds: n qubits, circuit size r
/// (2-local gates), distinguishing slack delta, gate-set cardinality.
struct ComplexityParams {
  int n = 1;
  std::int64_t r = 0;
  double delta = 0.5;
  std::int64_t gate_set_size = 2;

  double dim() const { return std::ldexp(1.0, n); }  // D = 2^n
  void validate() const {
    if (n < 1 || n > 1000) throw ContractError("ComplexityParams: n out of range");
    if (r < 0) throw ContractError("ComplexityParams: r must be >= 0");
    if (gate_set_size < 1) throw ContractError("ComplexityParams: |G| must be >= 1");
  }
};

struct DesignParams {
  int k = 4;
  double epsilon = 0.0;
  void validate() const {
    if (k < 1) throw ContractError("DesignParams: k must be >= 1");
    if (epsilon < 0.0) throw ContractError("DesignParams: epsilon must be >= 0");
  }
};

/// Closed-form evaluation result. Exponentially large or small values are
/// carried in natural-log space; value() may overflow to inf, which is why
/// log_value is the field of record.
struct BoundReport {
  std::optional<Group> group;
  std::string formula_id;
  double log_value = 0.0;
  bool vacuous = false;  // probability-type bound with raw value >= 1
  std::map<std::string, double> inputs;

  double value() const { return std::exp(log_value); }
  double log10_value() const { return log_value / 2.302585092994045684; }
  /// Probability bounds clamped to [0,1]; the raw value stays in log_value.
  double clamped_probability() const { return std::min(1.0, value()); }
};

/// Counting bound 2 D (n+1)^r |G|^r on the measurement classes reachable
/// with r two-local gates.
BoundReport measurement_class_size_bound(const ComplexityParams& params);

/// Probability that a Haar state of the group admits a distinguishing
/// measurement of circuit size at most r (slack delta):
/// 4D(n+1)^r |G|^r times the group's sub-Gaussian factor.
BoundReport low_complexity_prob_bound(Group group, const ComplexityParams& params);

/// Moment-mode selector for the design-ensemble bounds: the printed
/// specializations use real-valued m = k/3 (or k/2); the underlying
/// large-deviation argument requires integer m, offered as a labeled
/// alternative using floor().
enum class MomentMode { AsPrinted, IntegerM };

/// Same probability under an eps-approximate k-design, valid for k > 3 and
/// delta in (0, 1/2 - 1/D - 1/(2 D^(3/2))).
BoundReport design_low_complexity_prob_bound(Group group, const ComplexityParams& params,
                                             const DesignParams& design,
                                             MomentMode mode = MomentMode::AsPrinted);

/// Guaranteed count of pairwise nearly-orthogonal high-complexity states
/// (trace distance >= 1 - Delta) in the exact ensembles.
BoundReport packing_count(Group group, double dim, double delta_sep);

/// Same count for eps-approximate k-designs; requires (2-Delta)Delta > 1/D.
BoundReport design_packing_count(Group group, double dim, double delta_sep,
                                 const DesignParams& design,
                                 MomentMode mode = MomentMode::AsPrinted);

/// Design packing specialized to Delta = D^(-1/3), eps = 2^(-k) D^(-k/2);
/// the report's inputs include the observed scaling exponent
/// ln(N) / ln(D/k).
BoundReport corollary_packing_count(Group group, double dim, int k);

/// Monte Carlo pairwise geometry of sampled states.
struct PairwiseFidelityReport {
  double max_fidelity = 0.0;
  double min_trace_distance = 1.0;
  double mean_fidelity = 0.0;
  std::int64_t n_states = 0;
  std::int64_t n_pairs = 0;
};

PairwiseFidelityReport empirical_pairwise_fidelity(const GroupId& id, std::int64_t n_states,
                                                   RngStream& rng);

}  // namespace haarlab
