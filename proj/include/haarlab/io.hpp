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

#include <json.hpp>
#include <ostream>

#include "haarlab/born.hpp"
#include "haarlab/complexity.hpp"
#include "haarlab/concentration.hpp"
#include "haarlab/moments.hpp"
#include "haarlab/sampler.hpp"

namespace haarlab {

/// One matrix row per CSV line; complex entries as re,im pairs, real
/// matrices as single values.
void write_matrix_csv(std::ostream& out, const DenseMatrix& matrix);

/// One line of amplitudes; complex entries as re,im pairs.
void write_state_csv(std::ostream& out, const AmplitudeVector& state);

/// Header tau,empirical,bound,se followed by one line per grid point.
void write_tail_csv(std::ostream& out, const TailReport& report);

/// Header x,p followed by one line per outcome.
void write_born_csv(std::ostream& out, const BornDistribution& p);

nlohmann::json moment_to_json(const MomentEstimate& estimate, const GroupId& id, int k);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json sq_report_to_json(const SqBoundReport& report);
nlohmann::json tail_report_to_json(const TailReport& report);
nlohmann::json invariance_report_to_json(const InvarianceReport& report);

}  // namespace haarlab
