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

#include <cstdint>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace haarlab::verify {

/// Quick runs the same criteria at reduced sample counts (~2 minutes);
/// Full runs the stated counts.
enum class Scale { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  Scale scale = Scale::Full;
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
  double total_seconds = 0.0;
};

/// Runs the whole acceptance suite. When progress is non-null, one
/// "[PASS]/[FAIL] <id>: <name> ..." line is printed per criterion as it
/// completes.
VerifyReport run_all(std::uint64_t seed, Scale scale, std::ostream* progress = nullptr);

nlohmann::json verify_report_to_json(const VerifyReport& report);

}  // namespace haarlab::verify
