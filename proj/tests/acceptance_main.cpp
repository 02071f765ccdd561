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

// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// when anything fails. Usage: haarlab_acceptance [--scale quick|full]
// [--seed N]

#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "haarlab/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  haarlab::verify::Scale scale = haarlab::verify::Scale::Full;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--scale" && i + 1 < argc) {
      const std::string value = argv[++i];
      if (value == "quick") {
        scale = haarlab::verify::Scale::Quick;
      } else if (value == "full") {
        scale = haarlab::verify::Scale::Full;
      } else {
        std::cerr << "unknown scale: " << value << "\n";
        return 2;
      }
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: haarlab_acceptance [--scale quick|full] [--seed N]\n";
      return 2;
    }
  }

  const auto report = haarlab::verify::run_all(seed, scale, &std::cout);
  std::cout << (report.all_passed ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << report.total_seconds << " s total)\n";
  return report.all_passed ? 0 : 1;
}
