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

#include <vector>

#include "haarlab/parallel.hpp"
#include "haarlab/rng.hpp"
#include "haarlab/stats.hpp"

using namespace haarlab;

TEST_CASE("accumulator matches direct formulas") {
  const std::vector<double> xs = {1.0, 2.5, -0.5, 4.0, 0.0};
  Accumulator acc;
  for (double x : xs) acc.add(x);
  CHECK(acc.count() == 5);
  CHECK(acc.mean() == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(acc.variance() == doctest::Approx(3.425).epsilon(1e-12));  // sample variance
}

TEST_CASE("accumulator merge equals one-shot accumulation") {
  RngStream rng(17, 0);
  Accumulator whole, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal();
    whole.add(x);
    (i < 400 ? left : right).add(x);
  }
  left.merge(right);
  CHECK(left.count() == whole.count());
  CHECK(left.mean() == doctest::Approx(whole.mean()).epsilon(1e-12));
  CHECK(left.variance() == doctest::Approx(whole.variance()).epsilon(1e-12));
}

TEST_CASE("run_sharded is deterministic and covers the total") {
  const RngStream base(99, 0);
  auto run = [&] {
    auto slots = run_sharded<Accumulator>(10000, base,
                                          [](RngStream stream, std::int64_t count, Accumulator& acc) {
                                            for (std::int64_t i = 0; i < count; ++i)
                                              acc.add(stream.normal());
                                          });
    Accumulator merged;
    for (const auto& s : slots) merged.merge(s);
    return merged;
  };
  const Accumulator first = run();
  const Accumulator second = run();
  CHECK(first.count() == 10000);
  CHECK(first.mean() == second.mean());
  CHECK(first.variance() == second.variance());
}

TEST_CASE("kolmogorov tail function") {
  CHECK(kolmogorov_q(1e-9) == doctest::Approx(1.0));
  CHECK(kolmogorov_q(0.21) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(kolmogorov_q(0.5) > kolmogorov_q(1.0));
  CHECK(kolmogorov_q(1.0) > kolmogorov_q(2.0));
  CHECK(kolmogorov_q(5.0) < 1e-10);
}

TEST_CASE("one-sample KS against uniform") {
  RngStream rng(23, 0);
  std::vector<double> uniform;
  for (int i = 0; i < 20000; ++i) uniform.push_back(rng.uniform01());
  CHECK(ks_uniform_p(uniform, 0.0, 1.0) > 0.01);

  std::vector<double> squeezed;
  for (int i = 0; i < 20000; ++i) squeezed.push_back(rng.uniform01() * 0.8);
  CHECK(ks_uniform_p(squeezed, 0.0, 1.0) < 1e-6);
}

TEST_CASE("two-sample KS") {
  RngStream rng(29, 0);
  std::vector<double> a, b, shifted;
  for (int i = 0; i < 5000; ++i) {
    a.push_back(rng.normal());
    b.push_back(rng.normal());
    shifted.push_back(rng.normal() + 0.2);
  }
  CHECK(ks_two_sample_p(a, b) > 0.001);
  CHECK(ks_two_sample_p(a, shifted) < 1e-6);
}

TEST_CASE("pearson correlation") {
  std::vector<double> x, y_lin, y_flat;
  RngStream rng(31, 0);
  for (int i = 0; i < 2000; ++i) {
    const double v = rng.normal();
    x.push_back(v);
    y_lin.push_back(2.0 * v + 1.0);
    y_flat.push_back(3.0);
  }
  CHECK(pearson_correlation(x, y_lin) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pearson_correlation(x, y_flat) == 0.0);
}
