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
#include <complex>
#include <cstdint>
#include <vector>

namespace haarlab {

/// Streaming mean/variance (Welford update, Chan et al. merge). Merging in a
/// fixed shard order keeps pooled estimates reproducible regardless of how
/// many workers ran the shards.
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  void merge(const Accumulator& other) {
    if (other.n_ == 0) return;
    if (n_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / (na + nb);
    m2_ += other.m2_ + delta * delta * na * nb / (na + nb);
    n_ += other.n_;
  }

  std::int64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double std_dev() const { return std::sqrt(variance()); }
  double std_error() const {
    return n_ > 0 ? std_dev() / std::sqrt(static_cast<double>(n_)) : 0.0;
  }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Accumulator for complex-valued samples; the standard error is that of the
/// complex mean, sqrt((var_re + var_im)/n).
class ComplexAccumulator {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void merge(const ComplexAccumulator& other) {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }
  std::int64_t count() const { return re_.count(); }
  std::complex<double> mean() const { return {re_.mean(), im_.mean()}; }
  double std_error() const {
    const auto n = re_.count();
    if (n == 0) return 0.0;
    return std::sqrt((re_.variance() + im_.variance()) / static_cast<double>(n));
  }

 private:
  Accumulator re_, im_;
};

/// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

/// One-sample KS p-value of `values` against Uniform[lo, hi].
double ks_uniform_p(std::vector<double> values, double lo, double hi);

/// Two-sample KS p-value (asymptotic, with the usual small-sample
/// correction of the effective size).
double ks_two_sample_p(std::vector<double> a, std::vector<double> b);

/// Pearson correlation coefficient; 0 for degenerate inputs.
double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

/// Standard error of an empirical proportion p over n trials.
inline double binomial_se(double p, std::int64_t n) {
  return n > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0;
}

}  // namespace haarlab
