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
#include <string>

#include "haarlab/errors.hpp"

namespace haarlab {

/// Scalar field of a vector or matrix. Quaternion values carry four real
/// components (1, i, j, k), complex values two, real values one.
enum class FieldTag { Real, Complex, Quaternion };

inline int components_per_entry(FieldTag field) {
  switch (field) {
    case FieldTag::Real: return 1;
    case FieldTag::Complex: return 2;
    case FieldTag::Quaternion: return 4;
  }
  throw ContractError("unknown field tag");
}

inline std::string field_name(FieldTag field) {
  switch (field) {
    case FieldTag::Real: return "real";
    case FieldTag::Complex: return "complex";
    case FieldTag::Quaternion: return "quaternion";
  }
  throw ContractError("unknown field tag");
}

/// Quaternion q = a + j*b with a, b complex, i.e. the Cayley-Dickson split
/// q = (w + x i) + j (y - z i)^*.  Stored this way the quaternionic inner
/// product and right scalar multiplication reduce to complex vector ops,
/// which is what the symplectic Gram-Schmidt runs on.
struct Quaternion {
  std::complex<double> a{0.0, 0.0};  // w + x i
  std::complex<double> b{0.0, 0.0};  // y - z i  (so q = a + j b)

  static Quaternion from_components(double w, double x, double y, double z) {
    return {{w, x}, {y, -z}};
  }

  double w() const { return a.real(); }
  double x() const { return a.imag(); }
  double y() const { return b.real(); }
  double z() const { return -b.imag(); }

  Quaternion conjugate() const { return {std::conj(a), -b}; }

  double norm_squared() const { return std::norm(a) + std::norm(b); }
  double norm() const { return std::sqrt(norm_squared()); }

  Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b}; }
  Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b}; }

  // (a1 + j b1)(a2 + j b2) = (a1 a2 - conj(b1) b2) + j (conj(a1) b2 + b1 a2)
  Quaternion operator*(const Quaternion& o) const {
    return {a * o.a - std::conj(b) * o.b, std::conj(a) * o.b + b * o.a};
  }

  Quaternion operator*(double s) const { return {a * s, b * s}; }
};

inline bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
  return (p - q).norm() <= tol;
}

}  // namespace haarlab
