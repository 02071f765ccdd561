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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "haarlab/errors.hpp"
#include "haarlab/field.hpp"
#include "haarlab/rng.hpp"

namespace haarlab {

/// Dense matrix together with its scalar field. Storage is always complex;
/// a Real tag asserts that every imaginary part is zero. Quaternionic
/// matrices never appear here directly - they enter the library only through
/// their complex embedding, produced by the symplectic sampler.
struct DenseMatrix {
  FieldTag field = FieldTag::Complex;
  Eigen::MatrixXcd m;

  DenseMatrix() = default;
  DenseMatrix(FieldTag f, Eigen::MatrixXcd values) : field(f), m(std::move(values)) {}

  static DenseMatrix real(const Eigen::MatrixXd& values) {
    return DenseMatrix(FieldTag::Real, values.cast<std::complex<double>>());
  }
  static DenseMatrix complex(Eigen::MatrixXcd values) {
    return DenseMatrix(FieldTag::Complex, std::move(values));
  }

  Eigen::Index rows() const { return m.rows(); }
  Eigen::Index cols() const { return m.cols(); }

  void validate() const {
    if (rows() < 1 || cols() < 1) throw ContractError("DenseMatrix: empty shape");
    if (!m.allFinite()) throw ContractError("DenseMatrix: non-finite entry");
    if (field == FieldTag::Real && m.imag().cwiseAbs().maxCoeff() != 0.0)
      throw ContractError("DenseMatrix: real field with nonzero imaginary part");
  }
};

/// Amplitude vector over one of the three fields.
///
/// Storage layout: `storage` holds `dim` complex entries for Real and
/// Complex fields (Real entries have zero imaginary part). For the
/// Quaternion field it holds 2*dim complex entries in the interleaved ket
/// layout: quaternion q_l = q1 + q2 i + q3 j + q4 k occupies slots
/// (2l, 2l+1) as (q1 + i q2, q3 + i q4). Under this layout the Euclidean
/// norm of the storage equals the quaternionic norm of the vector.
class AmplitudeVector {
 public:
  AmplitudeVector() = default;
  AmplitudeVector(FieldTag field, int dim, Eigen::VectorXcd storage)
      : field_(field), dim_(dim), v_(std::move(storage)) {
    if (dim_ < 1) throw ContractError("AmplitudeVector: dim must be >= 1");
    const Eigen::Index expected = (field_ == FieldTag::Quaternion) ? 2 * dim_ : dim_;
    if (v_.size() != expected) throw ContractError("AmplitudeVector: storage size mismatch");
    if (!v_.allFinite()) throw ContractError("AmplitudeVector: non-finite entry");
  }

  FieldTag field() const { return field_; }
  int dim() const { return dim_; }

  /// Complex view of the amplitudes; for Quaternion this is the embedded
  /// 2*dim complex vector described above.
  const Eigen::VectorXcd& storage() const { return v_; }
  Eigen::VectorXcd& storage() { return v_; }

  double norm() const { return v_.norm(); }

  AmplitudeVector scaled(double factor) const {
    return AmplitudeVector(field_, dim_, v_ * factor);
  }

 private:
  FieldTag field_ = FieldTag::Complex;
  int dim_ = 0;
  Eigen::VectorXcd v_;
};

/// Vector of independent standard Gaussian draws over the given field: each
/// real component of each entry is one N(0,1) draw, taken in a fixed order
/// (entry by entry; re,im for Complex; 1,i,j,k for Quaternion).
inline AmplitudeVector gaussian_vector(int dim, FieldTag field, RngStream& rng) {
  if (dim < 1) throw ContractError("gaussian_vector: dim must be >= 1");
  switch (field) {
    case FieldTag::Real: {
      Eigen::VectorXcd v(dim);
      for (int i = 0; i < dim; ++i) v[i] = rng.normal();
      return AmplitudeVector(field, dim, std::move(v));
    }
    case FieldTag::Complex: {
      Eigen::VectorXcd v(dim);
      for (int i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v[i] = {re, im};
      }
      return AmplitudeVector(field, dim, std::move(v));
    }
    case FieldTag::Quaternion: {
      Eigen::VectorXcd v(2 * dim);
      for (int i = 0; i < dim; ++i) {
        const double q1 = rng.normal();
        const double q2 = rng.normal();
        const double q3 = rng.normal();
        const double q4 = rng.normal();
        v[2 * i] = {q1, q2};
        v[2 * i + 1] = {q3, q4};
      }
      return AmplitudeVector(field, dim, std::move(v));
    }
  }
  throw ContractError("gaussian_vector: unknown field");
}

}  // namespace haarlab
