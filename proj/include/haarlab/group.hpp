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

#include <string>

#include "haarlab/errors.hpp"
#include "haarlab/field.hpp"

namespace haarlab {

enum class Group { SO, SU, Sp };

inline std::string group_name(Group g) {
  switch (g) {
    case Group::SO: return "so";
    case Group::SU: return "su";
    case Group::Sp: return "sp";
  }
  throw ContractError("unknown group");
}

inline Group parse_group(const std::string& name) {
  if (name == "so" || name == "SO") return Group::SO;
  if (name == "su" || name == "SU") return Group::SU;
  if (name == "sp" || name == "Sp" || name == "SP") return Group::Sp;
  throw ContractError("unknown group name: " + name);
}

inline FieldTag field_of(Group g) {
  switch (g) {
    case Group::SO: return FieldTag::Real;
    case Group::SU: return FieldTag::Complex;
    case Group::Sp: return FieldTag::Quaternion;
  }
  throw ContractError("unknown group");
}

/// Group identifier. `dim` is the matrix dimension for SO and SU, and the
/// quaternionic dimension for Sp: the complex embedding of Sp(dim) acts on
/// 2*dim complex dimensions. For an n-qubit system, SO/SU use dim = 2^n and
/// Sp uses dim = 2^(n-1) so that its embedding matches 2^n.
struct GroupId {
  Group group = Group::SU;
  int dim = 2;

  GroupId() = default;
  GroupId(Group g, int d) : group(g), dim(d) { validate(); }

  void validate() const {
    if (group == Group::Sp) {
      if (dim < 1) throw ContractError("Sp requires dim >= 1");
    } else if (dim < 2) {
      throw ContractError(group_name(group) + " requires dim >= 2");
    }
  }

  FieldTag field() const { return field_of(group); }

  /// Dimension of the complex space the sampled matrices act on.
  int embedded_dim() const { return group == Group::Sp ? 2 * dim : dim; }

  /// Dimension of sampled states viewed as complex amplitude vectors.
  int state_dim() const { return embedded_dim(); }

  std::string to_string() const {
    return group_name(group) + "(" + std::to_string(dim) + ")";
  }

  /// GroupId for an n-qubit register.
  static GroupId for_qubits(Group g, int n) {
    if (n < 1) throw ContractError("qubit count must be >= 1");
    if (n > 30) throw ContractError("qubit count out of range");
    const int d = 1 << n;
    return g == Group::Sp ? GroupId(g, d / 2) : GroupId(g, d);
  }
};

inline bool operator==(const GroupId& a, const GroupId& b) {
  return a.group == b.group && a.dim == b.dim;
}

}  // namespace haarlab
