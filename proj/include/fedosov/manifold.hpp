// Copyright 2026 The fedosov-weyl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "fedosov/scalar.hpp"

namespace fedosov {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Constant symplectic structure of a Darboux chart.
///
/// Holds omega_{ij} and the Poisson tensor omega^{ij}, tied together by
/// omega^{ij} omega_{jk} = delta^i_k. Indices in the public API are 1-based.
class ManifoldSpec {
 public:
  struct PoissonEntry {
    int i;
    int j;
    Rational value;
  };

  /// Pairwise Darboux blocks on (q^{2a-1}, q^{2a}) with omega^{2a-1,2a} = +1.
  static ManifoldSpec standard(int dim);
  /// Any constant antisymmetric invertible omega_{ij}; throws ValidationError.
  static ManifoldSpec from_lower(RationalMatrix omega_lower);

  int dim() const { return dim_; }
  const RationalMatrix& omega_lower() const { return lower_; }
  const RationalMatrix& omega_upper() const { return upper_; }
  const Rational& lower(int i, int j) const { return lower_[i - 1][j - 1]; }
  const Rational& upper(int i, int j) const { return upper_[i - 1][j - 1]; }
  /// Nonzero omega^{ij} entries, 1-based, row-major.
  const std::vector<PoissonEntry>& poisson_entries() const { return poisson_; }

 private:
  ManifoldSpec(RationalMatrix lower, RationalMatrix upper);

  int dim_ = 0;
  RationalMatrix lower_;
  RationalMatrix upper_;
  std::vector<PoissonEntry> poisson_;
};

/// Exact inverse by Gauss-Jordan elimination; throws ValidationError when
/// the matrix is singular.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace fedosov
