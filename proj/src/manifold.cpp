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

#include "fedosov/manifold.hpp"

#include <string>
#include <utility>

#include "fedosov/errors.hpp"

namespace fedosov {

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ValidationError("matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw ValidationError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

ManifoldSpec::ManifoldSpec(RationalMatrix lower, RationalMatrix upper)
    : dim_(static_cast<int>(lower.size())), lower_(std::move(lower)), upper_(std::move(upper)) {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (sgn(upper_[i][j]) != 0) poisson_.push_back({i + 1, j + 1, upper_[i][j]});
    }
  }
}

ManifoldSpec ManifoldSpec::standard(int dim) {
  if (dim <= 0 || dim % 2 != 0) {
    throw ValidationError("manifold dimension must be even and positive, got " + std::to_string(dim));
  }
  RationalMatrix upper(dim, std::vector<Rational>(dim, 0));
  for (int a = 0; a < dim; a += 2) {
    upper[a][a + 1] = 1;
    upper[a + 1][a] = -1;
  }
  // omega^{ij} omega_{jk} = delta^i_k
  return ManifoldSpec(invert(upper), upper);
}

ManifoldSpec ManifoldSpec::from_lower(RationalMatrix omega_lower) {
  const std::size_t n = omega_lower.size();
  if (n == 0 || n % 2 != 0) {
    throw ValidationError("manifold dimension must be even and positive, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (omega_lower[i].size() != n) throw ValidationError("omega is not a square matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      omega_lower[i][j].canonicalize();
      if (omega_lower[i][j] != -omega_lower[j][i]) {
        throw ValidationError("omega is not antisymmetric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
    }
  }
  RationalMatrix upper;
  try {
    upper = invert(omega_lower);
  } catch (const ValidationError&) {
    throw ValidationError("omega is degenerate");
  }
  return ManifoldSpec(std::move(omega_lower), std::move(upper));
}

}  // namespace fedosov
