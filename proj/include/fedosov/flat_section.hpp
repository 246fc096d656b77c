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

#include <map>

#include "fedosov/abelian.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

/// Flat section sigma^{-1}(a0) of the Abelian connection, by grade.
struct FlatSection {
  HbarPolynomial base;  ///< a0 (may carry powers of hbar)
  std::map<int, WeylSeries> components;
  int known_through = 0;
  int sweeps = 0;  ///< grade sweeps performed

  WeylSeries total(int dim) const;
};

/// Solves a = a0 + delta^{-1}( d_Gamma a + (1/(i hbar)) [r, a] ) grade by
/// grade through max_degree. Grade z only depends on grades < z, so one
/// sweep per grade fixes the section. Requires r known through max_degree.
FlatSection flat_section(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                         const HbarPolynomial& base, int max_degree);

/// Same fixed point by plain iteration a_{s+1} = a0 + delta^{-1}(...)(a_s)
/// from a_0 = a0; used to cross-check the graded solver.
FlatSection flat_section_iterative(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                                   const HbarPolynomial& base, int max_degree);

/// -delta a + d_Gamma a + (1/(i hbar)) [r, a], the covariant derivative of
/// a along the Abelian connection, through grade max_degree - 1.
WeylSeries flatness_residual(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                             const FlatSection& a);

/// a0 * b0 through hbar^order. Sections and products are carried to grade
/// 2 * order, which determines every X-free hbar^k term with k <= order.
HbarPolynomial star(const ManifoldSpec& m, const ConnectionSpec& c, const HbarPolynomial& a0, const HbarPolynomial& b0,
                    int order);

/// Overload reusing a precomputed correction (known through >= 2 * order).
HbarPolynomial star(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                    const HbarPolynomial& a0, const HbarPolynomial& b0, int order);

/// {f, g} = omega^{ij} d_i f d_j g.
BasePolynomial poisson_bracket(const ManifoldSpec& m, const BasePolynomial& f, const BasePolynomial& g);

HbarPolynomial truncate_hbar(const HbarPolynomial& p, int order);

}  // namespace fedosov
