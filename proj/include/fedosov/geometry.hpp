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

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fedosov/manifold.hpp"
#include "fedosov/polynomial.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

using IndexTriple = std::array<int, 3>;
using IndexQuad = std::array<int, 4>;

/// One raw input coefficient Gamma_{ijk}, indices 1-based and in any order.
struct GammaEntry {
  IndexTriple indices;
  BasePolynomial value;
};

/// Lowered coefficients Gamma_{ijk} of a symplectic connection in a Darboux
/// chart, stored once per sorted index triple.
class ConnectionSpec {
 public:
  ConnectionSpec() = default;
  explicit ConnectionSpec(int dim) : dim_(dim) {}

  /// Normalizes index order; throws ValidationError if two permutations of
  /// the same triple carry different values or an index is out of range.
  static ConnectionSpec from_entries(int dim, std::span<const GammaEntry> entries);
  static ConnectionSpec flat(int dim) { return ConnectionSpec(dim); }

  int dim() const { return dim_; }
  /// Gamma_{ijk} for any index order.
  BasePolynomial operator()(int i, int j, int k) const;
  const std::map<IndexTriple, BasePolynomial>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Sets Gamma on the sorted triple (overwrites).
  void set(int i, int j, int k, const BasePolynomial& value);

 private:
  int dim_ = 0;
  std::map<IndexTriple, BasePolynomial> entries_;
};

/// (R_Gamma)_{ijkl}; only nonzero components are stored.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  BasePolynomial operator()(int i, int j, int k, int l) const;
  const std::map<IndexQuad, BasePolynomial>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  void set(const IndexQuad& idx, BasePolynomial value);

 private:
  int dim_;
  std::map<IndexQuad, BasePolynomial> components_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  /// Number of distinct sorted triples carrying a nonzero coefficient.
  std::size_t independent_entries = 0;
  /// C(2n+2, 2n-1), the count of independent Gamma_{ijk} slots.
  std::size_t max_independent_entries = 0;
};

/// Checks the omega invariants (antisymmetry, nondegeneracy, inverse
/// relation) and the total symmetry of raw Gamma input. In Darboux
/// coordinates symmetry is equivalent to omega_{ij;k} = 0.
ValidationReport validate(const ManifoldSpec& m, std::span<const GammaEntry> entries);
ValidationReport validate(const ManifoldSpec& m, const ConnectionSpec& c);

/// Gamma = 1/2 Gamma_{ijk} X^i X^j dq^k.
WeylSeries gamma_form(const ManifoldSpec& m, const ConnectionSpec& c);

/// (R_Gamma)_{ijkl} = d_k Gamma_{ilj} - d_l Gamma_{ijk}
///                    + omega^{mp} Gamma_{plj} Gamma_{ikm} - omega^{mp} Gamma_{pjk} Gamma_{ilm}.
CurvatureTensor curvature_tensor(const ManifoldSpec& m, const ConnectionSpec& c);

enum class CurvatureRoute { kTensor, kFormEquation };

/// Curvature 2-form of Gamma. kFormEquation evaluates d Gamma + (1/(i hbar)) Gamma o Gamma;
/// kTensor assembles 1/4 (R_Gamma)_{ijkl} X^i X^j dq^k ^ dq^l.
WeylSeries curvature_form(const ManifoldSpec& m, const ConnectionSpec& c,
                          CurvatureRoute via = CurvatureRoute::kFormEquation);

/// Dimension of the space of tensors symmetric in (ij), antisymmetric in
/// (kl) and obeying the cyclic identity in (jkl); computed by exact rank.
std::size_t curvature_component_count(int dim);

}  // namespace fedosov
