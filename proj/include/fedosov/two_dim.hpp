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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fedosov/manifold.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov::twodim {

/// Coefficient of (i hbar)^t (X1)^{r+s-t} (X2)^{k+j-t} in
/// (X1)^r (X2)^j o (X1)^s (X2)^k:
///   2^{-t} r! j! s! k! sum_a (-1)^a / (a! (t-a)! (r-t+a)! (j-a)! (s-a)! (k-t+a)!)
/// over max(t-r, t-k, 0) <= a <= min(j, s, t). Throws DomainError for a
/// negative argument or t > min(r,k) + min(j,s).
Rational f_coeff(int r, int j, int s, int k, int t);

/// (X1)^r (X2)^j o (X1)^s (X2)^k assembled from f_coeff on the standard
/// 2D structure (omega^{12} = +1).
WeylSeries monomial_circ(int r, int j, int s, int k);

/// Index of b_{2k,l}: the pair (k, l).
using BIndex = std::pair<int, int>;

/// The coefficients b_{2k,l} of a homogeneous 2D 2-form F of degree z - 1
/// with only even powers of hbar:
///   F = sum_{k,l} hbar^{2k} (z-4k+1) b_{2k,l} (X1)^l (X2)^{z-1-4k-l} dq ^ dp,
/// for 0 <= k <= floor((z-1)/4), 0 <= l <= z-1-4k.
class CoefficientTable {
 public:
  explicit CoefficientTable(int z);

  int z() const { return z_; }
  int max_k() const { return (z_ - 1) / 4; }
  /// All admissible (k, l), in canonical order.
  std::vector<BIndex> indices() const;
  bool admissible(int k, int l) const;

  const BasePolynomial& operator()(int k, int l) const;
  void set(int k, int l, const BasePolynomial& value);
  void set(int k, int l, const GaussianRational& value);
  bool is_zero() const;

  /// The 2-form F described by the table.
  WeylSeries to_form() const;
  /// Inverse of to_form; throws DomainError unless F is a homogeneous 2D
  /// 2-form of degree z - 1 with even hbar powers only.
  static CoefficientTable from_form(const WeylSeries& f);

  static std::string name(int k, int l);

 private:
  int z_;
  std::map<BIndex, BasePolynomial> b_;
  BasePolynomial zero_;
};

/// One contribution factor * b_{2k,l} * b_{2w,r} of g_{2A+1,B}.
struct QuadraticTerm {
  BIndex left;
  BIndex right;
  GaussianRational factor;
};

/// Terms of g_{2A+1,B} over the constrained (k, w, l) region; the
/// coefficient of hbar^{2A+1} (X1)^B (X2)^{2z-4A-B-2} dq ^ dp in
/// delta^{-1}F o delta^{-1}F. Throws DomainError if 4A + B + 2 > 2z.
std::vector<QuadraticTerm> g_terms(int z, int A, int B);

/// g_{2A+1,B} evaluated on a table.
BasePolynomial g_coeff(const CoefficientTable& b, int A, int B);

/// All admissible (A, B) for degree z: A, B >= 0 and 4A + B + 2 <= 2z.
std::vector<std::pair<int, int>> admissible_AB(int z);

struct SquareCheck {
  bool zero = true;
  /// Canonically first term of delta^{-1}F o delta^{-1}F when nonzero.
  std::optional<std::pair<TermKey, BasePolynomial>> witness;
  WeylSeries square{2};
};

/// Computes delta^{-1}F o delta^{-1}F for a homogeneous even-hbar 2-form F.
/// Throws DomainError if F is not of that shape.
SquareCheck square_check(const WeylSeries& f);

struct Pivot {
  int A;
  int B;
  BIndex eliminated;
  GaussianRational factor;  ///< equation reduces to factor * b^2 = 0
};

struct CascadeTranscript {
  int z = 0;
  std::vector<Pivot> pivots;
  bool complete = false;  ///< every b eliminated
  std::string to_string() const;
};

/// Replays the elimination of g_{2A+1,B} = 0 with the b's as unknowns:
/// repeatedly takes the smallest (A, B), in that order, whose equation
/// reduces (after substituting eliminated b's by 0) to a single square
/// factor * b^2 and eliminates b. Throws Error if a pivot factor is zero or
/// the scan stalls with unknowns left.
CascadeTranscript cascade_solve(int z);

}  // namespace fedosov::twodim
