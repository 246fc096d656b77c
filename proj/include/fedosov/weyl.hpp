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

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fedosov/manifold.hpp"
#include "fedosov/polynomial.hpp"
#include "fedosov/wedge.hpp"

namespace fedosov {

/// Sentinel for a series whose every grade is known (a finite exact sum).
inline constexpr int kUnbounded = 1 << 20;

/// Basis element hbar^k X^fiber dq^form of the Weyl algebra valued forms.
/// Ordered by hbar power, then fiber exponents lexicographically, then the
/// wedge word.
struct TermKey {
  int hbar = 0;
  Exponents fiber;
  WedgeWord form;

  int fiber_degree() const { return total_degree(fiber); }
  /// Fedosov grading 2k + l.
  int degree() const { return 2 * hbar + fiber_degree(); }
  int form_degree() const { return static_cast<int>(form.size()); }

  auto operator<=>(const TermKey&) const = default;
};

/// Polynomial in hbar with base-polynomial coefficients; no zero entries.
using HbarPolynomial = std::map<int, BasePolynomial>;

/// Finite collection of graded terms, exact through grade known_through().
///
/// Grades above known_through() are not asserted by the series; they may be
/// missing because an upstream computation was truncated. Arithmetic keeps
/// track of the bound and refuses to produce grades it cannot vouch for.
class WeylSeries {
 public:
  using Map = std::map<TermKey, BasePolynomial>;

  explicit WeylSeries(int dim = 2, int known_through = kUnbounded);

  /// An X-free, form-free function f(q).
  static WeylSeries function(int dim, const BasePolynomial& f);
  /// The fiber coordinate X^k (1-based).
  static WeylSeries fiber_variable(int dim, int k);
  static WeylSeries monomial(int dim, TermKey key, const BasePolynomial& coeff);
  static WeylSeries monomial(int dim, TermKey key, const GaussianRational& coeff);

  int dim() const { return dim_; }
  int known_through() const { return known_through_; }
  bool is_exact() const { return known_through_ >= kUnbounded; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates coeff onto key; cancelled terms are erased.
  void add(const TermKey& key, const BasePolynomial& coeff);
  void add(const TermKey& key, const GaussianRational& coeff);
  BasePolynomial coefficient(const TermKey& key) const;

  WeylSeries& operator+=(const WeylSeries& o);
  WeylSeries& operator-=(const WeylSeries& o);
  WeylSeries& operator*=(const GaussianRational& c);
  WeylSeries& operator*=(const BasePolynomial& f);
  WeylSeries operator-() const;

  friend WeylSeries operator+(WeylSeries a, const WeylSeries& b) { return a += b; }
  friend WeylSeries operator-(WeylSeries a, const WeylSeries& b) { return a -= b; }
  friend WeylSeries operator*(WeylSeries a, const GaussianRational& c) { return a *= c; }
  friend WeylSeries operator*(const GaussianRational& c, WeylSeries a) { return a *= c; }

  /// Equal terms; the known_through bounds are not compared.
  friend bool operator==(const WeylSeries& a, const WeylSeries& b) { return a.terms_ == b.terms_; }

  /// Drops grades above n and lowers the known bound to n.
  WeylSeries truncated(int n) const;
  /// Same terms with a different asserted bound (grades above n removed).
  WeylSeries with_known_through(int n) const;
  /// Homogeneous component of Fedosov degree z.
  WeylSeries grade(int z) const;
  /// Component of exterior degree m.
  WeylSeries form_part(int m) const;
  std::set<int> form_degrees() const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  /// Human-readable canonical listing, one term per line.
  std::string to_string() const;

 private:
  int dim_;
  int known_through_;
  Map terms_;
};

/// Highest grade that a product of a and b can be vouched for.
int product_known_through(const WeylSeries& a, const WeylSeries& b);

/// Fiberwise Moyal-type product of Weyl-algebra valued forms: the t-th order
/// term contracts t fiber derivatives of a with t of b through omega^{ij},
/// weighted by (i hbar/2)^t / t!. Form parts are concatenated a-then-b.
///
/// The result is exact through `cap` (default: the best bound the operands
/// allow). Throws TruncationError when the operands do not determine the
/// product through `cap`.
WeylSeries circ(const ManifoldSpec& m, const WeylSeries& a, const WeylSeries& b,
                std::optional<int> cap = std::nullopt);

/// Graded commutator a o b - (-1)^{m1 m2} b o a, applied per form-degree block.
WeylSeries commutator(const ManifoldSpec& m, const WeylSeries& a, const WeylSeries& b,
                      std::optional<int> cap = std::nullopt);

struct DegreeInfo {
  /// Maximal grade of a nonzero component, if any component is nonzero.
  std::optional<int> value;
  /// False when higher grades are not determined by the series.
  bool exact = true;
  /// Grades above this are unknown when !exact.
  int known_through = kUnbounded;

  std::string to_string() const;
};

DegreeInfo degree(const WeylSeries& a);

/// Restriction to X = 0. Throws DomainError if a carries a nonzero form part.
HbarPolynomial sigma(const WeylSeries& a);

/// Embeds a function of q and hbar as an X-free series.
WeylSeries from_hbar_polynomial(int dim, const HbarPolynomial& f);

/// Component a[k,l] at hbar^k with exactly l fiber factors. Throws
/// TruncationError when 2k + l exceeds the known bound.
WeylSeries grade_part(const WeylSeries& a, int k, int l);

/// Divides by i*hbar. Throws DivisibilityError on any hbar^0 term.
WeylSeries div_ihbar(const WeylSeries& a);

std::string to_string(const HbarPolynomial& p);
HbarPolynomial& accumulate(HbarPolynomial& into, int power, const BasePolynomial& c);

}  // namespace fedosov
