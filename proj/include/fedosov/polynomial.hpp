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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fedosov/scalar.hpp"

namespace fedosov {

/// Exponent vector of a monomial; entry k is the power of variable k+1.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial with GaussianRational coefficients.
///
/// Zero coefficients are never stored. A polynomial built with zero variables
/// is a constant and combines with polynomials of any arity.
class BasePolynomial {
 public:
  using Map = std::map<Exponents, GaussianRational>;

  BasePolynomial() = default;
  explicit BasePolynomial(std::size_t nvars) : nvars_(nvars) {}

  static BasePolynomial constant(std::size_t nvars, const GaussianRational& c);
  /// The coordinate q^k, 1-based.
  static BasePolynomial variable(std::size_t nvars, int k);
  static BasePolynomial monomial(Exponents exps, const GaussianRational& c);

  std::size_t nvars() const { return nvars_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  GaussianRational constant_term() const;
  GaussianRational coefficient(const Exponents& e) const;
  /// Highest total degree of a stored monomial, -1 for zero.
  int degree() const;

  void add_term(const Exponents& exps, const GaussianRational& c);

  BasePolynomial& operator+=(const BasePolynomial& o);
  BasePolynomial& operator-=(const BasePolynomial& o);
  BasePolynomial& operator*=(const GaussianRational& c);
  BasePolynomial operator-() const;

  friend BasePolynomial operator+(BasePolynomial a, const BasePolynomial& b) { return a += b; }
  friend BasePolynomial operator-(BasePolynomial a, const BasePolynomial& b) { return a -= b; }
  friend BasePolynomial operator*(BasePolynomial a, const GaussianRational& c) { return a *= c; }
  friend BasePolynomial operator*(const GaussianRational& c, BasePolynomial a) { return a *= c; }
  friend BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b);

  friend bool operator==(const BasePolynomial& a, const BasePolynomial& b);

  /// Canonical text: monomials in descending exponent order, e.g.
  /// "3/2*q1^2*q2 + (1+i)*q1 - 1/2".
  std::string to_string(std::string_view var = "q") const;

 private:
  std::size_t unify(const BasePolynomial& o) const;
  void promote(std::size_t nvars);

  std::size_t nvars_ = 0;
  Map terms_;
};

/// Exact partial derivative with respect to q^k (1-based).
BasePolynomial poly_dq(const BasePolynomial& p, int k);

}  // namespace fedosov
