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
#include <string_view>

#include "fedosov/polynomial.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

/// Parses polynomial expressions over q1..q<nvars>, optionally hbar.
///
/// Grammar: sums and differences of products of factors; a factor is an
/// integer, the imaginary unit i, a variable q<k>, hbar, or a parenthesized
/// expression, optionally raised to a non-negative integer power with ^.
/// Division is only allowed by nonzero constants, so "3/2*q1" and
/// "(1+i)/2" parse while "1/q1" does not. Throws ParseError.
HbarPolynomial parse_hbar_polynomial(std::string_view text, std::size_t nvars);

/// As parse_hbar_polynomial, rejecting hbar.
BasePolynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// A constant literal such as "3", "-1/2", "1/2+3/4*i".
GaussianRational parse_gaussian(std::string_view text);

}  // namespace fedosov
