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

#include <optional>

#include "fedosov/weyl.hpp"

namespace fedosov {

/// delta a = dq^k ^ da/dX^k. Lowers the Fedosov degree by one.
WeylSeries delta(const WeylSeries& a);

/// On a monomial with l fiber factors and m form factors, contracts the
/// vector X^k d/dq^k into the form part and divides by l + m; zero when
/// l + m = 0. Raises the Fedosov degree by one.
WeylSeries delta_inv(const WeylSeries& a);

/// Exterior derivative in the base coordinates; the new dq^k is placed first.
WeylSeries ext_d(const WeylSeries& a);

struct HodgeParts {
  WeylSeries delta_delta_inv;  ///< delta(delta_inv(a))
  WeylSeries delta_inv_delta;  ///< delta_inv(delta(a))
  WeylSeries harmonic;         ///< X-free, form-free part a_00
};

/// a = delta delta^{-1} a + delta^{-1} delta a + a_00.
HodgeParts hodge_split(const WeylSeries& a);

/// Exterior covariant derivative d a + (1/(i hbar)) [gamma, a] for a
/// connection 1-form gamma. Throws DivisibilityError if the commutator is not
/// divisible by i hbar, TruncationError if `cap` exceeds what the inputs
/// determine.
WeylSeries covariant_d(const ManifoldSpec& m, const WeylSeries& gamma, const WeylSeries& a,
                       std::optional<int> cap = std::nullopt);

}  // namespace fedosov
