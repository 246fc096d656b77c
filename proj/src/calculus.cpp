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

#include "fedosov/calculus.hpp"

#include <algorithm>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

int shifted(const WeylSeries& a, int by) { return a.is_exact() ? kUnbounded : a.known_through() + by; }

}  // namespace

WeylSeries delta(const WeylSeries& a) {
  const int dim = a.dim();
  WeylSeries out(dim, shifted(a, -1));
  for (const auto& [key, c] : a.terms()) {
    for (int k = 1; k <= dim; ++k) {
      const int power = key.fiber[k - 1];
      if (power == 0) continue;
      NormalizedWedge w = wedge_concat({k}, key.form, dim);
      if (w.sign == 0) continue;
      TermKey nk{key.hbar, key.fiber, std::move(w.word)};
      nk.fiber[k - 1] -= 1;
      out.add(nk, c * GaussianRational(w.sign * power));
    }
  }
  return out;
}

WeylSeries delta_inv(const WeylSeries& a) {
  WeylSeries out(a.dim(), shifted(a, 1));
  for (const auto& [key, c] : a.terms()) {
    const int l = key.fiber_degree();
    const int m = key.form_degree();
    if (l + m == 0 || m == 0) continue;
    const GaussianRational scale = GaussianRational::fraction(1, l + m);
    for (int p = 0; p < m; ++p) {
      const int j = key.form[p];
      TermKey nk{key.hbar, key.fiber, {}};
      nk.fiber[j - 1] += 1;
      nk.form = key.form;
      nk.form.erase(nk.form.begin() + p);
      out.add(nk, c * (p % 2 == 0 ? scale : -scale));
    }
  }
  return out;
}

WeylSeries ext_d(const WeylSeries& a) {
  const int dim = a.dim();
  WeylSeries out(dim, a.known_through());
  for (const auto& [key, c] : a.terms()) {
    for (int k = 1; k <= dim; ++k) {
      BasePolynomial dc = poly_dq(c, k);
      if (dc.is_zero()) continue;
      NormalizedWedge w = wedge_concat({k}, key.form, dim);
      if (w.sign == 0) continue;
      if (w.sign < 0) dc = -dc;
      out.add(TermKey{key.hbar, key.fiber, std::move(w.word)}, dc);
    }
  }
  return out;
}

HodgeParts hodge_split(const WeylSeries& a) {
  HodgeParts parts{delta(delta_inv(a)), delta_inv(delta(a)), WeylSeries(a.dim(), a.known_through())};
  for (const auto& [key, c] : a.terms()) {
    if (key.fiber_degree() == 0 && key.form_degree() == 0) parts.harmonic.add(key, c);
  }
  return parts;
}

WeylSeries covariant_d(const ManifoldSpec& m, const WeylSeries& gamma, const WeylSeries& a, std::optional<int> cap) {
  for (const auto& [key, c] : gamma.terms()) {
    if (key.form_degree() != 1) throw DomainError("covariant_d: connection must be a 1-form");
  }
  const int valid = std::min(a.known_through(), product_known_through(gamma, a) == kUnbounded
                                                     ? kUnbounded
                                                     : product_known_through(gamma, a) - 2);
  const int bound = cap.value_or(valid);
  if (bound > valid) {
    throw TruncationError("covariant_d: inputs determine the result only through grade " + std::to_string(valid));
  }
  const int comm_cap = bound >= kUnbounded ? kUnbounded : bound + 2;
  WeylSeries out = ext_d(a).truncated(bound);
  out += div_ihbar(commutator(m, gamma, a, comm_cap)).with_known_through(bound);
  return out;
}

}  // namespace fedosov
