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

#include "fedosov/flat_section.hpp"

#include <algorithm>

#include "fedosov/calculus.hpp"
#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

// X-free, form-free terms are central; dropping them from the right operand
// of [r, .] leaves the commutator unchanged and raises its lowest grade.
WeylSeries non_central(const WeylSeries& a) {
  WeylSeries out(a.dim(), a.known_through());
  for (const auto& [key, c] : a.terms()) {
    if (key.fiber_degree() > 0 || key.form_degree() > 0) out.add(key, c);
  }
  return out;
}

// d_Gamma a + (1/(i hbar)) [r, a], determined through one grade below the
// known bound of a.
WeylSeries transport(const ManifoldSpec& m, const WeylSeries& gamma, const WeylSeries& r, const WeylSeries& a) {
  const int n = a.known_through();
  WeylSeries out = covariant_d(m, gamma, a);
  const int cap = a.is_exact() && r.is_exact() ? kUnbounded : n + 1;
  out += div_ihbar(commutator(m, r, non_central(a), cap));
  return out;
}

WeylSeries base_series(int dim, const HbarPolynomial& base, int max_degree) {
  WeylSeries out(dim, max_degree);
  for (const auto& [k, f] : base) {
    if (2 * k <= max_degree) out.add(TermKey{k, Exponents(dim, 0), {}}, f);
  }
  return out;
}

void require_inputs(const AbelianCorrection& r, int max_degree) {
  if (max_degree < 0) throw DomainError("flat_section: negative max degree");
  if (r.known_through() < max_degree) {
    throw TruncationError("flat_section: r known through " + std::to_string(r.known_through()) +
                          ", need " + std::to_string(max_degree));
  }
}

}  // namespace

WeylSeries FlatSection::total(int dim) const {
  WeylSeries out(dim);
  for (const auto& [z, c] : components) out += c;
  return out.with_known_through(known_through);
}

FlatSection flat_section(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                         const HbarPolynomial& base, int max_degree) {
  require_inputs(r, max_degree);
  const int dim = m.dim();
  const WeylSeries gamma = gamma_form(m, c);
  const WeylSeries base_all = base_series(dim, base, max_degree);
  FlatSection out{base, {}, max_degree, 0};
  out.components.emplace(0, base_all.grade(0).with_known_through(kUnbounded));
  for (int z = 1; z <= max_degree; ++z) {
    WeylSeries src = covariant_d(m, gamma, out.components.at(z - 1));
    WeylSeries products(dim);
    for (int j = 3; j <= z; ++j) {
      const WeylSeries& ay = out.components.at(z + 1 - j);
      const WeylSeries rj = r[j];
      if (rj.is_zero() || ay.is_zero()) continue;
      products += commutator(m, rj, non_central(ay));
    }
    src += div_ihbar(products);
    WeylSeries az = base_all.grade(z).with_known_through(kUnbounded);
    az += delta_inv(src);
    out.components.emplace(z, std::move(az));
    ++out.sweeps;
  }
  return out;
}

FlatSection flat_section_iterative(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                                   const HbarPolynomial& base, int max_degree) {
  require_inputs(r, max_degree);
  const int dim = m.dim();
  const WeylSeries gamma = gamma_form(m, c);
  const WeylSeries rt = r.total().truncated(max_degree);
  const WeylSeries a0 = base_series(dim, base, max_degree);
  WeylSeries a = a0;
  int sweeps = 0;
  for (;; ++sweeps) {
    if (sweeps > max_degree + 1) throw Error("flat_section_iterative: no fixed point after max_degree + 1 sweeps");
    WeylSeries next = a0;
    next += delta_inv(transport(m, gamma, rt, a).truncated(max_degree - 1));
    next = next.truncated(max_degree);
    if (next == a) break;
    a = std::move(next);
  }
  FlatSection out{base, {}, max_degree, sweeps};
  for (int z = 0; z <= max_degree; ++z) out.components.emplace(z, a.grade(z).with_known_through(kUnbounded));
  return out;
}

WeylSeries flatness_residual(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                             const FlatSection& a) {
  const int n = a.known_through;
  const WeylSeries gamma = gamma_form(m, c);
  const WeylSeries total = a.total(m.dim());
  WeylSeries out = -delta(total);
  out += transport(m, gamma, r.total().truncated(n), total);
  return out.truncated(n - 1);
}

HbarPolynomial truncate_hbar(const HbarPolynomial& p, int order) {
  HbarPolynomial out;
  for (const auto& [k, c] : p) {
    if (k <= order) out.emplace(k, c);
  }
  return out;
}

HbarPolynomial star(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                    const HbarPolynomial& a0, const HbarPolynomial& b0, int order) {
  if (order < 0) throw DomainError("star: negative hbar order");
  const int n = 2 * order;
  const WeylSeries a = flat_section(m, c, r, a0, n).total(m.dim());
  const WeylSeries b = flat_section(m, c, r, b0, n).total(m.dim());
  return truncate_hbar(sigma(circ(m, a, b, n)), order);
}

HbarPolynomial star(const ManifoldSpec& m, const ConnectionSpec& c, const HbarPolynomial& a0,
                    const HbarPolynomial& b0, int order) {
  const AbelianCorrection r = abelian_r(m, c, std::max(3, 2 * order));
  return star(m, c, r, a0, b0, order);
}

BasePolynomial poisson_bracket(const ManifoldSpec& m, const BasePolynomial& f, const BasePolynomial& g) {
  BasePolynomial out(static_cast<std::size_t>(m.dim()));
  for (const auto& e : m.poisson_entries()) {
    out += poly_dq(f, e.i) * poly_dq(g, e.j) * GaussianRational(e.value);
  }
  return out;
}

}  // namespace fedosov
