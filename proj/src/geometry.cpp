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

#include "fedosov/geometry.hpp"

#include <algorithm>

#include "fedosov/calculus.hpp"
#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

IndexTriple sorted(IndexTriple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::string triple_text(const IndexTriple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

bool in_range(const IndexTriple& t, int dim) {
  return std::all_of(t.begin(), t.end(), [dim](int x) { return x >= 1 && x <= dim; });
}

std::size_t independent_slots(int dim) {
  // C(2n+2, 2n-1) = C(dim+2, 3)
  return static_cast<std::size_t>(binomial(dim + 2, dim - 1).get_num().get_ui());
}

}  // namespace

ConnectionSpec ConnectionSpec::from_entries(int dim, std::span<const GammaEntry> entries) {
  ConnectionSpec out(dim);
  std::map<IndexTriple, IndexTriple> first_seen;
  for (const auto& e : entries) {
    if (!in_range(e.indices, dim)) {
      throw ValidationError("Gamma index " + triple_text(e.indices) + " out of range 1.." + std::to_string(dim));
    }
    const IndexTriple key = sorted(e.indices);
    auto [it, inserted] = first_seen.try_emplace(key, e.indices);
    if (!inserted) {
      if (!(out(key[0], key[1], key[2]) == e.value)) {
        throw ValidationError("Gamma is not totally symmetric: Gamma" + triple_text(it->second) + " != Gamma" +
                              triple_text(e.indices));
      }
      continue;
    }
    out.set(key[0], key[1], key[2], e.value);
  }
  return out;
}

BasePolynomial ConnectionSpec::operator()(int i, int j, int k) const {
  auto it = entries_.find(sorted({i, j, k}));
  return it == entries_.end() ? BasePolynomial(static_cast<std::size_t>(dim_)) : it->second;
}

void ConnectionSpec::set(int i, int j, int k, const BasePolynomial& value) {
  const IndexTriple key = sorted({i, j, k});
  if (!in_range(key, dim_)) throw DomainError("Gamma index out of range");
  if (value.is_zero()) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

BasePolynomial CurvatureTensor::operator()(int i, int j, int k, int l) const {
  auto it = components_.find({i, j, k, l});
  return it == components_.end() ? BasePolynomial(static_cast<std::size_t>(dim_)) : it->second;
}

void CurvatureTensor::set(const IndexQuad& idx, BasePolynomial value) {
  if (value.is_zero()) {
    components_.erase(idx);
  } else {
    components_[idx] = std::move(value);
  }
}

ValidationReport validate(const ManifoldSpec& m, std::span<const GammaEntry> entries) {
  ValidationReport report;
  const int n = m.dim();
  report.max_independent_entries = independent_slots(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (m.lower(i, j) != -m.lower(j, i)) {
        report.problems.push_back("omega not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      Rational contraction = 0;
      for (int k = 1; k <= n; ++k) contraction += m.upper(i, k) * m.lower(k, j);
      if (contraction != (i == j ? 1 : 0)) {
        report.problems.push_back("omega^{ij} omega_{jk} != delta at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
      }
    }
  }
  std::map<IndexTriple, std::pair<IndexTriple, BasePolynomial>> seen;
  for (const auto& e : entries) {
    if (!in_range(e.indices, n)) {
      report.problems.push_back("Gamma index " + triple_text(e.indices) + " out of range");
      continue;
    }
    const IndexTriple key = sorted(e.indices);
    auto [it, inserted] = seen.try_emplace(key, e.indices, e.value);
    if (!inserted && !(it->second.second == e.value)) {
      report.problems.push_back("Gamma is not totally symmetric: Gamma" + triple_text(it->second.first) +
                                " != Gamma" + triple_text(e.indices));
    }
  }
  for (const auto& [key, v] : seen) {
    if (!v.second.is_zero()) ++report.independent_entries;
  }
  report.ok = report.problems.empty();
  return report;
}

ValidationReport validate(const ManifoldSpec& m, const ConnectionSpec& c) {
  std::vector<GammaEntry> entries;
  for (const auto& [idx, v] : c.entries()) entries.push_back({idx, v});
  ValidationReport report = validate(m, entries);
  if (c.dim() != m.dim()) {
    report.problems.push_back("connection dimension " + std::to_string(c.dim()) + " != manifold dimension " +
                              std::to_string(m.dim()));
    report.ok = false;
  }
  return report;
}

WeylSeries gamma_form(const ManifoldSpec& m, const ConnectionSpec& c) {
  const int n = m.dim();
  WeylSeries out(n);
  const GaussianRational half = GaussianRational::fraction(1, 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        BasePolynomial g = c(i, j, k);
        if (g.is_zero()) continue;
        TermKey key{0, Exponents(n, 0), {k}};
        key.fiber[i - 1] += 1;
        key.fiber[j - 1] += 1;
        out.add(key, g * half);
      }
    }
  }
  return out;
}

CurvatureTensor curvature_tensor(const ManifoldSpec& m, const ConnectionSpec& c) {
  const int n = m.dim();
  CurvatureTensor out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          BasePolynomial r = poly_dq(c(i, l, j), k) - poly_dq(c(i, j, k), l);
          for (const auto& e : m.poisson_entries()) {
            const GaussianRational w(e.value);
            r += (c(e.j, l, j) * c(i, k, e.i) - c(e.j, j, k) * c(i, l, e.i)) * w;
          }
          out.set({i, j, k, l}, std::move(r));
        }
      }
    }
  }
  return out;
}

WeylSeries curvature_form(const ManifoldSpec& m, const ConnectionSpec& c, CurvatureRoute via) {
  const int n = m.dim();
  if (via == CurvatureRoute::kFormEquation) {
    const WeylSeries gamma = gamma_form(m, c);
    return ext_d(gamma) + div_ihbar(circ(m, gamma, gamma));
  }
  const CurvatureTensor r = curvature_tensor(m, c);
  WeylSeries out(n);
  const GaussianRational quarter = GaussianRational::fraction(1, 4);
  for (const auto& [idx, value] : r.components()) {
    const auto [i, j, k, l] = idx;
    NormalizedWedge w = wedge_normalize(std::vector<int>{k, l}, n);
    if (w.sign == 0) continue;
    TermKey key{0, Exponents(n, 0), w.word};
    key.fiber[i - 1] += 1;
    key.fiber[j - 1] += 1;
    out.add(key, value * (w.sign > 0 ? quarter : -quarter));
  }
  return out;
}

std::size_t curvature_component_count(int dim) {
  const int n = dim;
  const auto pos = [n](int i, int j, int k, int l) { return ((i * n + j) * n + k) * n + l; };
  const std::size_t vars = static_cast<std::size_t>(n) * n * n * n;
  std::vector<std::vector<Rational>> rows;
  auto row = [&]() { return std::vector<Rational>(vars, 0); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          auto r1 = row();
          r1[pos(i, j, k, l)] += 1;
          r1[pos(j, i, k, l)] -= 1;
          rows.push_back(std::move(r1));
          auto r2 = row();
          r2[pos(i, j, k, l)] += 1;
          r2[pos(i, j, l, k)] += 1;
          rows.push_back(std::move(r2));
          auto r3 = row();
          r3[pos(i, j, k, l)] += 1;
          r3[pos(i, k, l, j)] += 1;
          r3[pos(i, l, j, k)] += 1;
          rows.push_back(std::move(r3));
        }
      }
    }
  }
  // Row reduction.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < vars; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return vars - rank;
}

}  // namespace fedosov
