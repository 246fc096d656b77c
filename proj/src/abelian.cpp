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

#include "fedosov/abelian.hpp"

#include "fedosov/calculus.hpp"
#include "fedosov/errors.hpp"

namespace fedosov {

WeylSeries AbelianCorrection::operator[](int z) const {
  if (z > known_through_) {
    throw TruncationError("r[" + std::to_string(z) + "] requested but r is known only through grade " +
                          std::to_string(known_through_));
  }
  auto it = components_.find(z);
  return it == components_.end() ? WeylSeries(dim_) : it->second;
}

void AbelianCorrection::set(int z, WeylSeries component) {
  if (z < 3 || z > known_through_) throw DomainError("AbelianCorrection: grade out of range");
  components_.insert_or_assign(z, std::move(component));
}

WeylSeries AbelianCorrection::total() const {
  WeylSeries out(dim_);
  for (const auto& [z, c] : components_) out += c;
  return out.with_known_through(known_through_);
}

std::vector<int> AbelianCorrection::nonzero_grades() const {
  std::vector<int> out;
  for (const auto& [z, c] : components_) {
    if (!c.is_zero()) out.push_back(z);
  }
  return out;
}

AbelianCorrection split_by_grade(const WeylSeries& r, int known_through) {
  AbelianCorrection out(r.dim(), known_through);
  for (int z = 3; z <= known_through; ++z) out.set(z, r.grade(z).with_known_through(kUnbounded));
  for (const auto& [key, c] : r.terms()) {
    if (key.degree() < 3) throw DomainError("split_by_grade: correction has a term of degree < 3");
  }
  return out;
}

namespace {

// (1/(i hbar)) sum_{j=lo}^{hi} r[j] o r[target-j]
WeylSeries convolution(const ManifoldSpec& m, const AbelianCorrection& r, int lo, int hi, int target) {
  WeylSeries sum(r.dim());
  for (int j = lo; j <= hi; ++j) {
    const int k = target - j;
    if (k < 3 || k > r.known_through()) continue;
    const WeylSeries rj = r[j];
    const WeylSeries rk = r[k];
    if (rj.is_zero() || rk.is_zero()) continue;
    sum += circ(m, rj, rk);
  }
  return sum;
}

void require_homogeneous(const WeylSeries& s, int z) {
  for (const auto& [key, c] : s.terms()) {
    if (key.degree() != z) {
      throw Error("internal: r[" + std::to_string(z) + "] has a term of degree " + std::to_string(key.degree()));
    }
  }
}

}  // namespace

AbelianCorrection abelian_r(const ManifoldSpec& m, const ConnectionSpec& c, int max_degree) {
  if (max_degree < 3) throw DomainError("abelian_r: max degree must be >= 3 (r starts at grade 3)");
  const WeylSeries gamma = gamma_form(m, c);
  AbelianCorrection r(m.dim(), max_degree);
  r.set(3, delta_inv(curvature_form(m, c)));
  for (int z = 4; z <= max_degree; ++z) {
    WeylSeries f = covariant_d(m, gamma, r[z - 1]);
    f += div_ihbar(convolution(m, r, 3, z - 2, z + 1));
    WeylSeries rz = delta_inv(f);
    require_homogeneous(rz, z);
    r.set(z, std::move(rz));
  }
  return r;
}

AbelianCorrection abelian_r_iterative(const ManifoldSpec& m, const ConnectionSpec& c, int steps, int max_degree) {
  if (max_degree < 3) throw DomainError("abelian_r_iterative: max degree must be >= 3");
  if (steps < 1) throw DomainError("abelian_r_iterative: need at least one step");
  const WeylSeries gamma = gamma_form(m, c);
  const WeylSeries curvature = curvature_form(m, c);
  const int n = max_degree;
  WeylSeries r(m.dim(), n);
  for (int s = 1; s <= steps; ++s) {
    WeylSeries rhs = curvature.truncated(n - 1);
    rhs += covariant_d(m, gamma, r).truncated(n - 1);
    rhs += div_ihbar(circ(m, r, r, n + 1));
    WeylSeries next = delta_inv(rhs.truncated(n - 1));
    if (next == r) {
      r = std::move(next);
      break;
    }
    r = std::move(next);
  }
  return split_by_grade(r, n);
}

AbelianCheckReport check_abelian(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r) {
  AbelianCheckReport report;
  const int n = r.known_through();
  const int dim = m.dim();
  const WeylSeries gamma = gamma_form(m, c);
  const WeylSeries curvature = curvature_form(m, c);
  const WeylSeries total = r.total();

  WeylSeries residual = delta(total);
  residual -= curvature;
  residual -= covariant_d(m, gamma, total);
  residual -= div_ihbar(circ(m, total, total, n + 1));
  residual = residual.truncated(n - 1);
  if (auto low = residual.min_degree()) {
    report.ok = false;
    report.first_failing_grade = *low;
    report.residual = residual.grade(*low);
    report.messages.push_back("residual of the Abelian equation is nonzero at grade " + std::to_string(*low));
  }

  // Curvature of omega_{ij} X^i dq^j + Gamma + r.
  WeylSeries full(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) {
      if (sgn(m.lower(i, j)) == 0) continue;
      TermKey key{0, Exponents(dim, 0), {j}};
      key.fiber[i - 1] = 1;
      full.add(key, GaussianRational(m.lower(i, j)));
    }
  }
  full += gamma;
  full += total;
  WeylSeries central = ext_d(full) + div_ihbar(circ(m, full, full, n + 1));
  WeylSeries expected(dim);
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      // -1/2 (w_ij dq^i dq^j + w_ji dq^j dq^i) = -w_ij dq^i ^ dq^j
      if (sgn(m.lower(i, j)) != 0) expected.add(TermKey{0, Exponents(dim, 0), {i, j}}, GaussianRational(-m.lower(i, j)));
    }
  }
  if (!((central - expected).truncated(n - 1)).is_zero()) {
    report.ok = false;
    report.central_curvature = false;
    report.messages.push_back("curvature of the Abelian connection is not -1/2 omega through grade " +
                              std::to_string(n - 1));
  }

  if (!delta_inv(total).is_zero()) {
    report.ok = report.normalized = false;
    report.messages.push_back("delta^{-1} r != 0");
  }
  for (const auto& [key, coeff] : total.terms()) {
    if (key.degree() < 3) report.min_degree_ok = false;
    if (key.hbar % 2 != 0) report.even_hbar = false;
    if (key.fiber_degree() == 0) report.fiber_nonempty = false;
  }
  if (!report.min_degree_ok) report.messages.push_back("r has a component of degree < 3");
  if (!report.even_hbar) report.messages.push_back("r has an odd power of hbar");
  if (!report.fiber_nonempty) report.messages.push_back("r has an X-free term");
  report.ok = report.ok && report.min_degree_ok && report.even_hbar && report.fiber_nonempty;
  return report;
}

std::string FinitenessVerdict::equation_label(int s, int m_param) {
  const std::string last = std::to_string(m_param - 1);
  if (s == 0) {
    return "dGamma r[" + last + "] + (1/(i hbar)) sum_{j=3}^{" + std::to_string(m_param - 2) + "} r[j] o r[" +
           std::to_string(m_param + 1) + "-j] = 0";
  }
  if (s == m_param - 3) return "r[" + last + "] o r[" + last + "] = 0";
  return "sum_{j=" + std::to_string(s + 2) + "}^{" + last + "} r[j] o r[" + std::to_string(m_param + 1 + s) +
         "-j] = 0";
}

FinitenessVerdict finiteness_test(const ManifoldSpec& m, const ConnectionSpec& c, const AbelianCorrection& r,
                                  int m_param) {
  if (m_param < 4) throw DomainError("finiteness_test: m must be >= 4");
  if (r.known_through() < m_param - 1) {
    throw TruncationError("finiteness_test: m = " + std::to_string(m_param) + " needs r through grade " +
                          std::to_string(m_param - 1) + ", have " + std::to_string(r.known_through()));
  }
  FinitenessVerdict verdict;
  verdict.m_param = m_param;
  verdict.equation_count = m_param - 2;
  // Only r[3..m-1] enter the system; higher grades are taken as zero.
  AbelianCorrection head(r.dim(), m_param - 1);
  for (int z = 3; z <= m_param - 1; ++z) head.set(z, r[z]);

  const WeylSeries gamma = gamma_form(m, c);
  WeylSeries first = covariant_d(m, gamma, head[m_param - 1]);
  first += div_ihbar(convolution(m, head, 3, m_param - 2, m_param + 1));
  if (!first.is_zero()) verdict.violated.push_back(0);
  for (int s = 1; s <= m_param - 3; ++s) {
    if (!convolution(m, head, s + 2, m_param - 1, m_param + 1 + s).is_zero()) verdict.violated.push_back(s);
  }
  return verdict;
}

std::string CommutingCaseResult::to_string() const {
  switch (status) {
    case Status::kFlat:
      return "flat connection: R_Gamma = 0 and r = 0";
    case Status::kFinite:
      return "finite: (dGamma delta^{-1})^{z-3} R_Gamma = 0 first at z = " + std::to_string(*minimal_z) +
             ", deg(r) = " + std::to_string(*minimal_z - 1);
    case Status::kNotFiniteWithin:
      return "not finite within z <= " + std::to_string(z_max);
  }
  return {};
}

CommutingCaseResult commuting_case_degree(const ManifoldSpec& m, const ConnectionSpec& c, int z_max) {
  if (z_max < 4) throw DomainError("commuting_case_degree: z_max must be >= 4");
  CommutingCaseResult result;
  result.z_max = z_max;
  const WeylSeries curvature = curvature_form(m, c);
  if (curvature.is_zero()) return result;
  const WeylSeries gamma = gamma_form(m, c);

  std::map<int, WeylSeries> computed;
  auto add_grade = [&](int z, WeylSeries rz) {
    computed.emplace(z, std::move(rz));
    const WeylSeries& fresh = computed.at(z);
    for (const auto& [j, rj] : computed) {
      if (!circ(m, fresh, rj).is_zero() || !circ(m, rj, fresh).is_zero()) {
        throw HypothesisError("commuting case does not apply: r[" + std::to_string(z) + "] o r[" + std::to_string(j) +
                              "] != 0");
      }
    }
  };

  WeylSeries power = curvature;  // (dGamma delta^{-1})^{z-3} R_Gamma
  add_grade(3, delta_inv(power));
  for (int z = 4; z <= z_max; ++z) {
    power = covariant_d(m, gamma, delta_inv(power));
    if (power.is_zero()) {
      result.status = CommutingCaseResult::Status::kFinite;
      result.minimal_z = z;
      return result;
    }
    add_grade(z, delta_inv(power));
  }
  result.status = CommutingCaseResult::Status::kNotFiniteWithin;
  return result;
}

}  // namespace fedosov
