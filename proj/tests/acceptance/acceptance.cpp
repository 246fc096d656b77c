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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "fedosov/abelian.hpp"
#include "fedosov/calculus.hpp"
#include "fedosov/flat_section.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/two_dim.hpp"
#include "generators.hpp"

using namespace fedosov;
using fedosov::testing::Gen;

namespace {

/// Counts checks and remembers the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  int checks() const { return checks_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int checks_ = 0;
  std::string first_failure_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no time limit
  std::function<void(Tally&)> body;
};

ConnectionSpec curved_fixture() {
  ConnectionSpec c(2);
  c.set(1, 1, 1, BasePolynomial::constant(2, 1));
  c.set(2, 2, 2, BasePolynomial::constant(2, 1));
  return c;
}

ConnectionSpec commuting_fixture() {
  ConnectionSpec c(4);
  c.set(1, 1, 1, BasePolynomial::variable(4, 3));
  return c;
}

HbarPolynomial fn(const BasePolynomial& p) { return HbarPolynomial{{0, p}}; }

BasePolynomial coeff_at(const HbarPolynomial& p, int k) {
  auto it = p.find(k);
  return it == p.end() ? BasePolynomial(2) : it->second;
}

std::vector<int> forms_for(int dim) { return dim == 2 ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1, 2, 3}; }

void operator_identities(Tally& t) {
  Gen g(1001);
  for (int dim : {2, 4}) {
    const ManifoldSpec m = ManifoldSpec::standard(dim);
    for (int trial = 0; trial < 100; ++trial) {
      const WeylSeries a = g.series(dim, 4, 2, forms_for(dim), 5, 2);
      const std::string tag = " (dim " + std::to_string(dim) + ", trial " + std::to_string(trial) + ")";
      t.expect(delta(delta(a)).is_zero(), "delta^2 = 0" + tag);
      t.expect(delta_inv(delta_inv(a)).is_zero(), "(delta^-1)^2 = 0" + tag);
      t.expect((ext_d(delta(a)) + delta(ext_d(a))).is_zero(), "d delta + delta d = 0" + tag);
      const HodgeParts h = hodge_split(a);
      t.expect(h.delta_delta_inv + h.delta_inv_delta + h.harmonic == a, "Hodge identity" + tag);

      const int m1 = g.uniform(0, 2);
      const WeylSeries x = g.series(dim, 3, 1, {m1}, 3);
      const WeylSeries y = g.series(dim, 3, 1, {g.uniform(0, 2)}, 3);
      const GaussianRational sign = m1 % 2 == 0 ? 1 : -1;
      t.expect(delta(circ(m, x, y)) == circ(m, delta(x), y) + circ(m, x, delta(y)) * sign, "Leibniz rule" + tag);
    }
  }
}

void weyl_algebra(Tally& t) {
  Gen g(1002);
  for (int dim : {2, 4}) {
    const ManifoldSpec m = ManifoldSpec::standard(dim);
    for (int trial = 0; trial < 100; ++trial) {
      const std::string tag = " (dim " + std::to_string(dim) + ", trial " + std::to_string(trial) + ")";
      const int za = g.uniform(0, 5);
      const int zb = g.uniform(0, 10 - za);
      const WeylSeries a = g.homogeneous(dim, za, g.uniform(0, 1));
      const WeylSeries b = g.homogeneous(dim, zb, g.uniform(0, 1));
      const WeylSeries ab = circ(m, a, b);
      bool additive = true;
      for (const auto& [k, c] : ab.terms()) additive = additive && k.degree() == za + zb;
      t.expect(additive, "degree additivity" + tag);

      const int x = g.uniform(0, 4);
      const int y = g.uniform(0, 4);
      const int z = g.uniform(0, std::min(4, 10 - x - y));
      const WeylSeries p = g.homogeneous(dim, x, g.uniform(0, 1), 2);
      const WeylSeries q = g.homogeneous(dim, y, g.uniform(0, 1), 2);
      const WeylSeries r = g.homogeneous(dim, z, 0, 2);
      t.expect(circ(m, circ(m, p, q), r) == circ(m, p, circ(m, q, r)), "associativity" + tag);
    }
  }
}

void two_dim_closed_form(Tally& t) {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  auto mono = [](int r, int j) { return WeylSeries::monomial(2, TermKey{0, {r, j}, {}}, GaussianRational(1)); };
  for (int r = 0; r <= 5; ++r) {
    for (int j = 0; j <= 5; ++j) {
      for (int s = 0; s <= 5; ++s) {
        for (int k = 0; k <= 5; ++k) {
          t.expect(twodim::monomial_circ(r, j, s, k) == circ(m, mono(r, j), mono(s, k)),
                   "monomial_circ(" + std::to_string(r) + "," + std::to_string(j) + "," + std::to_string(s) + "," +
                       std::to_string(k) + ")");
        }
      }
    }
  }
  auto half = [](int z) {
    Rational q(z, 2);
    q.canonicalize();
    return q;
  };
  for (int z = 1; z <= 10; ++z) t.expect(twodim::f_coeff(1, z - 1, 0, z, 1) == half(z), "f(1,z-1,0,z,1) = z/2");
  for (int z = 2; z <= 10; ++z) t.expect(twodim::f_coeff(2, z - 2, 1, z - 1, 1) == half(z), "f(2,z-2,1,z-1,1) = z/2");
  for (int z = 5; z <= 10; ++z) t.expect(twodim::f_coeff(2, z - 5, 0, z - 4, 1) == z - 4, "f(2,z-5,0,z-4,1) = z-4");
}

void curvature(Tally& t) {
  Gen g(1004);
  for (int dim : {2, 4}) {
    const ManifoldSpec m = ManifoldSpec::standard(dim);
    for (int trial = 0; trial < 20; ++trial) {
      const ConnectionSpec c = g.connection(dim, 2, 4);
      const CurvatureTensor r = curvature_tensor(m, c);
      bool symmetric = true;
      for (int i = 1; i <= dim; ++i) {
        for (int j = 1; j <= dim; ++j) {
          for (int k = 1; k <= dim; ++k) {
            for (int l = 1; l <= dim; ++l) {
              symmetric = symmetric && r(i, j, k, l) == r(j, i, k, l) && r(i, j, k, l) == -r(i, j, l, k) &&
                          (r(i, j, k, l) + r(i, k, l, j) + r(i, l, j, k)).is_zero();
            }
          }
        }
      }
      t.expect(symmetric, "tensor symmetries (dim " + std::to_string(dim) + ")");
      t.expect(curvature_form(m, c, CurvatureRoute::kTensor) == curvature_form(m, c, CurvatureRoute::kFormEquation),
               "tensor route = form-equation route (dim " + std::to_string(dim) + ")");
    }
  }
  const ManifoldSpec m2 = ManifoldSpec::standard(2);
  t.expect(curvature_tensor(m2, curved_fixture())(2, 1, 2, 1) == BasePolynomial::constant(2, -1),
           "R_2121 = -1 on the curved fixture");
}

void flat_abelian(Tally& t) {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  const ConnectionSpec flat = ConnectionSpec::flat(2);
  const AbelianCorrection r = abelian_r(m, flat, 10);
  for (int z = 3; z <= 10; ++z) t.expect(r[z].is_zero(), "r[" + std::to_string(z) + "] = 0");
  const BasePolynomial q = BasePolynomial::variable(2, 1);
  const BasePolynomial p = BasePolynomial::variable(2, 2);
  const HbarPolynomial qp = star(m, flat, r, fn(q), fn(p), 1);
  const HbarPolynomial pq = star(m, flat, r, fn(p), fn(q), 1);
  t.expect(coeff_at(qp, 0) == q * p && coeff_at(qp, 1) == BasePolynomial::constant(2, GaussianRational(0, Rational(1, 2))),
           "q*p = qp + i hbar/2");
  t.expect((coeff_at(qp, 0) - coeff_at(pq, 0)).is_zero() &&
               coeff_at(qp, 1) - coeff_at(pq, 1) == BasePolynomial::constant(2, GaussianRational::i()),
           "q*p - p*q = i hbar");
}

void curved_abelian(Tally& t) {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  const ConnectionSpec c = curved_fixture();
  const AbelianCorrection r = abelian_r(m, c, 9);
  for (int z = 3; z <= 9; ++z) t.expect(!r[z].is_zero(), "r[" + std::to_string(z) + "] != 0");
  const AbelianCheckReport report = check_abelian(m, c, r);
  t.expect(report.residual.is_zero() && !report.first_failing_grade, "Abelian residual = 0 through grade 8");
  t.expect(report.central_curvature, "central curvature");
  const WeylSeries total = r.total();
  t.expect(delta_inv(total).is_zero(), "delta^-1 r = 0");
  bool even = true;
  for (const auto& [k, coeff] : total.terms()) even = even && k.hbar % 2 == 0;
  t.expect(even, "only even hbar powers");
  const AbelianCorrection iterated = abelian_r_iterative(m, c, 9, 9);
  for (int z = 3; z <= 9; ++z) t.expect(r[z] == iterated[z], "graded = iterated at r[" + std::to_string(z) + "]");
}

void finiteness(Tally& t) {
  const ManifoldSpec m = ManifoldSpec::standard(4);
  const ConnectionSpec c = commuting_fixture();
  const WeylSeries curvature = curvature_form(m, c);
  const AbelianCorrection r = abelian_r(m, c, 9);
  t.expect(r.total() == delta_inv(curvature), "r = delta^-1 R_Gamma through grade 9");
  t.expect(finiteness_test(m, c, r, 4).finite_consistent(), "finiteness system holds at m = 4");
  const CommutingCaseResult cc = commuting_case_degree(m, c, 9);
  t.expect(cc.status == CommutingCaseResult::Status::kFinite && cc.minimal_z == 4, "commuting_case_degree = 4");
  // (d_Gamma delta^-1)^{z-3} R_Gamma at z = 3 and z = 4.
  const WeylSeries gamma = gamma_form(m, c);
  t.expect(!curvature.is_zero(), "(d_Gamma delta^-1)^0 R_Gamma != 0");
  t.expect(covariant_d(m, gamma, delta_inv(curvature)).is_zero(), "(d_Gamma delta^-1)^1 R_Gamma = 0");
}

void square_and_cascade(Tally& t) {
  Gen g(1008);
  auto random_table = [&g](int z) {
    twodim::CoefficientTable b(z);
    for (;;) {
      for (const auto& [k, l] : b.indices()) b.set(k, l, g.coin(0.3) ? GaussianRational(0) : g.gaussian());
      if (!b.is_zero()) return b;
    }
  };
  for (int trial = 0; trial < 50; ++trial) {
    const int z = 1 + trial % 8;
    t.expect(!twodim::square_check(random_table(z).to_form()).zero,
             "nonzero square for random F (z = " + std::to_string(z) + ")");
  }
  for (int z = 1; z <= 8; ++z) {
    for (int trial = 0; trial < 3; ++trial) {
      const twodim::CoefficientTable b = random_table(z);
      const twodim::SquareCheck sq = twodim::square_check(b.to_form());
      for (const auto& [A, B] : twodim::admissible_AB(z)) {
        t.expect(twodim::g_coeff(b, A, B) == sq.square.coefficient(TermKey{2 * A + 1, {B, 2 * z - 4 * A - B - 2}, {1, 2}}),
                 "g(" + std::to_string(A) + "," + std::to_string(B) + ") at z = " + std::to_string(z));
      }
    }
    const twodim::CascadeTranscript tr = twodim::cascade_solve(z);
    bool nonzero = true;
    for (const auto& p : tr.pivots) nonzero = nonzero && !p.factor.is_zero();
    t.expect(tr.complete && nonzero, "cascade completes at z = " + std::to_string(z));
    t.expect(!tr.pivots.empty() && tr.pivots.front().factor == GaussianRational(0, z),
             "first pivot factor i*z at z = " + std::to_string(z));
  }
}

void star_axioms(Tally& t) {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  const ConnectionSpec c = curved_fixture();
  const AbelianCorrection r = abelian_r(m, c, 6);
  const HbarPolynomial one = fn(BasePolynomial::constant(2, 1));
  Gen g(1009);
  for (int trial = 0; trial < 10; ++trial) {
    const BasePolynomial a = g.polynomial(2, 3);
    const BasePolynomial b = g.polynomial(2, 3);
    const BasePolynomial e = g.polynomial(2, 2, 2);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    t.expect(star(m, c, r, one, fn(a), 3) == fn(a) && star(m, c, r, fn(a), one, 3) == fn(a), "unit law" + tag);
    const HbarPolynomial ab = star(m, c, r, fn(a), fn(b), 3);
    const HbarPolynomial ba = star(m, c, r, fn(b), fn(a), 3);
    t.expect(coeff_at(ab, 0) == a * b, "hbar^0 part is the pointwise product" + tag);
    t.expect(coeff_at(ab, 1) - coeff_at(ba, 1) == poisson_bracket(m, a, b) * GaussianRational::i(),
             "hbar^1 commutator is i {a, b}" + tag);
    const HbarPolynomial left = star(m, c, r, ab, fn(e), 3);
    const HbarPolynomial right = star(m, c, r, fn(a), star(m, c, r, fn(b), fn(e), 3), 3);
    t.expect(left == right, "associativity through hbar^3" + tag);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "operator identities", 30, operator_identities},
      {2, "Weyl algebra degree additivity and associativity", 60, weyl_algebra},
      {3, "2D closed form and f values", 30, two_dim_closed_form},
      {4, "curvature symmetries and routes", 0, curvature},
      {5, "flat 2D Abelian connection and Moyal product", 10, flat_abelian},
      {6, "curved 2D Abelian connection", 120, curved_abelian},
      {7, "4D commuting fixture is finite", 0, finiteness},
      {8, "square nonvanishing, g coefficients, cascade", 120, square_and_cascade},
      {9, "star product axioms", 120, star_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Tally tally;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = error.empty() && tally.ok() && in_time;
    if (!pass) ++failures;
    std::string limit = c.limit_seconds == 0 ? "" : " < " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    std::printf("%s  %d  %s: %d checks, %.2f s%s", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), tally.checks(), seconds,
                limit.c_str());
    if (!error.empty()) std::printf("; error: %s", error.c_str());
    if (!tally.ok()) std::printf("; first failure: %s", tally.first_failure().c_str());
    if (!in_time) std::printf("; time limit exceeded");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
