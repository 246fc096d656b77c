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

#include <doctest.h>

#include "fedosov/calculus.hpp"
#include "fedosov/errors.hpp"
#include "fedosov/geometry.hpp"
#include "generators.hpp"

using namespace fedosov;
using fedosov::testing::Gen;

namespace {

BasePolynomial constant(int dim, const GaussianRational& c) {
  return BasePolynomial::constant(static_cast<std::size_t>(dim), c);
}

ConnectionSpec curved_fixture(const GaussianRational& a = 1, const GaussianRational& b = 1) {
  ConnectionSpec c(2);
  c.set(1, 1, 1, constant(2, a));
  c.set(2, 2, 2, constant(2, b));
  return c;
}

ConnectionSpec commuting_fixture() {
  ConnectionSpec c(4);
  c.set(1, 1, 1, BasePolynomial::variable(4, 3));
  return c;
}

}  // namespace

TEST_CASE("connection input is validated") {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  CHECK(validate(m, ConnectionSpec::flat(2)).ok);
  CHECK(validate(m, curved_fixture()).ok);

  const std::vector<GammaEntry> asymmetric{{{1, 1, 2}, constant(2, 1)}, {{1, 2, 1}, constant(2, 2)}};
  const ValidationReport bad = validate(m, asymmetric);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.problems.size() == 1);
  CHECK(bad.problems[0].find("(1,1,2)") != std::string::npos);
  CHECK(bad.problems[0].find("(1,2,1)") != std::string::npos);
  CHECK_THROWS_AS(ConnectionSpec::from_entries(2, asymmetric), ValidationError);

  const std::vector<GammaEntry> consistent{{{1, 1, 2}, constant(2, 3)}, {{2, 1, 1}, constant(2, 3)}};
  const ValidationReport good = validate(m, consistent);
  CHECK(good.ok);
  CHECK(good.independent_entries == 1);
  CHECK(good.max_independent_entries == 4);
  const ConnectionSpec c = ConnectionSpec::from_entries(2, consistent);
  CHECK(c(1, 2, 1) == constant(2, 3));
  CHECK(c(2, 1, 1) == constant(2, 3));
  CHECK(c(2, 2, 1).is_zero());

  const std::vector<GammaEntry> out_of_range{{{1, 1, 3}, constant(2, 1)}};
  CHECK_FALSE(validate(m, out_of_range).ok);
  CHECK_THROWS_AS(ConnectionSpec::from_entries(2, out_of_range), ValidationError);
  CHECK(validate(ManifoldSpec::standard(4), ConnectionSpec::flat(4)).max_independent_entries == 20);
}

TEST_CASE("gamma form") {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  CHECK(gamma_form(m, ConnectionSpec::flat(2)).is_zero());
  ConnectionSpec c(2);
  c.set(2, 2, 2, constant(2, 1));
  CHECK(gamma_form(m, c) ==
        WeylSeries::monomial(2, TermKey{0, {0, 2}, {2}}, GaussianRational::fraction(1, 2)));
  Gen g(201);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 4;
    const WeylSeries gamma = gamma_form(ManifoldSpec::standard(dim), g.connection(dim, 2, 4));
    for (const auto& [k, coeff] : gamma.terms()) {
      CHECK(k.degree() == 2);
      CHECK(k.form_degree() == 1);
    }
  }
}

TEST_CASE("curvature tensor fixtures") {
  const ManifoldSpec m2 = ManifoldSpec::standard(2);
  CHECK(curvature_tensor(m2, ConnectionSpec::flat(2)).is_zero());

  const CurvatureTensor r = curvature_tensor(m2, curved_fixture());
  CHECK(r(2, 1, 2, 1) == constant(2, -1));
  CHECK(r(1, 2, 2, 1) == constant(2, -1));
  CHECK(r(2, 1, 1, 2) == constant(2, 1));

  const GaussianRational a(3, 1);
  const GaussianRational b = GaussianRational::fraction(-2, 5);
  CHECK(curvature_tensor(m2, curved_fixture(a, b))(2, 1, 2, 1) == constant(2, -(a * b)));

  const ManifoldSpec m4 = ManifoldSpec::standard(4);
  const CurvatureTensor r4 = curvature_tensor(m4, commuting_fixture());
  CHECK(r4(1, 1, 3, 1) == constant(4, 1));
  CHECK(r4(1, 1, 1, 3) == constant(4, -1));
  // Only the linear terms survive: every nonzero entry is a constant of modulus 1.
  for (const auto& [idx, value] : r4.components()) {
    CHECK(value.is_constant());
    const GaussianRational v = value.constant_term();
    CHECK((v == GaussianRational(1) || v == GaussianRational(-1)));
  }
}

TEST_CASE("curvature tensor symmetries on random connections") {
  Gen g(211);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 4;
    const ManifoldSpec m = ManifoldSpec::standard(dim);
    const CurvatureTensor r = curvature_tensor(m, g.connection(dim, 2, 4));
    for (int i = 1; i <= dim; ++i) {
      for (int j = 1; j <= dim; ++j) {
        for (int k = 1; k <= dim; ++k) {
          for (int l = 1; l <= dim; ++l) {
            CHECK(r(i, j, k, l) == r(j, i, k, l));
            CHECK(r(i, j, k, l) == -r(i, j, l, k));
            CHECK((r(i, j, k, l) + r(i, k, l, j) + r(i, l, j, k)).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("the two curvature routes agree") {
  const ManifoldSpec m2 = ManifoldSpec::standard(2);
  CHECK(curvature_form(m2, ConnectionSpec::flat(2)).is_zero());
  CHECK(curvature_form(m2, curved_fixture(), CurvatureRoute::kTensor) ==
        curvature_form(m2, curved_fixture(), CurvatureRoute::kFormEquation));
  Gen g(223);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 4;
    const ManifoldSpec m = ManifoldSpec::standard(dim);
    const ConnectionSpec c = g.connection(dim, 2, 4);
    const WeylSeries via_form = curvature_form(m, c, CurvatureRoute::kFormEquation);
    CHECK(curvature_form(m, c, CurvatureRoute::kTensor) == via_form);
    CHECK(delta(via_form).is_zero());
    CHECK(delta(delta_inv(via_form)) == via_form);
    for (const auto& [k, coeff] : via_form.terms()) {
      CHECK(k.form_degree() == 2);
      CHECK(k.fiber_degree() == 2);
      CHECK(k.hbar == 0);
    }
  }
  RationalMatrix lower{{0, 0, 2, 0}, {0, 0, 0, 1}, {-2, 0, 0, 0}, {0, -1, 0, 0}};
  const ManifoldSpec custom = ManifoldSpec::from_lower(lower);
  for (int trial = 0; trial < 10; ++trial) {
    const ConnectionSpec c = g.connection(4, 1, 3);
    CHECK(curvature_form(custom, c, CurvatureRoute::kTensor) ==
          curvature_form(custom, c, CurvatureRoute::kFormEquation));
  }
}

TEST_CASE("curvature components are determined by delta inverse") {
  const ManifoldSpec m = ManifoldSpec::standard(2);
  Gen g(227);
  // Two delta-closed 2-forms agree iff their delta inverses agree.
  for (int trial = 0; trial < 10; ++trial) {
    const WeylSeries r1 = curvature_form(m, g.connection(2, 1, 3));
    const WeylSeries r2 = curvature_form(m, g.connection(2, 1, 3));
    CHECK((r1 == r2) == (delta_inv(r1) == delta_inv(r2)));
    CHECK((delta_inv(r1).is_zero()) == r1.is_zero());
  }
}

TEST_CASE("independent curvature components") {
  CHECK(curvature_component_count(2) == 3);
  CHECK(curvature_component_count(4) == 45);
}
