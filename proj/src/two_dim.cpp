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

#include "fedosov/two_dim.hpp"

#include <algorithm>
#include <set>

#include "fedosov/calculus.hpp"
#include "fedosov/errors.hpp"

namespace fedosov::twodim {

namespace {

const ManifoldSpec& plane() {
  static const ManifoldSpec m = ManifoldSpec::standard(2);
  return m;
}

}  // namespace

Rational f_coeff(int r, int j, int s, int k, int t) {
  if (r < 0 || j < 0 || s < 0 || k < 0 || t < 0) throw DomainError("f_coeff: negative argument");
  if (t > std::min(r, k) + std::min(j, s)) {
    throw DomainError("f_coeff: t = " + std::to_string(t) + " exceeds min[r,k] + min[j,s] = " +
                      std::to_string(std::min(r, k) + std::min(j, s)));
  }
  const int lo = std::max({t - r, t - k, 0});
  const int hi = std::min({j, s, t});
  Rational sum = 0;
  for (int a = lo; a <= hi; ++a) {
    Integer den = factorial(a) * factorial(t - a) * factorial(r - t + a) * factorial(j - a) * factorial(s - a) *
                  factorial(k - t + a);
    Rational term(Integer(1), den);
    term.canonicalize();
    if (a % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Integer scale = factorial(r) * factorial(j) * factorial(s) * factorial(k);
  Integer two_t;
  mpz_ui_pow_ui(two_t.get_mpz_t(), 2, static_cast<unsigned long>(t));
  Rational out = sum * Rational(scale) / Rational(two_t);
  return out;
}

WeylSeries monomial_circ(int r, int j, int s, int k) {
  if (r < 0 || j < 0 || s < 0 || k < 0) throw DomainError("monomial_circ: negative exponent");
  WeylSeries out(2);
  const int top = std::min(r, k) + std::min(j, s);
  for (int t = 0; t <= top; ++t) {
    const Rational f = f_coeff(r, j, s, k, t);
    if (sgn(f) == 0) continue;
    out.add(TermKey{t, {r + s - t, k + j - t}, {}}, i_pow(t) * GaussianRational(f));
  }
  return out;
}

CoefficientTable::CoefficientTable(int z) : z_(z), zero_(2) {
  if (z < 1) throw DomainError("CoefficientTable: z must be >= 1");
}

std::vector<BIndex> CoefficientTable::indices() const {
  std::vector<BIndex> out;
  for (int k = 0; k <= max_k(); ++k) {
    for (int l = 0; l <= z_ - 1 - 4 * k; ++l) out.emplace_back(k, l);
  }
  return out;
}

bool CoefficientTable::admissible(int k, int l) const { return k >= 0 && k <= max_k() && l >= 0 && l <= z_ - 1 - 4 * k; }

const BasePolynomial& CoefficientTable::operator()(int k, int l) const {
  auto it = b_.find({k, l});
  return it == b_.end() ? zero_ : it->second;
}

void CoefficientTable::set(int k, int l, const BasePolynomial& value) {
  if (!admissible(k, l)) throw DomainError("CoefficientTable: " + name(k, l) + " outside the table");
  if (value.is_zero()) {
    b_.erase({k, l});
  } else {
    b_[{k, l}] = value;
  }
}

void CoefficientTable::set(int k, int l, const GaussianRational& value) {
  set(k, l, BasePolynomial::constant(2, value));
}

bool CoefficientTable::is_zero() const { return b_.empty(); }

WeylSeries CoefficientTable::to_form() const {
  WeylSeries out(2);
  for (const auto& [idx, value] : b_) {
    const auto [k, l] = idx;
    out.add(TermKey{2 * k, {l, z_ - 1 - 4 * k - l}, {1, 2}}, value * GaussianRational(z_ - 4 * k + 1));
  }
  return out;
}

CoefficientTable CoefficientTable::from_form(const WeylSeries& f) {
  if (f.dim() != 2) throw DomainError("expected a 2D form");
  if (f.is_zero()) throw DomainError("the zero form does not fix a degree");
  const int z = *f.max_degree() + 1;
  CoefficientTable out(z);
  for (const auto& [key, c] : f.terms()) {
    if (key.form != WedgeWord{1, 2}) throw DomainError("F must be a 2-form dq ^ dp");
    if (key.degree() != z - 1) throw DomainError("F must be homogeneous");
    if (key.hbar % 2 != 0) throw DomainError("F must contain only even powers of hbar");
    const int k = key.hbar / 2;
    out.set(k, key.fiber[0], c * GaussianRational::fraction(1, z - 4 * k + 1));
  }
  return out;
}

std::string CoefficientTable::name(int k, int l) { return "b_{" + std::to_string(2 * k) + "," + std::to_string(l) + "}"; }

std::vector<QuadraticTerm> g_terms(int z, int A, int B) {
  if (A < 0 || B < 0 || 4 * A + B + 2 > 2 * z) {
    throw DomainError("g_coeff: (A,B) = (" + std::to_string(A) + "," + std::to_string(B) +
                      ") outside 4A + B + 2 <= 2z");
  }
  const int kmax = (z - 1) / 4;
  const int half = (z - 1) / 2;
  const GaussianRational two_i = GaussianRational(0, 2);
  std::vector<QuadraticTerm> out;
  for (int k = 0; k <= std::min(A, kmax); ++k) {
    const int w_lo = std::max(0, A + k - half);
    const int w_hi = std::min({kmax, A - k, k - A + half});
    for (int w = w_lo; w <= w_hi; ++w) {
      const int l_lo = std::max(0, 2 * A + B - z - 2 * k + 2 * w + 1);
      const int l_hi = std::min(z - 1 - 4 * k, 2 * A + B - 2 * k - 2 * w);
      for (int l = l_lo; l <= l_hi; ++l) {
        const int r = 2 * A + B - 2 * k - 2 * w - l;
        const int u = A - k - w;
        const Rational f = f_coeff(l + 1, z - 1 - 4 * k - l, r, z - 2 * A - B + 2 * k - 2 * w + l, 2 * u + 1);
        if (sgn(f) == 0) continue;
        GaussianRational factor = two_i * GaussianRational(f);
        if (u % 2 != 0) factor = -factor;
        out.push_back({{k, l}, {w, r}, factor});
      }
    }
  }
  return out;
}

BasePolynomial g_coeff(const CoefficientTable& b, int A, int B) {
  BasePolynomial out(2);
  for (const auto& term : g_terms(b.z(), A, B)) {
    out += b(term.left.first, term.left.second) * b(term.right.first, term.right.second) * term.factor;
  }
  return out;
}

std::vector<std::pair<int, int>> admissible_AB(int z) {
  std::vector<std::pair<int, int>> out;
  for (int A = 0; 4 * A + 2 <= 2 * z; ++A) {
    for (int B = 0; 4 * A + B + 2 <= 2 * z; ++B) out.emplace_back(A, B);
  }
  return out;
}

SquareCheck square_check(const WeylSeries& f) {
  SquareCheck out;
  if (f.is_zero()) return out;
  (void)CoefficientTable::from_form(f);  // shape validation
  const WeylSeries d = delta_inv(f);
  out.square = circ(plane(), d, d);
  if (!out.square.is_zero()) {
    out.zero = false;
    out.witness = *out.square.terms().begin();
  }
  return out;
}

std::string CascadeTranscript::to_string() const {
  std::string out = "cascade z=" + std::to_string(z) + "\n";
  for (const auto& p : pivots) {
    const std::string b = CoefficientTable::name(p.eliminated.first, p.eliminated.second);
    out += "  (A,B)=(" + std::to_string(p.A) + "," + std::to_string(p.B) + "): " + p.factor.to_string() + " * " + b +
           "^2 = 0  =>  " + b + " = 0\n";
  }
  out += complete ? "all b = 0\n" : "incomplete\n";
  return out;
}

CascadeTranscript cascade_solve(int z) {
  CascadeTranscript transcript;
  transcript.z = z;
  const CoefficientTable shape(z);
  std::set<BIndex> alive;
  for (const auto& idx : shape.indices()) alive.insert(idx);
  const auto equations = admissible_AB(z);

  // Equations do not change as b's are eliminated, only their surviving
  // terms do; precompute them.
  std::vector<std::vector<QuadraticTerm>> terms;
  terms.reserve(equations.size());
  for (const auto& [A, B] : equations) terms.push_back(g_terms(z, A, B));

  while (!alive.empty()) {
    bool pivoted = false;
    for (std::size_t e = 0; e < equations.size() && !pivoted; ++e) {
      std::map<std::pair<BIndex, BIndex>, GaussianRational> reduced;
      for (const auto& t : terms[e]) {
        if (!alive.contains(t.left) || !alive.contains(t.right)) continue;
        auto key = std::minmax(t.left, t.right);
        reduced[{key.first, key.second}] += t.factor;
      }
      std::erase_if(reduced, [](const auto& kv) { return kv.second.is_zero(); });
      if (reduced.size() != 1) continue;
      const auto& [pair, factor] = *reduced.begin();
      if (pair.first != pair.second) continue;
      if (factor.is_zero()) throw Error("cascade: zero pivot factor");
      transcript.pivots.push_back({equations[e].first, equations[e].second, pair.first, factor});
      alive.erase(pair.first);
      pivoted = true;
    }
    if (!pivoted) {
      std::string left;
      for (const auto& idx : alive) left += " " + CoefficientTable::name(idx.first, idx.second);
      throw Error("cascade stalled at z = " + std::to_string(z) + " with unknowns" + left);
    }
  }
  transcript.complete = true;
  return transcript;
}

}  // namespace fedosov::twodim
