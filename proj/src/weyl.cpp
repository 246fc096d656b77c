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

#include "fedosov/weyl.hpp"

#include <algorithm>
#include <utility>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

int saturate(long v) { return static_cast<int>(std::min<long>(v, kUnbounded)); }

// Lowest grade that can be nonzero; for a zero series everything up to the
// known bound vanishes.
long lowest_possible_grade(const WeylSeries& a) {
  if (auto d = a.min_degree()) return *d;
  return static_cast<long>(a.known_through()) + 1;
}

void require_same_dim(const WeylSeries& a, const WeylSeries& b) {
  if (a.dim() != b.dim()) throw DomainError("series over different dimensions");
}

}  // namespace

WeylSeries::WeylSeries(int dim, int known_through) : dim_(dim), known_through_(std::min(known_through, kUnbounded)) {
  if (dim <= 0) throw DomainError("WeylSeries: dimension must be positive");
}

WeylSeries WeylSeries::function(int dim, const BasePolynomial& f) {
  WeylSeries out(dim);
  out.add(TermKey{0, Exponents(dim, 0), {}}, f);
  return out;
}

WeylSeries WeylSeries::fiber_variable(int dim, int k) {
  if (k < 1 || k > dim) throw DomainError("fiber index out of range");
  Exponents e(dim, 0);
  e[k - 1] = 1;
  WeylSeries out(dim);
  out.add(TermKey{0, std::move(e), {}}, GaussianRational(1));
  return out;
}

WeylSeries WeylSeries::monomial(int dim, TermKey key, const BasePolynomial& coeff) {
  WeylSeries out(dim);
  out.add(key, coeff);
  return out;
}

WeylSeries WeylSeries::monomial(int dim, TermKey key, const GaussianRational& coeff) {
  return monomial(dim, std::move(key), BasePolynomial::constant(static_cast<std::size_t>(dim), coeff));
}

void WeylSeries::add(const TermKey& key, const BasePolynomial& coeff) {
  if (static_cast<int>(key.fiber.size()) != dim_) throw DomainError("TermKey fiber length does not match dimension");
  if (key.hbar < 0) throw DomainError("negative hbar power");
  if (key.form_degree() > dim_) throw DomainError("form degree exceeds dimension");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WeylSeries::add(const TermKey& key, const GaussianRational& coeff) {
  add(key, BasePolynomial::constant(static_cast<std::size_t>(dim_), coeff));
}

BasePolynomial WeylSeries::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BasePolynomial(static_cast<std::size_t>(dim_)) : it->second;
}

WeylSeries& WeylSeries::operator+=(const WeylSeries& o) {
  require_same_dim(*this, o);
  known_through_ = std::min(known_through_, o.known_through_);
  for (const auto& [k, c] : o.terms_) add(k, c);
  if (!is_exact()) *this = truncated(known_through_);
  return *this;
}

WeylSeries& WeylSeries::operator-=(const WeylSeries& o) {
  require_same_dim(*this, o);
  known_through_ = std::min(known_through_, o.known_through_);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  if (!is_exact()) *this = truncated(known_through_);
  return *this;
}

WeylSeries& WeylSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coeff] : terms_) coeff *= c;
  return *this;
}

WeylSeries& WeylSeries::operator*=(const BasePolynomial& f) {
  Map out;
  for (auto& [k, coeff] : terms_) {
    BasePolynomial p = coeff * f;
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

WeylSeries WeylSeries::operator-() const {
  WeylSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

WeylSeries WeylSeries::truncated(int n) const {
  WeylSeries out(dim_, std::min(n, known_through_));
  for (const auto& [k, c] : terms_) {
    if (k.degree() <= n) out.terms_.emplace(k, c);
  }
  return out;
}

WeylSeries WeylSeries::with_known_through(int n) const {
  WeylSeries out(dim_, n);
  for (const auto& [k, c] : terms_) {
    if (k.degree() <= n) out.terms_.emplace(k, c);
  }
  return out;
}

WeylSeries WeylSeries::grade(int z) const {
  WeylSeries out(dim_, known_through_);
  for (const auto& [k, c] : terms_) {
    if (k.degree() == z) out.terms_.emplace(k, c);
  }
  return out;
}

WeylSeries WeylSeries::form_part(int m) const {
  WeylSeries out(dim_, known_through_);
  for (const auto& [k, c] : terms_) {
    if (k.form_degree() == m) out.terms_.emplace(k, c);
  }
  return out;
}

std::set<int> WeylSeries::form_degrees() const {
  std::set<int> out;
  for (const auto& [k, c] : terms_) out.insert(k.form_degree());
  return out;
}

std::optional<int> WeylSeries::min_degree() const {
  std::optional<int> out;
  for (const auto& [k, c] : terms_) out = std::min(out.value_or(k.degree()), k.degree());
  return out;
}

std::optional<int> WeylSeries::max_degree() const {
  std::optional<int> out;
  for (const auto& [k, c] : terms_) out = std::max(out.value_or(k.degree()), k.degree());
  return out;
}

std::string WeylSeries::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string coeff = c.to_string();
    if (c.size() > 1 || coeff.find_first_of("+ ") != std::string::npos) coeff = "(" + coeff + ")";
    out += coeff;
    if (k.hbar > 0) out += " hbar" + (k.hbar > 1 ? "^" + std::to_string(k.hbar) : std::string{});
    for (std::size_t i = 0; i < k.fiber.size(); ++i) {
      if (k.fiber[i] == 0) continue;
      out += " X" + std::to_string(i + 1);
      if (k.fiber[i] > 1) out += "^" + std::to_string(k.fiber[i]);
    }
    for (std::size_t i = 0; i < k.form.size(); ++i) {
      out += (i == 0 ? " dq" : "∧dq") + std::to_string(k.form[i]);
    }
    out += "\n";
  }
  return out;
}

int product_known_through(const WeylSeries& a, const WeylSeries& b) {
  long via_a = static_cast<long>(a.known_through()) + lowest_possible_grade(b);
  long via_b = static_cast<long>(b.known_through()) + lowest_possible_grade(a);
  return saturate(std::min(via_a, via_b));
}

namespace {

struct Contraction {
  int t;
  Exponents fiber;
  GaussianRational factor;
};

using FiberPair = std::pair<Exponents, Exponents>;

// All terms of X^alpha o X^beta: the t-th power of the bidifferential
// operator omega^{ij} d_i (x) d_j divided by t!, times (i/2)^t.
std::vector<Contraction> contract(const ManifoldSpec& m, const Exponents& alpha, const Exponents& beta) {
  std::vector<Contraction> out;
  std::map<FiberPair, Rational> current{{{alpha, beta}, Rational(1)}};
  Rational half_power = 1;
  for (int t = 0; !current.empty(); ++t) {
    std::map<Exponents, Rational> by_fiber;
    for (const auto& [pair, c] : current) {
      Exponents f = pair.first;
      for (std::size_t k = 0; k < f.size(); ++k) f[k] += pair.second[k];
      by_fiber[f] += c;
    }
    const GaussianRational scale = i_pow(t) * GaussianRational(half_power);
    for (auto& [f, c] : by_fiber) {
      if (sgn(c) != 0) out.push_back({t, f, scale * GaussianRational(c)});
    }

    std::map<FiberPair, Rational> next;
    const Rational inv_t(1, t + 1);
    for (const auto& [pair, c] : current) {
      for (const auto& e : m.poisson_entries()) {
        const int ai = pair.first[e.i - 1];
        const int bj = pair.second[e.j - 1];
        if (ai == 0 || bj == 0) continue;
        FiberPair nk = pair;
        nk.first[e.i - 1] -= 1;
        nk.second[e.j - 1] -= 1;
        next[nk] += c * e.value * ai * bj * inv_t;
      }
    }
    std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
    current = std::move(next);
    half_power /= 2;
  }
  return out;
}

}  // namespace

WeylSeries circ(const ManifoldSpec& m, const WeylSeries& a, const WeylSeries& b, std::optional<int> cap) {
  require_same_dim(a, b);
  if (a.dim() != m.dim()) throw DomainError("series dimension does not match the manifold");
  const int valid = product_known_through(a, b);
  const int bound = cap.value_or(valid);
  if (bound > valid) {
    throw TruncationError("circ: operands known through " + std::to_string(a.known_through()) + " and " +
                          std::to_string(b.known_through()) + " determine the product only through grade " +
                          std::to_string(valid) + ", requested " + std::to_string(bound));
  }
  WeylSeries out(a.dim(), bound);
  std::map<FiberPair, std::vector<Contraction>> cache;
  for (const auto& [ka, ca] : a.terms()) {
    const int da = ka.degree();
    for (const auto& [kb, cb] : b.terms()) {
      if (da + kb.degree() > bound) continue;
      NormalizedWedge w = wedge_concat(ka.form, kb.form, a.dim());
      if (w.sign == 0) continue;
      auto it = cache.find({ka.fiber, kb.fiber});
      if (it == cache.end()) it = cache.emplace(FiberPair{ka.fiber, kb.fiber}, contract(m, ka.fiber, kb.fiber)).first;
      BasePolynomial coeff = ca * cb;
      if (w.sign < 0) coeff = -coeff;
      for (const auto& c : it->second) {
        out.add(TermKey{ka.hbar + kb.hbar + c.t, c.fiber, w.word}, coeff * c.factor);
      }
    }
  }
  return out;
}

WeylSeries commutator(const ManifoldSpec& m, const WeylSeries& a, const WeylSeries& b, std::optional<int> cap) {
  require_same_dim(a, b);
  const int valid = product_known_through(a, b);
  const int bound = cap.value_or(valid);
  if (bound > valid) {
    throw TruncationError("commutator: operands determine the result only through grade " + std::to_string(valid));
  }
  WeylSeries out(a.dim(), bound);
  for (int m1 : a.form_degrees()) {
    const WeylSeries pa = a.form_part(m1);
    for (int m2 : b.form_degrees()) {
      const WeylSeries pb = b.form_part(m2);
      out += circ(m, pa, pb, bound);
      if ((m1 * m2) % 2 == 0) {
        out -= circ(m, pb, pa, bound);
      } else {
        out += circ(m, pb, pa, bound);
      }
    }
  }
  return out;
}

std::string DegreeInfo::to_string() const {
  if (exact) return value ? std::to_string(*value) : "undefined (zero series)";
  std::string known = value ? "max known grade " + std::to_string(*value) : "zero through grade " + std::to_string(known_through);
  return known + "; grades >= " + std::to_string(known_through + 1) + " unknown";
}

DegreeInfo degree(const WeylSeries& a) { return DegreeInfo{a.max_degree(), a.is_exact(), a.known_through()}; }

HbarPolynomial sigma(const WeylSeries& a) {
  HbarPolynomial out;
  for (const auto& [k, c] : a.terms()) {
    if (k.form_degree() != 0) throw DomainError("sigma: series has a nonzero form part");
    if (k.fiber_degree() == 0) accumulate(out, k.hbar, c);
  }
  return out;
}

WeylSeries from_hbar_polynomial(int dim, const HbarPolynomial& f) {
  WeylSeries out(dim);
  for (const auto& [k, c] : f) out.add(TermKey{k, Exponents(dim, 0), {}}, c);
  return out;
}

WeylSeries grade_part(const WeylSeries& a, int k, int l) {
  if (k < 0 || l < 0) throw DomainError("grade_part: negative index");
  if (2 * k + l > a.known_through()) {
    throw TruncationError("grade_part: grade " + std::to_string(2 * k + l) + " beyond known bound " +
                          std::to_string(a.known_through()));
  }
  WeylSeries out(a.dim(), a.known_through());
  for (const auto& [key, c] : a.terms()) {
    if (key.hbar == k && key.fiber_degree() == l) out.add(key, c);
  }
  return out;
}

WeylSeries div_ihbar(const WeylSeries& a) {
  const int known = a.is_exact() ? kUnbounded : a.known_through() - 2;
  WeylSeries out(a.dim(), known);
  const GaussianRational minus_i = -GaussianRational::i();
  for (const auto& [k, c] : a.terms()) {
    if (k.hbar == 0) {
      throw DivisibilityError("div_ihbar: term of grade " + std::to_string(k.degree()) +
                              " has no hbar factor; the commutator did not cancel at order hbar^0");
    }
    TermKey nk = k;
    nk.hbar -= 1;
    out.add(nk, c * minus_i);
  }
  return out;
}

HbarPolynomial& accumulate(HbarPolynomial& into, int power, const BasePolynomial& c) {
  if (c.is_zero()) return into;
  auto [it, inserted] = into.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
  return into;
}

std::string to_string(const HbarPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : p) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    if (k == 0) {
      out += coeff;
      continue;
    }
    out += "hbar" + (k > 1 ? "^" + std::to_string(k) : std::string{}) + "*(" + coeff + ")";
  }
  return out;
}

}  // namespace fedosov
