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

#include "fedosov/polynomial.hpp"

#include <numeric>

#include "fedosov/errors.hpp"

namespace fedosov {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

BasePolynomial BasePolynomial::constant(std::size_t nvars, const GaussianRational& c) {
  BasePolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

BasePolynomial BasePolynomial::variable(std::size_t nvars, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > nvars) {
    throw DomainError("variable index " + std::to_string(k) + " out of range 1.." + std::to_string(nvars));
  }
  Exponents e(nvars, 0);
  e[k - 1] = 1;
  return monomial(std::move(e), 1);
}

BasePolynomial BasePolynomial::monomial(Exponents exps, const GaussianRational& c) {
  BasePolynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool BasePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussianRational BasePolynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

GaussianRational BasePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int BasePolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void BasePolynomial::add_term(const Exponents& exps, const GaussianRational& c) {
  if (exps.size() != nvars_) {
    if (nvars_ == 0 && terms_.empty()) {
      nvars_ = exps.size();
    } else if (total_degree(exps) == 0 && exps.size() < nvars_) {
      add_term(Exponents(nvars_, 0), c);
      return;
    } else {
      promote(exps.size());
      if (exps.size() != nvars_) throw DomainError("BasePolynomial: exponent length mismatch");
    }
  }
  for (int x : exps) {
    if (x < 0) throw DomainError("BasePolynomial: negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BasePolynomial::promote(std::size_t nvars) {
  if (nvars == nvars_) return;
  if (nvars_ != 0) throw DomainError("BasePolynomial: polynomials over different variable counts");
  Map promoted;
  for (auto& [e, c] : terms_) promoted.emplace(Exponents(nvars, 0), std::move(c));
  terms_ = std::move(promoted);
  nvars_ = nvars;
}

std::size_t BasePolynomial::unify(const BasePolynomial& o) const {
  if (nvars_ == o.nvars_ || o.nvars_ == 0) return nvars_;
  if (nvars_ == 0) return o.nvars_;
  throw DomainError("BasePolynomial: polynomials over different variable counts");
}

BasePolynomial& BasePolynomial::operator+=(const BasePolynomial& o) {
  promote(unify(o));
  for (const auto& [e, c] : o.terms_) add_term(e.size() == nvars_ ? e : Exponents(nvars_, 0), c);
  return *this;
}

BasePolynomial& BasePolynomial::operator-=(const BasePolynomial& o) {
  promote(unify(o));
  for (const auto& [e, c] : o.terms_) add_term(e.size() == nvars_ ? e : Exponents(nvars_, 0), -c);
  return *this;
}

BasePolynomial& BasePolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

BasePolynomial BasePolynomial::operator-() const {
  BasePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b) {
  const std::size_t n = a.unify(b);
  BasePolynomial out(n);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(n, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) {
        e[k] = (ea.empty() ? 0 : ea[k]) + (eb.empty() ? 0 : eb[k]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const BasePolynomial& a, const BasePolynomial& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  // One side is a constant over zero variables.
  if (!a.is_constant() || !b.is_constant()) return false;
  return a.terms_.size() == b.terms_.size() && a.terms_.begin()->second == b.terms_.begin()->second;
}

namespace {

// Sign-aware rendering of a coefficient in front of a monomial.
struct CoeffText {
  bool negative = false;
  std::string magnitude;  // empty for a unit coefficient in front of a monomial
};

CoeffText render_coefficient(const GaussianRational& c, bool has_monomial) {
  CoeffText out;
  GaussianRational mag = c;
  if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
    out.negative = true;
    mag = -c;
  }
  if (mag == GaussianRational(1) && has_monomial) return out;
  out.magnitude = mag.to_string();
  if (!mag.is_real() && sgn(mag.re()) != 0) out.magnitude = "(" + out.magnitude + ")";
  return out;
}

}  // namespace

std::string BasePolynomial::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    CoeffText ct = render_coefficient(c, !mono.empty());
    if (first) {
      if (ct.negative) out += "-";
    } else {
      out += ct.negative ? " - " : " + ";
    }
    first = false;
    out += ct.magnitude;
    if (!ct.magnitude.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

BasePolynomial poly_dq(const BasePolynomial& p, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > p.nvars()) {
    if (p.nvars() == 0 && k >= 1) return BasePolynomial{};
    throw DomainError("poly_dq: coordinate index " + std::to_string(k) + " out of range");
  }
  BasePolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k - 1] == 0) continue;
    Exponents d = e;
    d[k - 1] -= 1;
    out.add_term(d, c * GaussianRational(e[k - 1]));
  }
  return out;
}

}  // namespace fedosov
