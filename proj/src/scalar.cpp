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

#include "fedosov/scalar.hpp"

#include <ostream>

#include "fedosov/errors.hpp"

namespace fedosov {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw DomainError("GaussianRational::fraction: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("GaussianRational: division by zero");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw DomainError("GaussianRational: division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (is_real()) return re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "i";
  } else if (im_ == -1) {
    im = "-i";
  } else {
    im = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im;
  if (im.front() == '-') return re_.get_str() + im;
  return re_.get_str() + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

GaussianRational i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return 1;
    case 1:
      return GaussianRational::i();
    case 2:
      return -1;
    default:
      return -GaussianRational::i();
  }
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational factorial_ratio(std::span<const long> numerators, std::span<const long> denominators) {
  Integer num = 1;
  Integer den = 1;
  for (long n : numerators) num *= factorial(n);
  for (long d : denominators) den *= factorial(d);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace fedosov
