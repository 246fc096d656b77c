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

#include "fedosov/expression.hpp"

#include <cctype>
#include <string>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

HbarPolynomial multiply(const HbarPolynomial& a, const HbarPolynomial& b) {
  HbarPolynomial out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) accumulate(out, ka + kb, ca * cb);
  }
  return out;
}

HbarPolynomial add(HbarPolynomial a, const HbarPolynomial& b, bool subtract) {
  for (const auto& [k, c] : b) accumulate(a, k, subtract ? -c : c);
  return a;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool allow_hbar)
      : text_(text), nvars_(nvars), allow_hbar_(allow_hbar) {}

  HbarPolynomial parse() {
    HbarPolynomial out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  HbarPolynomial constant(const GaussianRational& c) const {
    HbarPolynomial out;
    accumulate(out, 0, BasePolynomial::constant(nvars_, c));
    return out;
  }

  HbarPolynomial expression() {
    HbarPolynomial out;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    out = add(out, term(), negate);
    for (;;) {
      if (accept('+')) {
        out = add(out, term(), false);
      } else if (accept('-')) {
        out = add(out, term(), true);
      } else {
        return out;
      }
    }
  }

  HbarPolynomial term() {
    HbarPolynomial out = unary();
    for (;;) {
      if (accept('*')) {
        out = multiply(out, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        HbarPolynomial d = unary();
        if (d.size() != 1 || !d.contains(0) || !d.at(0).is_constant()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        const GaussianRational inv = d.at(0).constant_term().inverse();
        out = multiply(out, constant(inv));
      } else {
        return out;
      }
    }
  }

  HbarPolynomial unary() {
    if (accept('-')) return multiply(constant(-1), unary());
    if (accept('+')) return unary();
    return power();
  }

  HbarPolynomial power() {
    HbarPolynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a non-negative integer");
    }
    const long e = std::stol(digits());
    if (e > 1000) fail("exponent too large");
    HbarPolynomial out = constant(1);
    for (long n = 0; n < e; ++n) out = multiply(out, base);
    return out;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > 9) fail("integer literal too long for an exponent or index");
    return std::string(text_.substr(start, pos_ - start));
  }

  HbarPolynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      HbarPolynomial inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return constant(GaussianRational(Rational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "i") return constant(GaussianRational::i());
      if (word == "hbar") {
        if (!allow_hbar_) {
          pos_ = start;
          fail("hbar is not allowed here");
        }
        HbarPolynomial out;
        accumulate(out, 1, BasePolynomial::constant(nvars_, 1));
        return out;
      }
      if (word.size() > 1 && word[0] == 'q' &&
          word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const long k = std::stol(std::string(word.substr(1)));
        if (k < 1 || static_cast<std::size_t>(k) > nvars_) {
          pos_ = start;
          fail("variable " + std::string(word) + " outside q1..q" + std::to_string(nvars_));
        }
        HbarPolynomial out;
        accumulate(out, 0, BasePolynomial::variable(nvars_, static_cast<int>(k)));
        return out;
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  bool allow_hbar_;
  std::size_t pos_ = 0;
};

}  // namespace

HbarPolynomial parse_hbar_polynomial(std::string_view text, std::size_t nvars) {
  return Parser(text, nvars, true).parse();
}

BasePolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  HbarPolynomial p = Parser(text, nvars, false).parse();
  if (p.empty()) return BasePolynomial(nvars);
  return p.at(0);
}

GaussianRational parse_gaussian(std::string_view text) {
  BasePolynomial p = parse_polynomial(text, 0);
  if (!p.is_constant()) throw ParseError("\"" + std::string(text) + "\" is not a constant");
  return p.constant_term();
}

}  // namespace fedosov
