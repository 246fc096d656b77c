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

#pragma once

#include <stdexcept>
#include <string>

namespace fedosov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (index out of range,
/// negative factorial argument, mismatched dimensions, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated series does not carry enough grades for the requested result.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Division by i*hbar met a term with no hbar factor.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// Manifold or connection data violates the symplectic invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (expressions, manifests, dumps).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural hypothesis required by an operation does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace fedosov
