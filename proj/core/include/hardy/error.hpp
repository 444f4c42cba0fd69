// Copyright 2026 The Hardy-Heisenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARDY_ERROR_HPP_
#define HARDY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hardy {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension mismatch, non-positive radii, bad indices.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A point or support lies outside the set an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exponents (n, p, s, alpha) outside the regime an operation requires.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// A Hardy quotient whose numerator or denominator cannot be resolved.
class UndefinedQuotientError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy

#endif  // HARDY_ERROR_HPP_
