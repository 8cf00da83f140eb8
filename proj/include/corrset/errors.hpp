// Copyright 2026 The corrset Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace corrset {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A correlator lies outside [-1-tol, 1+tol]. `component()` is 1-based.
class OutOfBoxError : public Error {
   public:
    OutOfBoxError(int component, double value);
    int component() const { return component_; }
    double value() const { return value_; }

   private:
    int component_;
    double value_;
};

class NonFiniteError : public Error {
   public:
    explicit NonFiniteError(int component);
    int component() const { return component_; }

   private:
    int component_;
};

class NotSOrderedError : public Error {
   public:
    using Error::Error;
};

class NotOnBoundaryError : public Error {
   public:
    using Error::Error;
};

class NotInQError : public Error {
   public:
    using Error::Error;
};

class BisectionError : public Error {
   public:
    using Error::Error;
};

class PreconditionError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

class DomainError : public Error {
   public:
    using Error::Error;
};

/// A realization failed one of its structural checks. `check()` names it,
/// e.g. "trace(state)" or "A1^2 = I".
class InvariantViolation : public Error {
   public:
    InvariantViolation(std::string check, const std::string &detail);
    const std::string &check() const { return check_; }

   private:
    std::string check_;
};

}  // namespace corrset
