// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_ERRORS_H
#define QWALK_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, rotation text, cycle notation, ...).
class ParseError : public Error {
   public:
    ParseError(const std::string &what, size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {
    }
    size_t offset() const {
        return offset_;
    }

   private:
    size_t offset_;
};

/// Bad argument values: wrong dimensions, unsupported coin/degree pairs, ...
class ParameterError : public Error {
   public:
    using Error::Error;
};

/// The input violates a structural requirement of a walk model
/// (non-regular graph for the shunt model, non-doubly-stochastic chain, ...).
class PreconditionError : public ParameterError {
   public:
    using ParameterError::ParameterError;
};

/// The coin cannot be attached to a rotation system unambiguously.
class CoinCompatibilityError : public ParameterError {
   public:
    using ParameterError::ParameterError;
};

/// Linear orders whose labels collide at some vertex, so S is not a permutation.
class InvalidOrdersError : public ParameterError {
   public:
    InvalidOrdersError(int vertex, int label)
        : ParameterError(
              "invalid linear orders: vertex " + std::to_string(vertex) + " receives label " +
              std::to_string(label) + " from two in-arcs"),
          vertex_(vertex),
          label_(label) {
    }
    int vertex() const {
        return vertex_;
    }
    int label() const {
        return label_;
    }

   private:
    int vertex_;
    int label_;
};

/// Graph too large for the requested encoding.
class UnsupportedSizeError : public ParameterError {
   public:
    using ParameterError::ParameterError;
};

/// A computed quantity broke an identity that must hold by construction.
class InternalConsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace qwalk

#endif
