// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

/// Input outside an operation's mathematical domain (e.g. energy at or below the gap).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnknownMaterialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An occupation function passed to a recombination integral does not decay.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cascade trial exceeded its step budget.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpc
