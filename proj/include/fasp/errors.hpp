// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fasp {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature refinement exhausted without meeting the tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double previous, double last)
      : std::runtime_error(what), previous_(previous), last_(last) {}

  double previous_estimate() const { return previous_; }
  double last_estimate() const { return last_; }

 private:
  double previous_;
  double last_;
};

/// A plan whose continuation probability is one never terminates.
class DegeneratePlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form probability left [0, 1] by more than rounding noise.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No point satisfying the constraints was found.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, double best_violation)
      : std::runtime_error(what), best_violation_(best_violation) {}

  double best_violation() const { return best_violation_; }

 private:
  double best_violation_;
};

/// Malformed input data or configuration.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fasp
