// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_ERRORS_HPP
#define PRYMRANK_ERRORS_HPP

#include <stdexcept>

namespace prymrank {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Section-space level other than the supported {1, 2}.
struct UnsupportedLevel : DomainError {
  using DomainError::DomainError;
};

/// Matrix handed to the rank certifier contains NaN or Inf entries.
struct MatrixInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A section column vanished identically on the sample plan.
struct EvaluationDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Elliptic product system too close to a lattice collision.
struct DegenerateConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Torsion parameters do not have exact order d.
struct OrderViolation : DegenerateConfiguration {
  using DegenerateConfiguration::DegenerateConfiguration;
};

}  // namespace prymrank

#endif
