#pragma once

#include <stdexcept>
#include <string>

namespace pass {

/// Invalid configuration or parameter outside a type's invariants.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested mode is below cut-off: k_r <= k_c, no propagating wave.
class EvanescentModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Lateration system has fewer than two distinct PA positions.
class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted normal matrix is numerically singular.
class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pass
