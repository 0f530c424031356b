#pragma once

#include <stdexcept>
#include <string>

namespace eur {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A logarithm or square root would be taken of a nonpositive quantity.
class SingularValueError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Root finder called on an interval whose ends do not straddle a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An oracle assertion did not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eur
