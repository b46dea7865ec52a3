#pragma once

#include <stdexcept>
#include <string>

namespace coxh {

// Malformed text input (numbers, coordinate lists, group names).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A well-formed request that violates a mathematical precondition:
// non-dominant seed, group mismatch, index out of range, ...
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : DomainError {
  DivisionByZero() : DomainError("division by zero in Q(tau)") {}
};

struct SizeLimitExceeded : DomainError {
  using DomainError::DomainError;
};

} // namespace coxh
