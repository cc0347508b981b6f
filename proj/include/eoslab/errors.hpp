#pragma once

#include <stdexcept>
#include <string>

namespace eoslab {

// Argument outside the mathematical domain of an operation (k <= 2, z2 > z1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// gcd(n, m) != 1 when an inverse was requested.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request exceeds a precomputed table (sieve limit, Buchstab grid, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Supplied data violates a stated bound (divisor bound on weights, |c_r| <= 1).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace eoslab
