#pragma once

#include <stdexcept>
#include <string>

namespace k3count {

// Raised for malformed arguments: zero orders, empty generator sets,
// non-coprime (p, q) pairs, out-of-range ADE indices.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The constant term of a series is not a unit of Z.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Generators with gcd != 1 span a semigroup with infinite complement.
class InfiniteComplement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A candidate subset of N is not stable under the semigroup action,
// or fails the cogenus condition.
class InvalidModule : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace k3count
