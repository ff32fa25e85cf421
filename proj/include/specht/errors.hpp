#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Malformed textual input (partitions, matrices, options).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside the range where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Data that contradicts itself (e.g. more p-parts than the rank).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A vector that was expected to lie in a Specht module does not.
class MembershipError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace specht
